#include "rescalc/homalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace rescalc {

std::vector<int> expected_ranks(const ChainComplex& c) {
  if (c.truncated) throw AlgebraError("expected ranks need a complete (untruncated) complex");
  std::vector<int> r(c.ranks.size(), 0);
  int acc = 0;
  for (std::size_t k = c.ranks.size(); k-- > 0;) {
    acc = static_cast<int>(c.ranks[k]) - acc;
    r[k] = acc;
  }
  return r;
}

namespace {

// Calls visit(rows, cols) on every r x r minor position in lexicographic
// row-then-column order; stops early when visit returns false.
void for_each_minor(const PolyMatrix& m, std::size_t r,
                    const std::function<bool(const Polynomial&)>& visit) {
  std::vector<std::size_t> rows(r), cols(r);
  auto first = [](std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  };
  auto next = [](std::vector<std::size_t>& s, std::size_t n) {
    for (std::size_t i = s.size(); i-- > 0;) {
      if (s[i] < n - s.size() + i) {
        ++s[i];
        for (std::size_t j = i + 1; j < s.size(); ++j) s[j] = s[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  first(rows);
  do {
    first(cols);
    do {
      PolyMatrix sub(m.ring(), r, r);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) sub(a, b) = m(rows[a], cols[b]);
      if (!visit(determinant(sub))) return;
    } while (next(cols, m.cols()));
  } while (next(rows, m.rows()));
}

}  // namespace

Ideal minors_ideal(const PolyMatrix& m, std::size_t r) {
  if (r == 0) return Ideal::unit(m.ring());
  if (r > std::min(m.rows(), m.cols())) return Ideal(m.ring(), {});
  std::vector<Polynomial> gens;
  for_each_minor(m, r, [&](const Polynomial& d) {
    if (!d.is_zero() && std::find(gens.begin(), gens.end(), d) == gens.end() &&
        std::find(gens.begin(), gens.end(), -d) == gens.end())
      gens.push_back(d);
    return true;
  });
  return Ideal(m.ring(), std::move(gens));
}

std::size_t generic_rank(const PolyMatrix& m, const QuotientContext& ctx) {
  // A nonzero r-minor expands into (r-1)-minors, one of them nonzero, so the
  // search can stop at the first size with no surviving minor.
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t r = 1; r <= top; ++r) {
    bool found = false;
    for_each_minor(m, r, [&](const Polynomial& d) {
      found = !ctx.reduce(d).is_zero();
      return !found;
    });
    if (!found) return r - 1;
  }
  return top;
}

namespace {

int locus_codim(const Ideal& ideal, const QuotientContext& ctx) {
  if (ctx.is_ambient()) return dimension(ideal).codim;
  return codim_in(ideal, ctx);
}

}  // namespace

ResolutionDiagnostics rank_loci(const ChainComplex& c) {
  ResolutionDiagnostics out;
  if (c.complete()) out.expected_ranks = expected_ranks(c);
  for (std::size_t k = 1; k <= c.length(); ++k) {
    const PolyMatrix& phi = c.phi(k);
    int generic = static_cast<int>(generic_rank(phi, c.context));
    int rank = c.complete() ? std::max(out.expected_ranks[k], 0) : generic;
    Ideal ideal = c.context.lift(minors_ideal(phi, static_cast<std::size_t>(rank)));
    int codim = locus_codim(ideal, c.context);
    out.loci.push_back(RankLocus{k, rank, generic, ideal, codim, codim >= static_cast<int>(k)});
  }
  return out;
}

BEVerdict buchsbaum_eisenbud_check(const ChainComplex& c) {
  BEVerdict v;
  if (c.truncated) {
    v.applicable = false;
    v.reason = "complex truncated at the resolution cap; the criterion needs a finite complex";
    return v;
  }
  if (!c.context.is_ambient()) {
    v.applicable = false;
    v.reason =
        "complex lives over a quotient ring, where resolutions can be infinite "
        "(e.g. (x) over Q[x,y]/(xy)); the criterion is not extended there";
    return v;
  }
  const std::size_t n = c.length();
  std::vector<int> generic(n + 2, 0);
  for (std::size_t k = 1; k <= n; ++k)
    generic[k] = static_cast<int>(generic_rank(c.phi(k), c.context));
  v.passed = true;
  for (std::size_t k = 1; k <= n; ++k) {
    BELevel level{k, generic[k], false, 0, false};
    level.rank_ok = generic[k] + generic[k + 1] == static_cast<int>(c.ranks[k]);
    level.codim = dimension(minors_ideal(c.phi(k), static_cast<std::size_t>(generic[k]))).codim;
    level.codim_ok = level.codim >= static_cast<int>(k);
    if (!(level.rank_ok && level.codim_ok) && v.passed) {
      v.passed = false;
      v.failing_level = k;
    }
    v.levels.push_back(level);
  }
  return v;
}

ProperIntersection proper_intersection_check(const ChainComplex& c, const ChainComplex& d,
                                             int codim_c, int codim_d) {
  if (!same_ring(c.ring(), d.ring())) throw AlgebraError("ring mismatch in intersection check");
  if (c.truncated || d.truncated)
    throw AlgebraError("proper intersection check needs complete complexes");
  ResolutionDiagnostics lc = rank_loci(c);
  ResolutionDiagnostics ld = rank_loci(d);
  ProperIntersection out;
  const long k0 = std::max<long>(codim_c, 1);
  const long l0 = std::max<long>(codim_d, 1);
  for (long k = k0; k <= static_cast<long>(c.length()); ++k)
    for (long l = l0; l <= static_cast<long>(d.length()); ++l) {
      Ideal sum = lc.loci[k - 1].ideal + ld.loci[l - 1].ideal;
      int codim = locus_codim(sum, c.context);
      IntersectionPair pair{static_cast<std::size_t>(k), static_cast<std::size_t>(l), codim};
      out.checked.push_back(pair);
      if (static_cast<long>(codim) < k + l && out.passed) {
        out.passed = false;
        out.witness = pair;
      }
    }
  return out;
}

namespace {

std::vector<std::string> row_key(const PolyMatrix& m, std::size_t r) {
  std::vector<std::string> key;
  for (std::size_t c = 0; c < m.cols(); ++c) key.push_back(m(r, c).to_string());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

PolyMatrix canonicalize(const PolyMatrix& m) {
  const MonomialOrder& order = m.ring()->order();
  PolyMatrix scaled(m);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::optional<Monomial> top;
    std::optional<Rational> pick;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& t : m(r, c).terms()) {
        if (!top || order.compare(t.monomial, *top) > 0) {
          top = t.monomial;
          pick = t.coeff;
        } else if (t.monomial == *top) {
          Rational a = abs(t.coeff), b = abs(*pick);
          if (a > b || (a == b && t.coeff > 0)) pick = t.coeff;
        }
      }
    if (!pick) continue;
    Rational s = 1 / *pick;
    for (std::size_t r = 0; r < m.rows(); ++r) scaled(r, c) = scaled(r, c) * s;
  }

  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  std::vector<std::vector<std::string>> rkeys;
  for (std::size_t r = 0; r < m.rows(); ++r) rkeys.push_back(row_key(scaled, r));
  std::stable_sort(rows.begin(), rows.end(),
                   [&](std::size_t a, std::size_t b) { return rkeys[a] < rkeys[b]; });

  std::vector<std::vector<std::string>> ckeys(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r : rows) ckeys[c].push_back(scaled(r, c).to_string());
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  std::stable_sort(cols.begin(), cols.end(),
                   [&](std::size_t a, std::size_t b) { return ckeys[a] < ckeys[b]; });

  PolyMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = scaled(rows[r], cols[c]);
  return out;
}

bool equal_up_to_units(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return canonicalize(a) == canonicalize(b);
}

PeriodicityReport detect_periodicity(const ChainComplex& c) {
  PeriodicityReport report;
  const std::size_t n = c.length();
  if (c.complete() || n < 4) return report;
  std::vector<PolyMatrix> canon;
  for (const auto& d : c.diffs) canon.push_back(canonicalize(c.context.reduce(d)));
  for (std::size_t offset = 0; offset < n; ++offset)
    for (std::size_t period = 1; 2 * period <= n - offset; ++period) {
      bool repeats = true;
      for (std::size_t k = offset; k + period < n && repeats; ++k)
        repeats = canon[k] == canon[k + period];
      if (repeats) return PeriodicityReport{true, offset, period};
    }
  return report;
}

CohenMacaulayReport cohen_macaulay_check(const Ideal& ideal) {
  if (ideal.is_unit()) throw AlgebraError("Cohen-Macaulay check needs a proper ideal");
  ChainComplex res = free_resolution(ideal);
  int codim = dimension(ideal).codim;
  return CohenMacaulayReport{static_cast<int>(res.length()) == codim, res.length(), codim};
}

}  // namespace rescalc
