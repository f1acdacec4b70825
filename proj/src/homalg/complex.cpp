#include "rescalc/homalg.hpp"

#include <algorithm>
#include <map>

namespace rescalc {

const PolyMatrix& ChainComplex::phi(std::size_t k) const {
  if (k == 0 || k > diffs.size())
    throw AlgebraError("differential index " + std::to_string(k) + " out of range");
  return diffs[k - 1];
}

bool ChainComplex::is_complex() const {
  if (ranks.size() != diffs.size() + 1) return false;
  for (std::size_t k = 1; k <= diffs.size(); ++k) {
    const PolyMatrix& m = diffs[k - 1];
    if (m.rows() != ranks[k - 1] || m.cols() != ranks[k]) return false;
  }
  for (std::size_t k = 1; k < diffs.size(); ++k)
    if (!context.reduce(diffs[k - 1] * diffs[k]).is_zero()) return false;
  return true;
}

ChainComplex free_resolution(const Ideal& gens, int cap, bool minimal) {
  return free_resolution(gens, QuotientContext(gens.ring()), cap, minimal);
}

ChainComplex free_resolution(const Ideal& gens, const QuotientContext& ctx, int cap,
                             bool minimal) {
  if (cap < 1) throw AlgebraError("resolution cap must be positive");
  if (!same_ring(gens.ring(), ctx.ring())) throw AlgebraError("ring mismatch in resolution");
  const RingPtr& ring = ctx.ring();
  ChainComplex c(ctx);
  c.ranks.push_back(1);
  std::vector<Polynomial> row;
  for (const auto& g : gens.generators()) {
    Polynomial r = ctx.reduce(g);
    if (!r.is_zero()) row.push_back(std::move(r));
  }
  if (row.empty()) return c;
  PolyMatrix phi = PolyMatrix::from_rows(ring, {row});
  c.ranks.push_back(phi.cols());
  c.diffs.push_back(phi);
  for (;;) {
    SubmoduleBasis syz = syzygies(SubmoduleBasis::of_columns(phi), ctx);
    if (syz.generators.empty()) break;
    if (c.diffs.size() >= static_cast<std::size_t>(cap)) {
      c.truncated = true;
      break;
    }
    phi = PolyMatrix::from_columns(ring, phi.cols(), syz.generators);
    c.ranks.push_back(phi.cols());
    c.diffs.push_back(phi);
  }
  return minimal ? minimalize(c) : c;
}

namespace {

struct Pivot {
  std::size_t k, i, j;
};

std::optional<Pivot> find_constant_entry(const ChainComplex& c) {
  for (std::size_t k = 1; k <= c.diffs.size(); ++k) {
    const PolyMatrix& m = c.diffs[k - 1];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && m(i, j).is_constant()) return Pivot{k, i, j};
  }
  return std::nullopt;
}

}  // namespace

ChainComplex minimalize(const ChainComplex& c) {
  ChainComplex out(c);
  for (auto& d : out.diffs) d = out.context.reduce(d);
  while (auto pivot = find_constant_entry(out)) {
    auto [k, i, j] = *pivot;
    PolyMatrix& m = out.diffs[k - 1];
    Rational u = m(i, j).constant_term();
    // Schur complement through the unit entry; the split-off summand
    // O e_j -> O e_i is deleted from both modules.
    PolyMatrix reduced(m.ring(), m.rows() - 1, m.cols() - 1);
    for (std::size_t a = 0, ra = 0; a < m.rows(); ++a) {
      if (a == i) continue;
      for (std::size_t b = 0, rb = 0; b < m.cols(); ++b) {
        if (b == j) continue;
        Polynomial entry = m(a, b);
        if (!m(a, j).is_zero() && !m(i, b).is_zero()) entry -= m(a, j) * m(i, b) * (1 / u);
        reduced(ra, rb++) = out.context.reduce(entry);
      }
      ++ra;
    }
    m = std::move(reduced);
    if (k >= 2) out.diffs[k - 2] = out.diffs[k - 2].without_column(i);
    if (k < out.diffs.size()) out.diffs[k] = out.diffs[k].without_row(j);
    --out.ranks[k - 1];
    --out.ranks[k];
  }
  while (!out.diffs.empty() && out.ranks.back() == 0) {
    out.diffs.pop_back();
    out.ranks.pop_back();
  }
  out.not_locally_minimal = false;
  for (const auto& d : out.diffs)
    for (std::size_t a = 0; a < d.rows(); ++a)
      for (std::size_t b = 0; b < d.cols(); ++b)
        if (d(a, b).is_local_unit()) out.not_locally_minimal = true;
  return out;
}

ChainComplex koszul_complex(const std::vector<Polynomial>& f) {
  if (f.empty()) throw AlgebraError("Koszul complex of an empty tuple");
  return koszul_complex(f, QuotientContext(f.front().ring()));
}

ChainComplex koszul_complex(const std::vector<Polynomial>& f, const QuotientContext& ctx) {
  if (f.empty()) throw AlgebraError("Koszul complex of an empty tuple");
  const RingPtr& ring = ctx.ring();
  for (const auto& g : f)
    if (!same_ring(g.ring(), ring)) throw AlgebraError("ring mismatch in Koszul complex");
  const std::size_t p = f.size();

  // subsets[k] lists the k-subsets of {0..p-1} in lexicographic order.
  std::vector<std::vector<std::vector<std::size_t>>> subsets(p + 1);
  for (unsigned long mask = 0; mask < (1ul << p); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < p; ++i)
      if (mask >> i & 1ul) s.push_back(i);
    subsets[s.size()].push_back(std::move(s));
  }
  for (auto& level : subsets) std::sort(level.begin(), level.end());

  ChainComplex c(ctx);
  for (std::size_t k = 0; k <= p; ++k) c.ranks.push_back(subsets[k].size());
  for (std::size_t k = 1; k <= p; ++k) {
    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (std::size_t r = 0; r < subsets[k - 1].size(); ++r) row_of[subsets[k - 1][r]] = r;
    PolyMatrix m(ring, subsets[k - 1].size(), subsets[k].size());
    for (std::size_t col = 0; col < subsets[k].size(); ++col) {
      const auto& s = subsets[k][col];
      for (std::size_t t = 0; t < s.size(); ++t) {
        std::vector<std::size_t> rest(s);
        rest.erase(rest.begin() + static_cast<long>(t));
        Polynomial entry = ctx.reduce(f[s[t]]);
        m(row_of.at(rest), col) = t % 2 == 0 ? entry : -entry;
      }
    }
    c.diffs.push_back(std::move(m));
  }
  return c;
}

ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d) {
  if (!c.context.same_as(d.context)) throw AlgebraError("context mismatch in tensor product");
  const RingPtr& ring = c.ring();
  const std::size_t n = c.length();
  const std::size_t m = d.length();

  // offset[k][p]: start of block C_p ⊗ D_{k-p} inside G_k.
  std::vector<std::map<std::size_t, std::size_t>> offset(n + m + 1);
  ChainComplex out(c.context);
  out.truncated = c.truncated || d.truncated;
  for (std::size_t k = 0; k <= n + m; ++k) {
    std::size_t total = 0;
    std::size_t hi = std::min(k, n);
    std::size_t lo = k > m ? k - m : 0;
    for (std::size_t p = hi + 1; p-- > lo;) {
      offset[k][p] = total;
      total += c.ranks[p] * d.ranks[k - p];
    }
    out.ranks.push_back(total);
  }
  for (std::size_t k = 1; k <= n + m; ++k) {
    PolyMatrix eta(ring, out.ranks[k - 1], out.ranks[k]);
    for (const auto& [p, start] : offset[k]) {
      const std::size_t q = k - p;
      const std::size_t dq = d.ranks[q];
      for (std::size_t a = 0; a < c.ranks[p]; ++a)
        for (std::size_t b = 0; b < dq; ++b) {
          const std::size_t col = start + a * dq + b;
          if (p >= 1) {
            const PolyMatrix& phi = c.phi(p);
            const std::size_t base = offset[k - 1].at(p - 1);
            for (std::size_t r = 0; r < phi.rows(); ++r)
              eta(base + r * dq + b, col) += phi(r, a);
          }
          if (q >= 1) {
            const PolyMatrix& psi = d.phi(q);
            const std::size_t base = offset[k - 1].at(p);
            const std::size_t dq1 = d.ranks[q - 1];
            for (std::size_t r = 0; r < psi.rows(); ++r)
              eta(base + a * dq1 + r, col) += p % 2 == 0 ? psi(r, b) : -psi(r, b);
          }
        }
    }
    out.diffs.push_back(c.context.reduce(eta));
  }
  return out;
}

ChainComplex extend_ring(const ChainComplex& c, const RingPtr& bigger) {
  for (const auto& v : c.ring()->variables())
    if (bigger->index_of(v) == bigger->nvars())
      throw AlgebraError("variable '" + v + "' missing from " + bigger->to_string());
  QuotientContext ctx = c.context.is_ambient()
                            ? QuotientContext(bigger)
                            : QuotientContext(c.context.relations().map_to(bigger));
  ChainComplex out(ctx);
  out.ranks = c.ranks;
  out.truncated = c.truncated;
  out.not_locally_minimal = c.not_locally_minimal;
  for (const auto& d : c.diffs) out.diffs.push_back(d.map_to(bigger));
  return out;
}

}  // namespace rescalc
