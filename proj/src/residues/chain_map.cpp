#include "rescalc/residues.hpp"

namespace rescalc {

Ideal maximal_lifting(const Ideal& j, const QuotientContext& ctx) {
  if (!same_ring(j.ring(), ctx.ring())) throw AlgebraError("ring mismatch in maximal lifting");
  Ideal lifted = ctx.lift(j);
  return Ideal(lifted.ring(), lifted.groebner_basis());
}

namespace {

std::size_t rank_at(const ChainComplex& c, std::size_t k) {
  return k < c.ranks.size() ? c.ranks[k] : 0;
}

// phi_k of c, or the zero map out of C_k = 0 past the end.
PolyMatrix differential(const ChainComplex& c, std::size_t k) {
  if (k <= c.length()) return c.phi(k);
  return PolyMatrix(c.ring(), rank_at(c, k - 1), 0);
}

std::optional<PolyMatrix> lift_columns(const PolyMatrix& target, const PolyMatrix& rhs,
                                       const QuotientContext& ctx,
                                       const std::optional<MonomialOrder>& order) {
  const std::size_t cols = target.cols();
  if (cols == 0) {
    if (!ctx.reduce(rhs).is_zero()) return std::nullopt;
    return PolyMatrix(rhs.ring(), 0, rhs.cols());
  }
  ImageLifter lifter = order ? ImageLifter(target, ctx, *order) : ImageLifter(target, ctx);
  std::vector<PolyVector> out;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    auto x = lifter.lift(rhs.column(j));
    if (!x) return std::nullopt;
    out.push_back(ctx.reduce(*x));
  }
  return PolyMatrix::from_columns(rhs.ring(), cols, out);
}

}  // namespace

bool ChainMap::commutes() const {
  const QuotientContext& ctx = target.context;
  if (levels.size() != source.length() + 1) return false;
  for (std::size_t k = 0; k < levels.size(); ++k)
    if (levels[k].rows() != rank_at(target, k) || levels[k].cols() != rank_at(source, k))
      return false;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    PolyMatrix lhs = differential(target, k) * levels[k];
    PolyMatrix rhs = levels[k - 1] * source.phi(k);
    if (!ctx.reduce(lhs - rhs).is_zero()) return false;
  }
  return true;
}

ChainMap comparison_morphism(const ChainComplex& f, const ChainComplex& e,
                             const std::optional<MonomialOrder>& order) {
  if (!same_ring(f.ring(), e.ring())) throw AlgebraError("ring mismatch in comparison morphism");
  if (!f.context.same_as(e.context)) throw AlgebraError("context mismatch in comparison morphism");
  if (f.truncated || e.truncated)
    throw AlgebraError("comparison morphism needs complete resolutions");
  if (rank_at(f, 0) != 1 || rank_at(e, 0) != 1)
    throw AlgebraError("comparison morphism needs resolutions of cyclic modules O/I, O/J");
  const QuotientContext& ctx = e.context;
  const RingPtr& ring = e.ring();

  // I ⊆ J, checked on generators.
  if (f.length() >= 1) {
    Ideal j = e.length() >= 1 ? Ideal(ring, e.phi(1).row(0)) : Ideal(ring, {});
    for (const auto& g : f.phi(1).row(0))
      if (!ideal_member(g, j, ctx))
        throw AlgebraError("source ideal is not contained in the target ideal: " + g.to_string() +
                           " is not in " + j.to_string());
  }

  ChainMap a{f, e, {PolyMatrix::identity(ring, 1)}};
  for (std::size_t k = 1; k <= f.length(); ++k) {
    PolyMatrix rhs = ctx.reduce(a.levels[k - 1] * f.phi(k));
    auto lifted = lift_columns(differential(e, k), rhs, ctx, order);
    if (!lifted)
      throw AlgebraError("lifting failed at level " + std::to_string(k) +
                         ": target complex not exact there");
    a.levels.push_back(std::move(*lifted));
  }
  return a;
}

ChainMap identity_chain_map(const ChainComplex& c) {
  ChainMap a{c, c, {}};
  for (std::size_t k = 0; k <= c.length(); ++k)
    a.levels.push_back(PolyMatrix::identity(c.ring(), c.ranks[k]));
  return a;
}

namespace {

bool same_shape(const ChainMap& a, const ChainMap& b) {
  if (a.levels.size() != b.levels.size()) return false;
  if (a.source.ranks != b.source.ranks || a.target.ranks != b.target.ranks) return false;
  for (std::size_t k = 1; k <= a.source.length(); ++k)
    if (!(a.source.phi(k) == b.source.phi(k))) return false;
  for (std::size_t k = 1; k <= a.target.length(); ++k)
    if (!(a.target.phi(k) == b.target.phi(k))) return false;
  return true;
}

PolyMatrix homotopy_residual(const ChainMap& a, const ChainMap& b, const Homotopy& s,
                             std::size_t k) {
  PolyMatrix diff = b.levels[k] - a.levels[k];
  if (k >= 1) diff = diff - s.levels[k - 1] * a.source.phi(k);
  return diff;
}

}  // namespace

HomotopyResult chain_homotopy(const ChainMap& a, const ChainMap& b) {
  if (!same_shape(a, b)) throw AlgebraError("chain maps between different complexes");
  const QuotientContext& ctx = a.target.context;
  HomotopyResult result;
  Homotopy s;
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    PolyMatrix rhs = ctx.reduce(homotopy_residual(a, b, s, k));
    auto lifted = lift_columns(differential(a.target, k + 1), rhs, ctx, std::nullopt);
    if (!lifted) {
      result.failing_level = k;
      result.reason = "difference at level " + std::to_string(k) +
                      " is not in the image of the next target differential";
      return result;
    }
    s.levels.push_back(std::move(*lifted));
  }
  result.homotopy = std::move(s);
  return result;
}

bool verify_homotopy(const ChainMap& a, const ChainMap& b, const Homotopy& s) {
  if (!same_shape(a, b) || s.levels.size() != a.levels.size()) return false;
  const QuotientContext& ctx = a.target.context;
  for (std::size_t k = 0; k < a.levels.size(); ++k) {
    PolyMatrix lhs = homotopy_residual(a, b, s, k);
    PolyMatrix rhs = differential(a.target, k + 1) * s.levels[k];
    if (!ctx.reduce(lhs - rhs).is_zero()) return false;
  }
  return true;
}

}  // namespace rescalc
