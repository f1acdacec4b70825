#include "rescalc/residues.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rescalc {

namespace {

void add_pure_components(StructureFormShape& shape, std::size_t resolution_length) {
  for (int r = 0; shape.p + r <= static_cast<int>(resolution_length); ++r)
    shape.components.push_back(ShapeComponent{r, {shape.d, r}, shape.p + r, {}});
}

}  // namespace

StructureFormShape structure_form_shape(const QuotientContext& z,
                                        const std::vector<DeclaredComponent>& decomposition) {
  const Ideal& iz = z.relations();
  if (!iz.is_zero() && iz.is_unit()) throw AlgebraError("Z is empty (I_Z is the unit ideal)");
  const RingPtr& ring = z.ring();
  ChainComplex f = free_resolution(iz);
  StructureFormShape shape;
  shape.n = static_cast<int>(ring->nvars());

  if (decomposition.empty()) {
    Dimension dim = dimension(iz);
    shape.d = dim.dim;
    shape.p = dim.codim;
    shape.purity_assumed = static_cast<int>(f.length()) != shape.p;
    add_pure_components(shape, f.length());
    return shape;
  }

  // Group the declared components by dimension: W^e is their intersection.
  std::map<int, Ideal, std::greater<int>> by_dim;
  for (const auto& c : decomposition) {
    if (!same_ring(c.ideal.ring(), ring)) throw AlgebraError("component ring mismatch");
    if (!c.ideal.contains(iz))
      throw AlgebraError("invalid decomposition: " + c.ideal.to_string() + " does not contain I_Z");
    int actual = dimension(c.ideal).dim;
    if (actual != c.dim)
      throw AlgebraError("invalid decomposition: " + c.ideal.to_string() + " has dimension " +
                         std::to_string(actual) + ", declared " + std::to_string(c.dim));
    auto it = by_dim.find(c.dim);
    if (it == by_dim.end())
      by_dim.emplace(c.dim, c.ideal);
    else
      it->second = ideal_intersect(it->second, c.ideal);
  }
  Ideal meet = by_dim.begin()->second;
  for (auto it = std::next(by_dim.begin()); it != by_dim.end(); ++it)
    meet = ideal_intersect(meet, it->second);
  if (!meet.equals(iz))
    throw AlgebraError("invalid decomposition: components intersect to " + meet.to_string() +
                       ", not I_Z");

  shape.d = by_dim.begin()->first;
  shape.p = shape.n - shape.d;
  if (by_dim.size() == 1) {
    add_pure_components(shape, f.length());
    return shape;
  }

  shape.pure = false;
  std::vector<int> dims;
  for (const auto& [e, w] : by_dim) dims.push_back(e);
  for (int e : dims) {
    std::vector<int> support;
    for (int e2 : dims)
      if (e2 >= e) support.push_back(e2);
    shape.components.push_back(ShapeComponent{e, {0, e}, shape.n - e, support});
  }
  ResolutionDiagnostics loci = rank_loci(f);
  for (int e : dims)
    for (int e2 : dims) {
      if (e <= e2) continue;
      const int k = shape.n - e2;
      const int required = shape.n - e2 + 1;
      int codim = kInfiniteCodim;
      if (k >= 1 && k <= static_cast<int>(f.length()))
        codim = dimension(by_dim.at(e) + loci.loci[k - 1].ideal).codim;
      shape.pair_checks.push_back(ComponentPairCheck{e, e2, codim, required, codim >= required});
    }
  return shape;
}

CurrentRecipe build_current_recipe(const QuotientContext& z, const Ideal& j,
                                   const std::vector<DeclaredComponent>& decomposition) {
  if (!same_ring(j.ring(), z.ring())) throw AlgebraError("ring mismatch in current recipe");
  Ideal j_tilde = maximal_lifting(j, z);
  if (j_tilde.is_unit()) throw AlgebraError("J must be a proper ideal of O_Z");
  const bool zero_j = std::all_of(j.generators().begin(), j.generators().end(),
                                  [&](const Polynomial& g) { return z.reduce(g).is_zero(); });
  ChainComplex f = free_resolution(z.relations());
  ChainComplex e = zero_j ? f : free_resolution(j_tilde);
  ChainMap a = zero_j ? identity_chain_map(f) : comparison_morphism(f, e);
  StructureFormShape shape = structure_form_shape(z, decomposition);
  FormalCurrent current{CurrentKind::AWCurrent,
                        z,
                        j,
                        {dimension(j_tilde).codim, static_cast<int>(e.length())},
                        0,
                        {}};
  bool z_cm = cohen_macaulay_check(z.relations()).cohen_macaulay;
  bool jt_cm = cohen_macaulay_check(j_tilde).cohen_macaulay;
  return CurrentRecipe{z, j, j_tilde, e, f, a, shape, current, z_cm, jt_cm};
}

bool annihilator_member(const CurrentRecipe& recipe, const Polynomial& g) {
  const QuotientContext& ctx = recipe.context;
  std::vector<Polynomial> row;
  for (const auto& h : recipe.j.generators()) {
    Polynomial r = ctx.reduce(h);
    if (!r.is_zero()) row.push_back(std::move(r));
  }
  // Over O_Z: solve g = sum c_i j_i modulo I_Z.
  PolyMatrix phi = PolyMatrix::from_rows(ctx.ring(), {row});
  bool over_z = ImageLifter(phi, ctx).lift(PolyVector{ctx.reduce(g)}).has_value();
  // Over the ambient ring: membership in the maximal lifting.
  bool ambient = recipe.j_tilde.contains(g);
  if (over_z != ambient)
    throw std::logic_error("annihilator routes disagree on " + g.to_string());
  return over_z;
}

}  // namespace rescalc
