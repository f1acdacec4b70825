#include "rescalc/groebner.hpp"

namespace rescalc {

SubmoduleBasis SubmoduleBasis::of_columns(const PolyMatrix& m) {
  return SubmoduleBasis{m.ring(), m.rows(), m.columns(),
                        ModuleOrder{m.ring()->order(), ModuleRule::PositionOverTerm, {}}};
}

PolyMatrix SubmoduleBasis::as_matrix() const {
  return PolyMatrix::from_columns(ring, rank, generators);
}

ImageLifter::ImageLifter(const PolyMatrix& phi, const QuotientContext& ctx)
    : ImageLifter(phi, ctx, phi.ring()->order()) {}

ImageLifter::ImageLifter(const PolyMatrix& phi, const QuotientContext& ctx,
                         const MonomialOrder& order)
    : ring_(phi.ring()),
      rows_(phi.rows()),
      cols_(phi.cols()),
      order_{order, ModuleRule::PositionOverTerm, {}} {
  // Components [0, rows) carry phi x, components [rows, rows + cols) carry x.
  // Position-over-term makes the image part dominate, so the basis elements
  // living purely in the x part generate the kernel.
  std::vector<ModuleElement> gens;
  for (std::size_t j = 0; j < cols_; ++j) {
    std::vector<ModuleTerm> terms;
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& t : phi(i, j).terms()) terms.push_back(ModuleTerm{i, t.monomial, t.coeff});
    terms.push_back(ModuleTerm{rows_ + j, Monomial(ring_->nvars()), Rational(1)});
    gens.push_back(ModuleElement::from_terms(std::move(terms), order_));
  }
  if (!ctx.is_ambient()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& h : ctx.relations().groebner_basis()) {
        std::vector<ModuleTerm> terms;
        for (const auto& t : h.terms()) terms.push_back(ModuleTerm{i, t.monomial, t.coeff});
        gens.push_back(ModuleElement::from_terms(std::move(terms), order_));
      }
  }
  basis_ = buchberger(std::move(gens), order_, false);
  for (const auto& b : basis_) {
    if (b.lead().component < rows_) continue;
    std::vector<std::vector<Term>> parts(cols_);
    for (const auto& t : b.terms()) parts[t.component - rows_].push_back(Term{t.monomial, t.coeff});
    PolyVector v;
    for (auto& p : parts) v.emplace_back(ring_, std::move(p));
    kernel_.push_back(std::move(v));
  }
}

std::optional<PolyVector> ImageLifter::lift(const PolyVector& v) const {
  if (v.size() != rows_) throw AlgebraError("rank mismatch in lift");
  std::vector<ModuleTerm> terms;
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& t : v[i].terms()) terms.push_back(ModuleTerm{i, t.monomial, t.coeff});
  ModuleElement target = ModuleElement::from_terms(std::move(terms), order_);
  if (target.is_zero()) return zero_vector(ring_, cols_);
  if (basis_.empty()) return std::nullopt;
  ModuleElement rem = divide_elements(target, basis_, order_).remainder;
  std::vector<std::vector<Term>> parts(cols_);
  for (const auto& t : rem.terms()) {
    if (t.component < rows_) return std::nullopt;
    parts[t.component - rows_].push_back(Term{t.monomial, -t.coeff});
  }
  PolyVector x;
  for (auto& p : parts) x.emplace_back(ring_, std::move(p));
  return x;
}

std::vector<PolyVector> prune_generators(std::vector<PolyVector> gens, std::size_t rank,
                                         const QuotientContext& ctx) {
  if (gens.size() <= 1) return gens;
  const RingPtr& ring = gens.front().front().ring();
  ModuleOrder order{ring->order(), ModuleRule::PositionOverTerm, {}};
  std::vector<PolyVector> relation_vectors;
  if (!ctx.is_ambient())
    for (std::size_t i = 0; i < rank; ++i)
      for (const auto& h : ctx.relations().groebner_basis()) {
        PolyVector v = zero_vector(ring, rank);
        v[i] = h;
        relation_vectors.push_back(std::move(v));
      }
  for (std::size_t k = gens.size(); k-- > 0;) {
    if (gens.size() <= 1) break;
    std::vector<PolyVector> others = relation_vectors;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != k) others.push_back(gens[j]);
    SubmoduleBasis span = groebner_basis(SubmoduleBasis{ring, rank, others, order});
    if (is_zero_vector(normal_form(gens[k], span))) gens.erase(gens.begin() + static_cast<long>(k));
  }
  return gens;
}

SubmoduleBasis syzygies(const SubmoduleBasis& gens, const QuotientContext& ctx) {
  if (gens.generators.empty()) throw AlgebraError("syzygies of an empty generator list");
  PolyMatrix phi = gens.as_matrix();
  ImageLifter lifter(phi, ctx);
  const std::size_t m = gens.generators.size();
  ModuleOrder order{gens.ring->order(), ModuleRule::PositionOverTerm, {}};
  std::vector<PolyVector> reduced;
  for (const auto& k : lifter.kernel()) {
    PolyVector r = ctx.reduce(k);
    if (!is_zero_vector(r)) reduced.push_back(std::move(r));
  }
  std::vector<PolyVector> kernel = prune_generators(std::move(reduced), m, ctx);
  return SubmoduleBasis{gens.ring, m, std::move(kernel), order};
}

SubmoduleBasis syzygies(const SubmoduleBasis& gens) {
  return syzygies(gens, QuotientContext(gens.ring));
}

SubmoduleBasis syzygies(const Ideal& gens, const QuotientContext& ctx) {
  if (gens.generators().empty()) throw AlgebraError("syzygies of an empty generator list");
  std::vector<PolyVector> cols;
  for (const auto& g : gens.generators()) cols.push_back(PolyVector{g});
  SubmoduleBasis module{gens.ring(), 1, std::move(cols),
                        ModuleOrder{gens.ring()->order(), ModuleRule::PositionOverTerm, {}}};
  return syzygies(module, ctx);
}

SubmoduleBasis syzygies(const Ideal& gens) { return syzygies(gens, QuotientContext(gens.ring())); }

}  // namespace rescalc
