#include "rescalc/groebner.hpp"

#include <algorithm>

namespace rescalc {

std::string codim_to_string(int codim) {
  return codim == kInfiniteCodim ? std::string("inf") : std::to_string(codim);
}

Ideal::Ideal() : state_(std::make_shared<State>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) {
  auto s = std::make_shared<State>();
  s->ring = std::move(ring);
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), s->ring)) throw AlgebraError("generator ring mismatch");
    s->gens.push_back(std::move(g));
  }
  state_ = std::move(s);
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial(ring, Rational(1))}); }

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(state_->once, [this] {
    state_->basis = rescalc::groebner_basis(state_->gens, state_->ring->order());
  });
  return state_->basis;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_unit();
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring())) throw AlgebraError("ring mismatch in normal form");
  return rescalc::normal_form(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!same_ring(ring(), other.ring())) throw AlgebraError("ring mismatch in ideal sum");
  std::vector<Polynomial> gens = generators();
  gens.insert(gens.end(), other.generators().begin(), other.generators().end());
  return Ideal(ring(), std::move(gens));
}

Ideal Ideal::map_to(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators()) gens.push_back(g.map_to(target));
  return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i) s += ", ";
    s += generators()[i].to_string();
  }
  return s + ")";
}

Polynomial QuotientContext::reduce(const Polynomial& f) const {
  if (is_ambient()) return f;
  return relations_.normal_form(f);
}

PolyVector QuotientContext::reduce(const PolyVector& v) const {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(reduce(p));
  return out;
}

PolyMatrix QuotientContext::reduce(const PolyMatrix& m) const {
  if (is_ambient()) return m;
  PolyMatrix out(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce(m(i, j));
  return out;
}

Ideal QuotientContext::lift(const Ideal& j) const {
  if (is_ambient()) return j;
  return j + relations_;
}

bool QuotientContext::same_as(const QuotientContext& other) const {
  if (!same_ring(ring(), other.ring())) return false;
  return relations_.equals(other.relations_);
}

std::string QuotientContext::to_string() const {
  if (is_ambient()) return ring()->to_string();
  return ring()->to_string() + "/" + relations_.to_string();
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const QuotientContext& ctx) {
  if (ctx.is_ambient()) return ideal.normal_form(f);
  return ctx.lift(ideal).normal_form(f);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) { return ideal.contains(f); }

bool ideal_member(const Polynomial& f, const Ideal& ideal, const QuotientContext& ctx) {
  return normal_form(f, ideal, ctx).is_zero();
}

namespace {

std::string fresh_variable(const PolynomialRing& ring, const std::string& stem) {
  std::string name = stem;
  for (int i = 0; ring.index_of(name) != ring.nvars(); ++i) name = stem + std::to_string(i);
  return name;
}

// Reduced Gröbner basis as generators: a canonical presentation.
Ideal canonical(const Ideal& ideal) { return Ideal(ideal.ring(), ideal.groebner_basis()); }

}  // namespace

Ideal elimination(const Ideal& ideal, const std::vector<std::string>& keep) {
  const RingPtr& ring = ideal.ring();
  std::vector<bool> block(ring->nvars(), true);
  for (const auto& name : keep) {
    std::size_t idx = ring->index_of(name);
    if (idx == ring->nvars()) throw AlgebraError("unknown variable '" + name + "' to keep");
    block[idx] = false;
  }
  if (std::none_of(block.begin(), block.end(), [](bool b) { return b; })) return canonical(ideal);
  RingPtr elim = PolynomialRing::make(ring->variables(), MonomialOrder::elimination(block));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(elim));
  std::vector<Polynomial> kept;
  for (const auto& g : groebner_basis(gens, elim->order())) {
    bool free = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i] && t.monomial[i] > 0) free = false;
    if (free) kept.push_back(g.map_to(ring));
  }
  return canonical(Ideal(ring, std::move(kept)));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw AlgebraError("ring mismatch in intersection");
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal(ring, {});
  auto vars = ring->variables();
  std::string t = fresh_variable(*ring, "t_");
  vars.push_back(t);
  RingPtr ext = PolynomialRing::make(vars, ring->order().block.empty()
                                               ? ring->order()
                                               : MonomialOrder::grevlex());
  Polynomial tp = Polynomial::variable(ext, ext->nvars() - 1);
  Polynomial one(ext, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(tp * g.map_to(ext));
  for (const auto& g : b.generators()) gens.push_back((one - tp) * g.map_to(ext));
  Ideal eliminated = elimination(Ideal(ext, gens), ring->variables());
  return canonical(eliminated.map_to(ring));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f) {
  return ideal_quotient(ideal, f, QuotientContext(ideal.ring()));
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const QuotientContext& ctx) {
  if (f.is_zero()) throw AlgebraError("ideal quotient by zero");
  if (!same_ring(f.ring(), ideal.ring())) throw AlgebraError("ring mismatch in ideal quotient");
  Ideal base = ctx.lift(ideal);
  const RingPtr& ring = ideal.ring();
  Ideal meet = ideal_intersect(base, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) {
    auto d = divide(g, {f});
    if (!d.remainder.is_zero()) throw AlgebraError("inexact division in ideal quotient");
    gens.push_back(d.quotients.front());
  }
  Ideal q = canonical(Ideal(ring, std::move(gens)));
  if (ctx.is_ambient()) return q;
  std::vector<Polynomial> reduced;
  for (const auto& g : q.generators()) {
    Polynomial r = ctx.reduce(g);
    if (r.is_zero()) continue;
    if (std::find(reduced.begin(), reduced.end(), r) == reduced.end()) reduced.push_back(r);
  }
  return Ideal(ring, std::move(reduced));
}

Ideal saturation(const Ideal& ideal, const Polynomial& f) {
  return saturation(ideal, f, QuotientContext(ideal.ring()));
}

Ideal saturation(const Ideal& ideal, const Polynomial& f, const QuotientContext& ctx) {
  Ideal current = ideal;
  for (int i = 0; i < kSaturationCap; ++i) {
    Ideal next = ideal_quotient(current, f, ctx);
    Ideal lifted_current = ctx.lift(current);
    if (lifted_current.contains(next)) {
      if (ctx.is_ambient()) return canonical(current);
      return current;
    }
    current = next;
  }
  throw AlgebraError("saturation did not stabilise within the iteration cap");
}

Dimension dimension(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (ideal.is_zero()) return Dimension{static_cast<int>(n), 0};
  const auto& gb = ideal.groebner_basis();
  std::vector<unsigned long> supports;
  for (const auto& g : gb) {
    unsigned long mask = 0;
    const Monomial& m = g.leading_term().monomial;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) mask |= 1ul << i;
    supports.push_back(mask);
  }
  int best = -1;
  for (unsigned long subset = 0; subset < (1ul << n); ++subset) {
    int size = __builtin_popcountl(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [subset](unsigned long s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  if (best < 0) return Dimension{-1, kInfiniteCodim};
  return Dimension{best, static_cast<int>(n) - best};
}

int codim_in(const Ideal& ideal, const QuotientContext& ctx) {
  Dimension whole = dimension(ctx.relations());
  Dimension part = dimension(ctx.lift(ideal));
  if (part.dim < 0) return kInfiniteCodim;
  return whole.dim - part.dim;
}

}  // namespace rescalc
