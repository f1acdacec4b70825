#include "rescalc/polyring.hpp"

#include <algorithm>

namespace rescalc {

ModuleElement ModuleElement::from_terms(std::vector<ModuleTerm> terms,
                                       const ModuleOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a.component, a.monomial, b.component, b.monomial) > 0;
  });
  ModuleElement e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().component == t.component &&
        e.terms_.back().monomial == t.monomial) {
      e.terms_.back().coeff += t.coeff;
      if (e.terms_.back().coeff == 0) e.terms_.pop_back();
    } else if (t.coeff != 0) {
      e.terms_.push_back(std::move(t));
    }
  }
  return e;
}

ModuleElement ModuleElement::from_vector(const PolyVector& v, const ModuleOrder& order) {
  std::vector<ModuleTerm> terms;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& t : v[i].terms()) terms.push_back(ModuleTerm{i, t.monomial, t.coeff});
  return from_terms(std::move(terms), order);
}

ModuleElement ModuleElement::from_polynomial(const Polynomial& p, const ModuleOrder& order) {
  std::vector<ModuleTerm> terms;
  for (const auto& t : p.terms()) terms.push_back(ModuleTerm{0, t.monomial, t.coeff});
  return from_terms(std::move(terms), order);
}

PolyVector ModuleElement::to_vector(const RingPtr& ring, std::size_t rank) const {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : terms_) {
    if (t.component >= rank) throw AlgebraError("module element exceeds rank");
    parts[t.component].push_back(Term{t.monomial, t.coeff});
  }
  PolyVector v;
  v.reserve(rank);
  for (auto& p : parts) v.emplace_back(ring, std::move(p));
  return v;
}

Polynomial ModuleElement::to_polynomial(const RingPtr& ring) const {
  return to_vector(ring, 1).front();
}

void ModuleElement::add_multiple(const Rational& c, const Monomial& m,
                                 const ModuleElement& other, const ModuleOrder& order) {
  if (c == 0 || other.terms_.empty()) return;
  std::vector<ModuleTerm> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    const ModuleTerm& b = other.terms_[j];
    Monomial bm = b.monomial * m;
    if (i == terms_.size()) {
      out.push_back(ModuleTerm{b.component, std::move(bm), c * b.coeff});
      ++j;
      continue;
    }
    auto cmp = order.compare(terms_[i].component, terms_[i].monomial, b.component, bm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(ModuleTerm{b.component, std::move(bm), c * b.coeff});
      ++j;
    } else {
      Rational s = terms_[i].coeff + c * b.coeff;
      if (s != 0) out.push_back(ModuleTerm{b.component, std::move(bm), s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

ModuleElement ModuleElement::times(const Rational& c, const Monomial& m) const {
  ModuleElement r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(ModuleTerm{t.component, t.monomial * m, t.coeff * c});
  return r;
}

void ModuleElement::make_monic() {
  if (terms_.empty()) return;
  Rational inv = 1 / terms_.front().coeff;
  for (auto& t : terms_) t.coeff *= inv;
}

bool ModuleElement::operator==(const ModuleElement& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].component != other.terms_[i].component ||
        terms_[i].monomial != other.terms_[i].monomial ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

ModuleDivision divide_elements(const ModuleElement& f, const std::vector<ModuleElement>& divisors,
                               const ModuleOrder& order) {
  if (divisors.empty()) throw AlgebraError("division by an empty divisor list");
  ModuleOrder poly_order{order.base, ModuleRule::PositionOverTerm, {}};
  std::vector<std::vector<ModuleTerm>> quotient_terms(divisors.size());
  std::vector<ModuleTerm> remainder;
  ModuleElement p = f;
  while (!p.is_zero()) {
    const ModuleTerm lead = p.lead();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const ModuleElement& g = divisors[i];
      if (g.is_zero()) continue;
      const ModuleTerm& gl = g.lead();
      if (gl.component != lead.component || !gl.monomial.divides(lead.monomial)) continue;
      Monomial m = lead.monomial / gl.monomial;
      Rational c = lead.coeff / gl.coeff;
      p.add_multiple(-c, m, g, order);
      quotient_terms[i].push_back(ModuleTerm{0, std::move(m), std::move(c)});
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lead);
      p.pop_lead();
    }
  }
  ModuleDivision out;
  for (auto& q : quotient_terms) out.quotients.push_back(ModuleElement::from_terms(std::move(q), poly_order));
  out.remainder = ModuleElement::from_terms(std::move(remainder), order);
  return out;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order) {
  if (divisors.empty()) throw AlgebraError("division by an empty divisor list");
  ModuleOrder mo{order, ModuleRule::PositionOverTerm, {}};
  std::vector<ModuleElement> ds;
  for (const auto& g : divisors) {
    if (!same_ring(g.ring(), f.ring())) throw AlgebraError("ring mismatch in division");
    ds.push_back(ModuleElement::from_polynomial(g, mo));
  }
  auto d = divide_elements(ModuleElement::from_polynomial(f, mo), ds, mo);
  DivisionResult out;
  for (const auto& q : d.quotients) out.quotients.push_back(q.to_polynomial(f.ring()));
  out.remainder = d.remainder.to_polynomial(f.ring());
  return out;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  return divide(f, divisors, f.ring()->order());
}

VectorDivisionResult divide(const PolyVector& f, const std::vector<PolyVector>& divisors,
                            const ModuleOrder& order) {
  if (divisors.empty()) throw AlgebraError("division by an empty divisor list");
  if (f.empty()) throw AlgebraError("division of a rank-0 vector");
  const RingPtr& ring = f.front().ring();
  std::vector<ModuleElement> ds;
  for (const auto& g : divisors) {
    if (g.size() != f.size()) throw AlgebraError("rank mismatch in division");
    ds.push_back(ModuleElement::from_vector(g, order));
  }
  auto d = divide_elements(ModuleElement::from_vector(f, order), ds, order);
  VectorDivisionResult out;
  for (const auto& q : d.quotients) out.quotients.push_back(q.to_polynomial(ring));
  out.remainder = d.remainder.to_vector(ring, f.size());
  return out;
}

}  // namespace rescalc
