#include "rescalc/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace rescalc {

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0)
    throw ParseError("invalid rational '" + std::string(text) + "'", 0);
  q.canonicalize();
  return q;
}

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_)
    if (e < 0) throw AlgebraError("negative exponent in monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= other.exps_[i];
    if (r.exps_[i] < 0) throw AlgebraError("monomial division is not exact");
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

std::string_view order_name(OrderKind kind) {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
  }
  return "grevlex";
}

OrderKind order_from_name(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::GrLex;
  if (name == "grevlex") return OrderKind::GrevLex;
  throw AlgebraError("unknown monomial order '" + std::string(name) + "'");
}

namespace {

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

// Among equal degrees, the monomial with the smaller exponent in the last
// differing variable is the larger one.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!block.empty()) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
      if (block[i]) {
        da += a[i];
        db += b[i];
      }
    if (da != db) return da <=> db;
  }
  switch (kind) {
    case OrderKind::Lex:
      return lex_compare(a, b);
    case OrderKind::GrLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      return lex_compare(a, b);
    }
    case OrderKind::GrevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da <=> db;
      return revlex_tail(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_monomials(const MonomialOrder& order,
                                       const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw AlgebraError("monomial length mismatch");
  if (!order.block.empty() && order.block.size() != a.size())
    throw AlgebraError("elimination block does not match monomial length");
  return order.compare(a, b);
}

std::strong_ordering ModuleOrder::compare(std::size_t ca, const Monomial& a,
                                          std::size_t cb, const Monomial& b) const {
  switch (rule) {
    case ModuleRule::PositionOverTerm:
      if (ca != cb) return cb <=> ca;
      return base.compare(a, b);
    case ModuleRule::TermOverPosition: {
      auto c = base.compare(a, b);
      if (c != 0) return c;
      return cb <=> ca;
    }
    case ModuleRule::Schreyer: {
      auto c = base.compare(a * marks.at(ca), b * marks.at(cb));
      if (c != 0) return c;
      return cb <=> ca;
    }
  }
  return std::strong_ordering::equal;
}

PolynomialRing::PolynomialRing(std::vector<std::string> variables, MonomialOrder order)
    : vars_(std::move(variables)), order_(std::move(order)) {
  if (vars_.empty()) throw AlgebraError("a ring needs at least one variable");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw AlgebraError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j])
        throw AlgebraError("duplicate variable name '" + vars_[i] + "'");
  }
  if (!order_.block.empty() && order_.block.size() != vars_.size())
    throw AlgebraError("elimination block does not match the variable count");
}

RingPtr PolynomialRing::make(std::vector<std::string> variables, MonomialOrder order) {
  return std::make_shared<const PolynomialRing>(std::move(variables), std::move(order));
}

std::size_t PolynomialRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return vars_.size();
}

std::string PolynomialRing::to_string() const {
  std::string s = "Q[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  return s + "]";
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace rescalc
