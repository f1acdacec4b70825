#include "rescalc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace rescalc {

namespace {

std::vector<Term> canonical_terms(const MonomialOrder& order, std::vector<Term> terms) {
  std::map<Monomial, Rational> acc;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    auto [it, inserted] = acc.try_emplace(std::move(t.monomial), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{m, c});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  return out;
}

// Merge two descending term lists: a + sign*b.
std::vector<Term> merge_terms(const MonomialOrder& order, const std::vector<Term>& a,
                              const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(Term{b[j].monomial, sign * b[j].coeff});
      ++j;
      continue;
    }
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(Term{b[j].monomial, sign * b[j].coeff});
      ++j;
    } else {
      Rational s = a[i].coeff + sign * b[j].coeff;
      if (s != 0) out.push_back(Term{a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (constant != 0) terms_.push_back(Term{Monomial(ring_->nvars()), constant});
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms)
    if (t.monomial.size() != ring_->nvars())
      throw AlgebraError("monomial length does not match ring");
  terms_ = canonical_terms(ring_->order(), std::move(terms));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring->nvars(), index));
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, Rational coeff) {
  Polynomial p(ring);
  if (m.size() != ring->nvars()) throw AlgebraError("monomial length does not match ring");
  if (coeff != 0) p.terms_.push_back(Term{std::move(m), std::move(coeff)});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw AlgebraError("leading term of the zero polynomial");
  return terms_.front();
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw AlgebraError("leading term of the zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!ring_ || !other.ring_) throw AlgebraError("polynomial without a ring");
  if (!same_ring(ring_, other.ring_)) throw AlgebraError("ring mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_->order(), terms_, other.terms_, 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(other);
  Polynomial r(ring_);
  r.terms_ = merge_terms(ring_->order(), terms_, other.terms_, -1);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      prod.push_back(Term{a.monomial * b.monomial, a.coeff * b.coeff});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial[var];
    if (e == 0) continue;
    auto exps = t.monomial.exponents();
    exps[var] -= 1;
    out.push_back(Term{Monomial(std::move(exps)), t.coeff * e});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return *this * inv;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Polynomial r(*this);
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> where(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i)
    where[i] = target->index_of(ring_->variables()[i]);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (where[i] == target->nvars())
        throw AlgebraError("variable '" + ring_->variables()[i] + "' missing from " +
                           target->to_string());
      exps[where[i]] = t.monomial[i];
    }
    out.push_back(Term{Monomial(std::move(exps)), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  if (!terms_.empty() && !same_ring(ring_, other.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != other.terms_[i].monomial ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    Rational mag = abs(t.coeff);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    bool one = t.monomial.is_one();
    if (one) {
      os << rational_to_string(mag);
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << rational_to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      int e = t.monomial[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << ring_->variables()[i];
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

Polynomial poly_arith(ArithOp op, const Polynomial& p, const Polynomial& q) {
  switch (op) {
    case ArithOp::Add: return p + q;
    case ArithOp::Sub: return p - q;
    case ArithOp::Mul: return p * q;
  }
  throw AlgebraError("unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// Parser:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := primary ('^' uint)*
//   primary:= ident | rational | '(' expr ')'

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    int sign = 1;
    char c = peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    acc = term();
    if (sign < 0) acc = -acc;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
      }
      std::string lit(text_.substr(start, pos_ - start));
      Rational q(lit, 10);
      if (q.get_den() == 0) {
        pos_ = start;
        fail("zero denominator");
      }
      q.canonicalize();
      return Polynomial(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::size_t idx = ring_->index_of(name);
      if (idx == ring_->nvars()) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return Polynomial::variable(ring_, idx);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, const RingPtr& ring) {
  return ExprParser(text, ring).parse();
}

PolyVector zero_vector(const RingPtr& ring, std::size_t rank) {
  return PolyVector(rank, Polynomial(ring));
}

bool is_zero_vector(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string vector_to_string(const PolyVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

}  // namespace rescalc
