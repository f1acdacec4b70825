// Exact multivariate polynomials over Q, monomial orders and the division
// algorithm.
//
// A Polynomial always stores its terms sorted in descending order under its
// ring's default monomial order, with no zero coefficients. Two polynomials
// over the same ring are therefore equal iff their term vectors are equal.
#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rescalc {

using Rational = mpq_class;

/// Canonical text of a rational: "n" for integers, "n/d" otherwise.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(std::string_view text);

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  /// Plain lexicographic comparison of exponent vectors, for use as a map key.
  /// Not a monomial order in general; use MonomialOrder for that.
  auto operator<=>(const Monomial& other) const = default;

 private:
  std::vector<int> exps_;
};

enum class OrderKind { Lex, GrLex, GrevLex };

std::string_view order_name(OrderKind kind);
OrderKind order_from_name(std::string_view name);

/// A global monomial order. When `block` is nonempty the total degree in the
/// flagged variables is compared first, which makes the order an elimination
/// order for those variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<bool> block;

  static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
  static MonomialOrder grlex() { return {OrderKind::GrLex, {}}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}}; }
  static MonomialOrder elimination(std::vector<bool> eliminate,
                                   OrderKind tie_break = OrderKind::GrevLex) {
    return {tie_break, std::move(eliminate)};
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const MonomialOrder&) const = default;
};

/// Checked comparison: throws AlgebraError on length mismatch.
std::strong_ordering compare_monomials(const MonomialOrder& order,
                                       const Monomial& a, const Monomial& b);

/// How a monomial order is extended to terms m*e_i of a free module.
enum class ModuleRule { PositionOverTerm, TermOverPosition, Schreyer };

/// Order on module monomials (component, monomial). Components with a smaller
/// index are larger under position-over-term. For the Schreyer rule
/// `marks[i]` is the leading monomial of the i-th parent generator and
/// m*e_i is compared through m*marks[i] first, the index breaking ties.
struct ModuleOrder {
  MonomialOrder base;
  ModuleRule rule = ModuleRule::PositionOverTerm;
  std::vector<Monomial> marks;

  std::strong_ordering compare(std::size_t ca, const Monomial& a,
                               std::size_t cb, const Monomial& b) const;
};

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

class PolynomialRing {
 public:
  static RingPtr make(std::vector<std::string> variables,
                      MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const MonomialOrder& order() const { return order_; }

  /// Index of `name`, or nvars() when absent.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const PolynomialRing& other) const {
    return vars_ == other.vars_ && order_ == other.order_;
  }

  /// "Q[x,y,z]"
  std::string to_string() const;

  PolynomialRing(std::vector<std::string> variables, MonomialOrder order);

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, const Rational& constant);
  /// Terms in any order; like monomials are merged and zeros dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial monomial(const RingPtr& ring, Monomial m,
                             Rational coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Nonzero constant: a unit of the polynomial ring.
  bool is_unit() const { return is_constant() && !is_zero(); }
  /// Nonzero constant term: a unit of the local ring at the origin.
  bool is_local_unit() const { return constant_term() != 0; }
  Rational constant_term() const;
  int total_degree() const;

  /// Leading term under the ring's default order. Requires nonzero.
  const Term& leading_term() const;
  /// Leading term under an arbitrary order. Requires nonzero.
  Term leading_term(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial monic() const;

  /// Reinterpret in another ring, matching variables by name. Variables of
  /// this polynomial that occur with nonzero exponent must exist in `target`.
  Polynomial map_to(const RingPtr& target) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;
  static Polynomial parse(std::string_view text, const RingPtr& ring);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(ArithOp op, const Polynomial& p, const Polynomial& q);

using PolyVector = std::vector<Polynomial>;

PolyVector zero_vector(const RingPtr& ring, std::size_t rank);
bool is_zero_vector(const PolyVector& v);
std::string vector_to_string(const PolyVector& v);

/// Polynomial matrix, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static PolyMatrix identity(const RingPtr& ring, std::size_t n);
  static PolyMatrix from_rows(const RingPtr& ring,
                              const std::vector<std::vector<Polynomial>>& rows,
                              std::size_t cols_if_empty = 0);
  static PolyMatrix from_columns(const RingPtr& ring, std::size_t rows,
                                 const std::vector<PolyVector>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Polynomial& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  PolyVector column(std::size_t c) const;
  PolyVector row(std::size_t r) const;
  std::vector<PolyVector> columns() const;

  PolyMatrix operator*(const PolyMatrix& other) const;
  PolyMatrix operator+(const PolyMatrix& other) const;
  PolyMatrix operator-(const PolyMatrix& other) const;
  PolyVector operator*(const PolyVector& v) const;
  PolyMatrix scaled(const Polynomial& p) const;

  PolyMatrix without_row(std::size_t r) const;
  PolyMatrix without_column(std::size_t c) const;
  PolyMatrix map_to(const RingPtr& target) const;

  bool is_zero() const;
  bool operator==(const PolyMatrix& other) const;

  /// "[[z, w]]" style rendering, rows outermost.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Determinant by expansion along rows with memoised column subsets.
Polynomial determinant(const PolyMatrix& m);

// ---------------------------------------------------------------------------
// Module elements in a working representation sorted by a module order.
// These are the objects the division algorithm and Buchberger operate on.

struct ModuleTerm {
  std::size_t component;
  Monomial monomial;
  Rational coeff;
};

/// Sparse element of a free module, terms descending under the order it was
/// built with. An ideal element is a module element of rank 1.
class ModuleElement {
 public:
  ModuleElement() = default;

  static ModuleElement from_vector(const PolyVector& v, const ModuleOrder& order);
  static ModuleElement from_polynomial(const Polynomial& p,
                                       const ModuleOrder& order);
  /// Terms in any order; like terms are merged and zeros dropped.
  static ModuleElement from_terms(std::vector<ModuleTerm> terms,
                                  const ModuleOrder& order);

  PolyVector to_vector(const RingPtr& ring, std::size_t rank) const;
  Polynomial to_polynomial(const RingPtr& ring) const;

  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& lead() const { return terms_.front(); }
  const std::vector<ModuleTerm>& terms() const { return terms_; }

  /// this + c * m * other
  void add_multiple(const Rational& c, const Monomial& m,
                    const ModuleElement& other, const ModuleOrder& order);
  ModuleElement times(const Rational& c, const Monomial& m) const;
  void make_monic();
  void pop_lead() { terms_.erase(terms_.begin()); }

  bool operator==(const ModuleElement& other) const;

 private:
  std::vector<ModuleTerm> terms_;
};

struct ModuleDivision {
  std::vector<ModuleElement> quotients;  // rank-1 polynomials, one per divisor
  ModuleElement remainder;
};

/// Multivariate division with the first-divisor-wins rule. Quotients are
/// polynomials stored as rank-1 elements (component 0).
ModuleDivision divide_elements(const ModuleElement& f,
                               const std::vector<ModuleElement>& divisors,
                               const ModuleOrder& order);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

struct VectorDivisionResult {
  std::vector<Polynomial> quotients;
  PolyVector remainder;
};

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const MonomialOrder& order);
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);
VectorDivisionResult divide(const PolyVector& f,
                            const std::vector<PolyVector>& divisors,
                            const ModuleOrder& order);

}  // namespace rescalc
