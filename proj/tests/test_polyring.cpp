#include "doctest.h"

#include <map>
#include <random>

#include "rescalc/polyring.hpp"
#include "test_support.hpp"

using namespace rescalc;
using rescalc::testing::P;
using rescalc::testing::random_poly;

namespace {

// Independent oracle: polynomials as plain exponent-vector maps.
using Dense = std::map<std::vector<int>, Rational>;

Dense to_dense(const Polynomial& p) {
  Dense d;
  for (const auto& t : p.terms()) d[t.monomial.exponents()] += t.coeff;
  return d;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Dense dense_add(Dense a, const Dense& b, int sign = 1) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  for (auto it = a.begin(); it != a.end();)
    it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

}  // namespace

TEST_SUITE("polyring") {

TEST_CASE("parse transcribes terms") {
  auto R = PolynomialRing::make({"z", "w"});
  Polynomial p = P(R, "z^3 - w^2");
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0].monomial == Monomial({3, 0}));
  CHECK(p.terms()[0].coeff == 1);
  CHECK(p.terms()[1].monomial == Monomial({0, 2}));
  CHECK(p.terms()[1].coeff == -1);
  CHECK(P(R, "0").is_zero());
  CHECK(P(R, "0").terms().empty());
}

TEST_CASE("parse expands powers like repeated multiplication") {
  auto R = PolynomialRing::make({"x", "y"});
  Dense xy{{{1, 0}, 1}, {{0, 1}, 1}};
  Dense expected = dense_mul(xy, xy);
  CHECK(to_dense(P(R, "(x+y)^2")) == expected);
  CHECK(P(R, "(x+y)^2").to_string() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("parse errors carry a position") {
  auto R = PolynomialRing::make({"x", "y"});
  CHECK_THROWS_AS(P(R, "x + q"), ParseError);
  try {
    P(R, "x + q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P(R, "x +"), ParseError);
  CHECK_THROWS_AS(P(R, "(x"), ParseError);
  CHECK_THROWS_AS(P(R, "x^"), ParseError);
  CHECK_THROWS_AS(P(R, "1/0"), ParseError);
}

TEST_CASE("parse accepts rationals, implicit products and unary minus") {
  auto R = PolynomialRing::make({"x", "y"});
  CHECK(P(R, "3/2*x") == P(R, "x*3/2"));
  CHECK(P(R, "2x y") == P(R, "2*x*y"));
  CHECK(P(R, "-x + y") == P(R, "y - x"));
  CHECK(P(R, "4/6").to_string() == "2/3");
  CHECK(P(R, "-1/2*x^2 + 3").to_string() == "-1/2*x^2 + 3");
}

TEST_CASE("arithmetic examples") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  CHECK(poly_arith(ArithOp::Mul, P(R, "z"), P(R, "z^2")) == P(R, "z^3"));
  Polynomial p = P(R, "x^2 - 3*y*z + 7");
  CHECK(poly_arith(ArithOp::Sub, p, p).is_zero());
  Polynomial prod = poly_arith(ArithOp::Mul, P(R, "x+y"), P(R, "x-y"));
  CHECK(to_dense(prod) == dense_mul(to_dense(P(R, "x+y")), to_dense(P(R, "x-y"))));
  CHECK(prod.to_string() == "x^2 - y^2");
}

TEST_CASE("ring mismatch is an error") {
  auto R = PolynomialRing::make({"x", "y"});
  auto S = PolynomialRing::make({"x", "z"});
  CHECK_THROWS_AS(P(R, "x") + P(S, "x"), AlgebraError);
  CHECK_THROWS_AS(PolynomialRing::make({"x", "x"}), AlgebraError);
  CHECK_THROWS_AS(PolynomialRing::make({}), AlgebraError);
}

TEST_CASE("monomial order examples") {
  CHECK(compare_monomials(MonomialOrder::lex(), Monomial({1, 0}), Monomial({0, 2})) > 0);
  CHECK(compare_monomials(MonomialOrder::grevlex(), Monomial({2, 0}), Monomial({1, 1})) > 0);
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()})
    CHECK(compare_monomials(order, Monomial({2, 1, 0}), Monomial({2, 1, 0})) == 0);
  CHECK_THROWS_AS(compare_monomials(MonomialOrder::lex(), Monomial({1}), Monomial({1, 0})),
                  AlgebraError);
  // grlex and grevlex disagree on x*z^2 vs y^3 ... both degree 3
  CHECK(compare_monomials(MonomialOrder::grlex(), Monomial({1, 0, 2}), Monomial({0, 3, 0})) > 0);
  CHECK(compare_monomials(MonomialOrder::grevlex(), Monomial({1, 0, 2}), Monomial({0, 3, 0})) < 0);
}

TEST_CASE("orders are multiplicative strict total orders with 1 minimal") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> expo(0, 3);
  std::vector<Monomial> mons;
  for (int i = 0; i < 25; ++i) mons.push_back(Monomial({expo(rng), expo(rng), expo(rng)}));
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grlex(),
                                    MonomialOrder::grevlex(),
                                    MonomialOrder::elimination({true, false, false})};
  for (const auto& ord : orders) {
    for (const auto& a : mons) {
      CHECK(ord.compare(a, Monomial(3)) >= 0);
      for (const auto& b : mons) {
        auto ab = ord.compare(a, b);
        auto ba = ord.compare(b, a);
        CHECK((ab == 0) == (a == b));
        CHECK((ab < 0) == (ba > 0));
        for (const auto& t : mons) {
          if (ab < 0) CHECK(ord.compare(a * t, b * t) < 0);
          if (ab < 0 && ord.compare(b, t) < 0) CHECK(ord.compare(a, t) < 0);
        }
      }
    }
  }
}

TEST_CASE("module orders") {
  ModuleOrder pot{MonomialOrder::grevlex(), ModuleRule::PositionOverTerm, {}};
  ModuleOrder top{MonomialOrder::grevlex(), ModuleRule::TermOverPosition, {}};
  Monomial x({1, 0}), y2({0, 2});
  CHECK(pot.compare(0, x, 1, y2) > 0);
  CHECK(top.compare(0, x, 1, y2) < 0);
  CHECK(top.compare(0, x, 1, x) > 0);
  ModuleOrder schreyer{MonomialOrder::grevlex(), ModuleRule::Schreyer,
                       {Monomial({0, 2}), Monomial({1, 0})}};
  // x*e_0 maps to x*y^2, y^2*e_1 to x*y^2: tie broken by index.
  CHECK(schreyer.compare(0, x, 1, y2) > 0);
  CHECK(schreyer.compare(1, Monomial({0, 3}), 0, x) > 0);
}

TEST_CASE("division examples") {
  auto R = PolynomialRing::make({"x", "y"}, MonomialOrder::lex());
  auto d = divide(P(R, "x*y + 1"), {P(R, "y + 1")});
  REQUIRE(d.quotients.size() == 1);
  CHECK(d.quotients[0] == P(R, "x"));
  CHECK(d.remainder == P(R, "1 - x"));
  CHECK(d.quotients[0] * P(R, "y+1") + d.remainder == P(R, "x*y + 1"));

  auto S = PolynomialRing::make({"z", "w"});
  auto e = divide(P(S, "z^3 - w^2"), {P(S, "z"), P(S, "w")});
  CHECK(e.remainder.is_zero());
  CHECK(e.quotients[0] * P(S, "z") + e.quotients[1] * P(S, "w") == P(S, "z^3 - w^2"));

  auto f = divide(P(R, "1"), {P(R, "x")});
  CHECK(f.quotients[0].is_zero());
  CHECK(f.remainder == P(R, "1"));

  CHECK_THROWS_AS(divide(P(R, "x"), {}), AlgebraError);
}

TEST_CASE("vector division and rank mismatch") {
  auto R = PolynomialRing::make({"x", "y"});
  ModuleOrder pot{R->order(), ModuleRule::PositionOverTerm, {}};
  PolyVector f{P(R, "x^2"), P(R, "y")};
  std::vector<PolyVector> gs{{P(R, "x"), P(R, "0")}, {P(R, "0"), P(R, "1")}};
  auto d = divide(f, gs, pot);
  CHECK(is_zero_vector(d.remainder));
  CHECK(d.quotients[0] == P(R, "x"));
  CHECK(d.quotients[1] == P(R, "y"));
  CHECK_THROWS_AS(divide(f, {{P(R, "x")}}, pot), AlgebraError);
}

TEST_CASE("random ring axioms and division identity") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_poly(R, rng), q = random_poly(R, rng), r = random_poly(R, rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(to_dense(p * q) == dense_mul(to_dense(p), to_dense(q)));
    CHECK(to_dense(p - q) == dense_add(to_dense(p), to_dense(q), -1));

    std::vector<Polynomial> divisors{random_poly(R, rng, 2), random_poly(R, rng, 3)};
    if (divisors[0].is_zero() || divisors[1].is_zero()) continue;
    for (auto ord : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
      auto d = divide(p * q, divisors, ord);
      Polynomial back = d.remainder;
      for (std::size_t k = 0; k < divisors.size(); ++k) back += d.quotients[k] * divisors[k];
      CHECK(back == p * q);
      for (const auto& t : d.remainder.terms())
        for (const auto& g : divisors)
          CHECK_FALSE(g.leading_term(ord).monomial.divides(t.monomial));
    }
  }
}

TEST_CASE("print then parse is the identity") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    Polynomial p = random_poly(R, rng, 5, 3) * Rational(1, 1 + (i % 4));
    CHECK(Polynomial::parse(p.to_string(), R) == p);
  }
}

TEST_CASE("determinant and matrix algebra") {
  auto R = PolynomialRing::make({"z", "w"});
  auto A = PolyMatrix::from_rows(R, {{P(R, "1"), P(R, "0")}, {P(R, "-1"), P(R, "1")}});
  CHECK(determinant(A) == P(R, "1"));
  auto B = PolyMatrix::from_rows(R, {{P(R, "z"), P(R, "w"), P(R, "1")},
                                     {P(R, "w"), P(R, "z"), P(R, "0")},
                                     {P(R, "1"), P(R, "0"), P(R, "z")}});
  // Cofactor expansion by hand: z*(z^2) - w*(w*z) + 1*(0 - z)
  CHECK(determinant(B) == P(R, "z^3 - w^2*z - z"));
  CHECK(determinant(PolyMatrix(R, 0, 0)) == P(R, "1"));
  CHECK((A * PolyMatrix::identity(R, 2)) == A);
}

TEST_CASE("derivative and local units") {
  auto R = PolynomialRing::make({"z", "w"});
  CHECK(P(R, "z^3 - w^2").derivative(1) == P(R, "-2*w"));
  CHECK(P(R, "1 + z").is_local_unit());
  CHECK_FALSE(P(R, "1 + z").is_unit());
  CHECK(P(R, "-3").is_unit());
}

}  // TEST_SUITE
