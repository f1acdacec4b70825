#include "doctest.h"

#include <random>

#include "rescalc/groebner.hpp"
#include "test_support.hpp"

using namespace rescalc;
using rescalc::testing::P;
using rescalc::testing::Ps;
using rescalc::testing::random_poly;

namespace {

// v is a nonzero rational multiple of w.
bool proportional(const PolyVector& v, const PolyVector& w) {
  if (v.size() != w.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero() != w[i].is_zero()) return false;
    if (v[i].is_zero()) continue;
    Rational r = v[i].leading_term().coeff / w[i].leading_term().coeff;
    if (ratio && *ratio != r) return false;
    ratio = r;
    if (v[i] != w[i] * r) return false;
  }
  return ratio.has_value();
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("Gröbner basis examples") {
  auto L = PolynomialRing::make({"x", "y"}, MonomialOrder::lex());
  CHECK(groebner_basis(Ps(L, {"x - y", "x + y"}), L->order()) == Ps(L, {"x", "y"}));

  auto G = PolynomialRing::make({"x", "y"});
  // S(x^2, xy) = y*x^2 - x*xy = 0.
  CHECK(groebner_basis(Ps(G, {"x^2", "x*y"}), G->order()) == Ps(G, {"x^2", "x*y"}));
  CHECK(groebner_basis(Ps(G, {"3*x^2*y - 6*y + 1"}), G->order()) ==
        Ps(G, {"x^2*y - 2*y + 1/3"}));
}

TEST_CASE("Buchberger certificate on random ideals") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(5);
  for (int i = 0; i < 12; ++i) {
    std::vector<Polynomial> gens{random_poly(R, rng, 3, 2), random_poly(R, rng, 3, 2)};
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto gb = groebner_basis(gens, ord);
      CHECK(is_groebner_basis(gb, ord));
      for (std::size_t a = 0; a < gb.size(); ++a) {
        CHECK(gb[a].leading_term(ord).coeff == 1);
        for (std::size_t b = 0; b < gb.size(); ++b) {
          if (a == b) continue;
          for (const auto& t : gb[b].terms())
            CHECK_FALSE(gb[a].leading_term(ord).monomial.divides(t.monomial));
        }
      }
    }
  }
}

TEST_CASE("normal forms and membership") {
  auto R = PolynomialRing::make({"z", "w"});
  Ideal m(R, Ps(R, {"z", "w"}));
  CHECK(m.normal_form(P(R, "z^3 - w^2")).is_zero());
  CHECK(m.normal_form(P(R, "1")) == P(R, "1"));
  CHECK(ideal_member(P(R, "z^3 - w^2"), m));
  CHECK_FALSE(ideal_member(P(R, "1"), m));

  auto S = PolynomialRing::make({"x", "y"});
  CHECK_FALSE(ideal_member(P(S, "x"), Ideal(S, Ps(S, {"x^2"}))));
  QuotientContext ctx(Ideal(S, Ps(S, {"x*y"})));
  CHECK(normal_form(P(S, "x^2*y"), Ideal(S, {}), ctx).is_zero());
  Polynomial f = P(S, "x^3 + x*y^2 + y");
  CHECK(normal_form(normal_form(f, Ideal(S, {P(S, "y^2")}), ctx), Ideal(S, {P(S, "y^2")}), ctx) ==
        normal_form(f, Ideal(S, {P(S, "y^2")}), ctx));
}

TEST_CASE("membership consistency on constructed combinations") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(17);
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial> gens{random_poly(R, rng, 2, 2), random_poly(R, rng, 2, 2)};
    gens[0] = gens[0] * P(R, "x");  // keep the ideal proper
    gens[1] = gens[1] * P(R, "y");
    Ideal I(R, gens);
    if (I.is_zero()) continue;
    Polynomial f = random_poly(R, rng) * gens[0] + random_poly(R, rng) * gens[1];
    CHECK(ideal_member(f, I));
    CHECK_FALSE(ideal_member(f + P(R, "1"), I));
  }
}

TEST_CASE("syzygy examples") {
  auto R = PolynomialRing::make({"z", "w"});
  auto s = syzygies(Ideal(R, Ps(R, {"z", "w"})));
  REQUIRE(s.generators.size() == 1);
  CHECK(proportional(s.generators[0], PolyVector{P(R, "-w"), P(R, "z")}));

  auto T = PolynomialRing::make({"x", "y", "z"});
  auto t = syzygies(Ideal(T, Ps(T, {"x*z", "y*z"})));
  REQUIRE(t.generators.size() == 1);
  CHECK(proportional(t.generators[0], PolyVector{P(T, "-y"), P(T, "x")}));

  auto u = syzygies(Ideal(T, Ps(T, {"x^2 + y*z + 1"})));
  CHECK(u.generators.empty());
}

TEST_CASE("quotient-ring syzygies") {
  auto S = PolynomialRing::make({"x", "y"});
  QuotientContext ctx(Ideal(S, Ps(S, {"x*y"})));
  auto s = syzygies(Ideal(S, Ps(S, {"x"})), ctx);
  REQUIRE(s.generators.size() == 1);
  CHECK(proportional(s.generators[0], PolyVector{P(S, "y")}));
  auto t = syzygies(Ideal(S, Ps(S, {"y"})), ctx);
  REQUIRE(t.generators.size() == 1);
  CHECK(proportional(t.generators[0], PolyVector{P(S, "x")}));
  // x + y is a non-zerodivisor on Q[x,y]/(xy).
  CHECK(syzygies(Ideal(S, Ps(S, {"x + y"})), ctx).generators.empty());
}

TEST_CASE("syzygy soundness on random generator sets") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(23);
  for (int i = 0; i < 8; ++i) {
    Ideal I(R, {random_poly(R, rng, 2, 2), random_poly(R, rng, 2, 2), random_poly(R, rng, 2, 1)});
    if (I.generators().size() < 2) continue;
    auto s = syzygies(I);
    CHECK(!s.generators.empty());
    for (const auto& v : s.generators) {
      Polynomial sum(R);
      for (std::size_t k = 0; k < v.size(); ++k) sum += v[k] * I.generators()[k];
      CHECK(sum.is_zero());
    }
  }
  QuotientContext ctx(Ideal(R, Ps(R, {"x*z - y^2"})));
  for (int i = 0; i < 5; ++i) {
    Ideal I(R, {random_poly(R, rng, 2, 2), P(R, "x")});
    auto s = syzygies(I, ctx);
    for (const auto& v : s.generators) {
      Polynomial sum(R);
      for (std::size_t k = 0; k < v.size(); ++k) sum += v[k] * I.generators()[k];
      CHECK(ctx.reduce(sum).is_zero());
    }
  }
}

TEST_CASE("module Gröbner basis and normal form") {
  auto R = PolynomialRing::make({"x", "y"});
  ModuleOrder pot{R->order(), ModuleRule::PositionOverTerm, {}};
  SubmoduleBasis M{R, 2, {{P(R, "x"), P(R, "y")}, {P(R, "y"), P(R, "0")}}, pot};
  auto gb = groebner_basis(M);
  std::vector<ModuleElement> elems;
  for (const auto& g : gb.generators) elems.push_back(ModuleElement::from_vector(g, pot));
  CHECK(is_groebner_basis(elems, pot));
  // y*(x, y) - x*(y, 0) = (0, y^2)
  CHECK(is_zero_vector(normal_form(PolyVector{P(R, "0"), P(R, "y^2")}, gb)));
  CHECK_FALSE(is_zero_vector(normal_form(PolyVector{P(R, "0"), P(R, "y")}, gb)));
}

TEST_CASE("elimination") {
  auto R = PolynomialRing::make({"t", "x", "y"});
  Ideal e = elimination(Ideal(R, Ps(R, {"x - t", "y - t^2"})), {"x", "y"});
  REQUIRE(e.generators().size() == 1);
  // Substituting t = x into y - t^2 gives the generator.
  CHECK(e.generators()[0].monic() == P(R, "y - x^2").monic());
  auto S = PolynomialRing::make({"x", "y"});
  CHECK(elimination(Ideal(S, Ps(S, {"x"})), {"x"}).equals(Ideal(S, Ps(S, {"x"}))));
  CHECK(elimination(Ideal::unit(S), {"y"}).is_unit());
  CHECK_THROWS_AS(elimination(Ideal(S, Ps(S, {"x"})), {"q"}), AlgebraError);
}

TEST_CASE("intersection") {
  auto R = PolynomialRing::make({"x", "y"});
  Ideal x(R, Ps(R, {"x"})), y(R, Ps(R, {"y"}));
  Ideal xy = ideal_intersect(x, y);
  CHECK(x.contains(xy));
  CHECK(y.contains(xy));
  CHECK(xy.contains(P(R, "x*y")));
  CHECK(xy.equals(Ideal(R, Ps(R, {"x*y"}))));
  Ideal I(R, Ps(R, {"x^2 - y", "x*y"}));
  CHECK(ideal_intersect(I, I).equals(I));
  CHECK(ideal_intersect(I, Ideal::unit(R)).equals(I));
}

TEST_CASE("ideal quotients") {
  auto R = PolynomialRing::make({"x", "y"});
  Ideal q = ideal_quotient(Ideal(R, Ps(R, {"x*y"})), P(R, "x"));
  CHECK(q.equals(Ideal(R, Ps(R, {"y"}))));
  // Oracle: y*x lies in (xy), 1*x does not.
  CHECK(Ideal(R, Ps(R, {"x*y"})).contains(P(R, "y") * P(R, "x")));
  Ideal I(R, Ps(R, {"x^2", "y^3 - x"}));
  CHECK(ideal_quotient(I, P(R, "1")).equals(I));

  QuotientContext ctx(Ideal(R, Ps(R, {"x*y"})));
  Ideal zero_q = ideal_quotient(Ideal(R, {}), P(R, "x + y"), ctx);
  CHECK(zero_q.is_zero());
  // Oracle through the ambient ring: ((xy) : (x+y)) = (xy).
  CHECK(ideal_quotient(Ideal(R, Ps(R, {"x*y"})), P(R, "x + y"))
            .equals(Ideal(R, Ps(R, {"x*y"}))));
  CHECK_THROWS_AS(ideal_quotient(I, P(R, "0")), AlgebraError);
}

TEST_CASE("quotient duality on random instances") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::mt19937 rng(29);
  for (int i = 0; i < 8; ++i) {
    Ideal I(R, {P(R, "x") * random_poly(R, rng, 2, 1), P(R, "y*z") * random_poly(R, rng, 2, 1)});
    Polynomial f = random_poly(R, rng, 2, 1);
    if (f.is_zero() || I.is_zero()) continue;
    Ideal q = ideal_quotient(I, f);
    for (const auto& g : q.generators()) CHECK(I.contains(g * f));
    // Constructed g with g*f in I: any element of I, and the generators of I
    // times anything.
    for (const auto& g : I.generators()) CHECK(q.contains(g * random_poly(R, rng, 2, 1)));
  }
}

TEST_CASE("saturation") {
  auto R = PolynomialRing::make({"x", "y"});
  CHECK(saturation(Ideal(R, Ps(R, {"x^2*y"})), P(R, "y")).equals(Ideal(R, Ps(R, {"x^2"}))));
  CHECK(saturation(Ideal(R, Ps(R, {"x"})), P(R, "y")).equals(Ideal(R, Ps(R, {"x"}))));
  CHECK(saturation(Ideal::unit(R), P(R, "x + 1")).is_unit());
  CHECK(saturation(Ideal(R, Ps(R, {"x^2*y^3", "x^3"})), P(R, "x"))
            .equals(Ideal::unit(R)));
}

TEST_CASE("dimension examples") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  auto d = dimension(Ideal(R, Ps(R, {"x*z", "y*z"})));
  CHECK(d.dim == 2);
  CHECK(d.codim == 1);
  auto S = PolynomialRing::make({"z", "w"});
  auto p = dimension(Ideal(S, Ps(S, {"z", "w"})));
  CHECK(p.dim == 0);
  CHECK(p.codim == 2);
  auto z = dimension(Ideal(R, {}));
  CHECK(z.dim == 3);
  CHECK(z.codim == 0);
  auto u = dimension(Ideal::unit(R));
  CHECK(u.dim == -1);
  CHECK(u.codim == kInfiniteCodim);
  CHECK(dimension(Ideal(S, Ps(S, {"z^3 - w^2"}))).codim == 1);
}

TEST_CASE("dimension of monomial ideals agrees with transversal enumeration") {
  auto R = PolynomialRing::make({"x", "y", "z"});
  std::vector<Monomial> mons;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c)
        if (a + b + c > 0) mons.push_back(Monomial({a, b, c}));
  auto oracle = [&](const std::vector<Monomial>& gens) {
    // V(I) is the union of coordinate subspaces {x_i = 0 : i in T} over
    // transversals T of the generator supports; dim = 3 - min |T|.
    int best = 4;
    for (unsigned t = 0; t < 8; ++t) {
      bool hits = true;
      for (const auto& g : gens) {
        bool h = false;
        for (int i = 0; i < 3; ++i)
          if ((t >> i & 1u) && g[i] > 0) h = true;
        hits = hits && h;
      }
      if (hits) best = std::min(best, __builtin_popcount(t));
    }
    return 3 - best;
  };
  int checked = 0;
  for (std::size_t a = 0; a < mons.size(); ++a)
    for (std::size_t b = a; b < mons.size(); ++b)
      for (std::size_t c = b; c < mons.size(); ++c) {
        std::vector<Monomial> gens{mons[a], mons[b], mons[c]};
        std::vector<Polynomial> ps;
        for (const auto& m : gens) ps.push_back(Polynomial::monomial(R, m));
        CHECK(dimension(Ideal(R, ps)).dim == oracle(gens));
        ++checked;
      }
  CHECK(checked > 1000);
}

TEST_CASE("codimension inside a quotient context") {
  auto R = PolynomialRing::make({"x", "y"});
  QuotientContext ctx(Ideal(R, Ps(R, {"x*y"})));
  CHECK(codim_in(Ideal(R, Ps(R, {"x"})), ctx) == 0);
  CHECK(codim_in(Ideal(R, Ps(R, {"x", "y"})), ctx) == 1);
  CHECK(codim_in(Ideal(R, Ps(R, {"x + 1", "y"})), ctx) == 1);
  CHECK(codim_in(Ideal::unit(R), ctx) == kInfiniteCodim);
}

TEST_CASE("image lifting") {
  auto R = PolynomialRing::make({"z", "w"});
  auto phi = PolyMatrix::from_rows(R, {Ps(R, {"z", "w"})});
  ImageLifter lifter(phi, QuotientContext(R));
  auto x = lifter.lift(PolyVector{P(R, "z^3 - w^2")});
  REQUIRE(x.has_value());
  CHECK(phi * *x == PolyVector{P(R, "z^3 - w^2")});
  CHECK_FALSE(lifter.lift(PolyVector{P(R, "1 + z")}).has_value());
  ImageLifter lex_lifter(phi, QuotientContext(R), MonomialOrder::lex());
  auto y = lex_lifter.lift(PolyVector{P(R, "z^3 - w^2")});
  REQUIRE(y.has_value());
  CHECK(phi * *y == PolyVector{P(R, "z^3 - w^2")});
}

}  // TEST_SUITE
