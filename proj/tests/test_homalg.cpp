#include "doctest.h"

#include <map>
#include <random>

#include "rescalc/homalg.hpp"
#include "test_support.hpp"

using namespace rescalc;
using rescalc::testing::M;
using rescalc::testing::P;
using rescalc::testing::Ps;
using rescalc::testing::random_poly;

namespace {

RingPtr xyz() { return PolynomialRing::make({"x", "y", "z"}); }

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal(r, Ps(r, gens)); }

// Fifteen ideals in three variables with finite minimal resolutions.
std::vector<std::vector<std::string>> resolution_corpus() {
  return {{"x*z", "y*z"},
          {"x", "y"},
          {"x", "y", "z"},
          {"x^2", "x*y", "y^2"},
          {"x*y", "y*z", "x*z"},
          {"x^2 - y*z", "x*y"},
          {"z^3 - y^2"},
          {"x^2", "y^2", "z^2"},
          {"x*y - z^2", "x^2 - y*z"},
          {"x^3", "y^3", "x*y*z"},
          {"x + y + z", "x*y + y*z + x*z", "x*y*z"},
          {"x^2 + y^2 - 1", "x - y"},
          {"x*y", "x*z"},
          {"x^2*y", "x*y^2", "z^2"},
          {"x*z - y^2", "y*z - x^3", "z^2 - x^2*y"}};
}

// Kernel of a rational matrix given as columns of sparse maps.
std::vector<std::vector<Rational>> rational_kernel(
    const std::vector<std::map<std::pair<std::size_t, Monomial>, Rational>>& cols) {
  std::map<std::pair<std::size_t, Monomial>, std::size_t> row_index;
  for (const auto& c : cols)
    for (const auto& [key, v] : c) row_index.emplace(key, row_index.size());
  const std::size_t n = cols.size();
  std::vector<std::vector<Rational>> a(row_index.size(), std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [key, v] : cols[j]) a[row_index.at(key)][j] = v;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

// Every syzygy of `gens` modulo I_Z with entries of degree <= deg lies in the
// module spanned by `computed` plus I_Z times the free module.
bool syzygies_complete_to_degree(const std::vector<Polynomial>& gens, const QuotientContext& ctx,
                                 const std::vector<PolyVector>& computed, int deg) {
  const RingPtr& ring = ctx.ring();
  const std::size_t n = ring->nvars();
  std::vector<Monomial> mons;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> gen = [&](std::size_t i, int left) {
    if (i == n) {
      mons.push_back(Monomial(e));
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      gen(i + 1, left - a);
    }
    e[i] = 0;
  };
  gen(0, deg);
  std::vector<std::map<std::pair<std::size_t, Monomial>, Rational>> cols;
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& m : mons) {
      Polynomial image = ctx.reduce(Polynomial::monomial(ring, m) * gens[i]);
      std::map<std::pair<std::size_t, Monomial>, Rational> col;
      for (const auto& t : image.terms()) col[{0, t.monomial}] = t.coeff;
      cols.push_back(std::move(col));
      unknowns.emplace_back(i, m);
    }
  std::vector<PolyVector> span = computed;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& h : ctx.relations().generators()) {
      PolyVector v = zero_vector(ring, gens.size());
      v[i] = h;
      span.push_back(v);
    }
  ModuleOrder pot{ring->order(), ModuleRule::PositionOverTerm, {}};
  SubmoduleBasis gb = groebner_basis(SubmoduleBasis{ring, gens.size(), span, pot});
  for (const auto& k : rational_kernel(cols)) {
    PolyVector s = zero_vector(ring, gens.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (k[u] != 0)
        s[unknowns[u].first] += Polynomial::monomial(ring, unknowns[u].second) * k[u];
    if (!is_zero_vector(normal_form(s, gb))) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("homalg") {

TEST_CASE("free resolution of (xz, yz)") {
  auto R = xyz();
  ChainComplex c = free_resolution(I(R, {"x*z", "y*z"}));
  CHECK(c.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK(c.complete());
  CHECK(c.is_complex());
  CHECK(equal_up_to_units(c.phi(1), M(R, {{"x*z", "y*z"}})));
  CHECK(equal_up_to_units(c.phi(2), M(R, {{"-y"}, {"x"}})));
}

TEST_CASE("free resolution of the maximal ideal in two variables") {
  auto R = PolynomialRing::make({"z", "w"});
  ChainComplex c = free_resolution(I(R, {"z", "w"}));
  CHECK(c.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK(equal_up_to_units(c.phi(2), M(R, {{"-w"}, {"z"}})));
  ChainComplex k = koszul_complex(Ps(R, {"z", "w"}));
  CHECK(equal_up_to_units(c.phi(1), k.phi(1)));
  CHECK(equal_up_to_units(c.phi(2), k.phi(2)));
}

TEST_CASE("periodic resolution over Q[x,y]/(xy)") {
  auto R = PolynomialRing::make({"x", "y"});
  QuotientContext ctx(I(R, {"x*y"}));
  ChainComplex c = free_resolution(I(R, {"x"}), ctx, 6);
  CHECK(c.truncated);
  REQUIRE(c.length() == 6);
  CHECK(c.is_complex());
  for (std::size_t k = 1; k <= 6; ++k)
    CHECK(equal_up_to_units(c.phi(k), M(R, {{k % 2 == 1 ? "x" : "y"}})));
  auto report = detect_periodicity(c);
  CHECK(report.detected);
  CHECK(report.offset == 0);
  CHECK(report.period == 2);
}

TEST_CASE("periodic resolution over Q[x,y]/(x^2)") {
  auto R = PolynomialRing::make({"x", "y"});
  QuotientContext ctx(I(R, {"x^2"}));
  ChainComplex c = free_resolution(I(R, {"x"}), ctx, 5);
  CHECK(c.truncated);
  REQUIRE(c.length() == 5);
  for (std::size_t k = 1; k <= 5; ++k) CHECK(equal_up_to_units(c.phi(k), M(R, {{"x"}})));
  auto report = detect_periodicity(c);
  CHECK(report.detected);
  CHECK(report.offset == 0);
  CHECK(report.period == 1);
  CHECK_FALSE(detect_periodicity(free_resolution(I(R, {"x", "y"}))).detected);
}

TEST_CASE("resolution cap") {
  auto R = xyz();
  CHECK_THROWS_AS(free_resolution(I(R, {"x"}), 0), AlgebraError);
  ChainComplex c = free_resolution(I(R, {"x", "y", "z"}), 2);
  CHECK(c.truncated);
  CHECK(c.length() == 2);
  CHECK_THROWS_AS(expected_ranks(c), AlgebraError);
}

TEST_CASE("minimalize") {
  auto R = PolynomialRing::make({"z", "w"});
  ChainComplex raw = free_resolution(I(R, {"z", "w", "z + w"}), kDefaultResolutionCap, false);
  CHECK(raw.ranks[1] == 3);
  ChainComplex c = minimalize(raw);
  CHECK(c.ranks == std::vector<std::size_t>{1, 2, 1});
  CHECK(c.is_complex());
  Ideal before(R, raw.phi(1).row(0)), after(R, c.phi(1).row(0));
  CHECK(before.equals(after));

  ChainComplex k = koszul_complex(Ps(R, {"z", "w"}));
  ChainComplex km = minimalize(k);
  CHECK(km.ranks == k.ranks);
  CHECK(km.diffs == k.diffs);

  ChainComplex unit = free_resolution(Ideal::unit(R));
  CHECK(unit.ranks == std::vector<std::size_t>{0});
  CHECK(unit.length() == 0);
}

TEST_CASE("minimalize flags non-constant local units") {
  auto R = PolynomialRing::make({"x"});
  ChainComplex c{QuotientContext(R)};
  c.ranks = {1, 1};
  c.diffs = {M(R, {{"1 + x"}})};
  ChainComplex m = minimalize(c);
  CHECK(m.not_locally_minimal);
  CHECK(m.ranks == c.ranks);
}

TEST_CASE("Koszul complexes") {
  auto R = xyz();
  ChainComplex k1 = koszul_complex(Ps(R, {"x^2 + y"}));
  CHECK(k1.ranks == std::vector<std::size_t>{1, 1});
  CHECK(k1.phi(1) == M(R, {{"x^2 + y"}}));

  auto S = PolynomialRing::make({"z", "w"});
  ChainComplex k2 = koszul_complex(Ps(S, {"z", "w"}));
  CHECK(k2.phi(1) == M(S, {{"z", "w"}}));
  CHECK(k2.phi(2) == M(S, {{"-w"}, {"z"}}));

  ChainComplex k3 = koszul_complex(Ps(R, {"x", "y", "z"}));
  CHECK(k3.ranks == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(k3.is_complex());
  CHECK_THROWS_AS(koszul_complex({}), AlgebraError);
}

TEST_CASE("tensor block structure with a Koszul complex of one variable") {
  auto S = PolynomialRing::make({"z", "w"});
  auto T = PolynomialRing::make({"z", "w", "t"});
  ChainComplex e = extend_ring(koszul_complex(Ps(S, {"z", "w"})), T);
  ChainComplex d = koszul_complex(Ps(T, {"t"}));
  ChainComplex g = tensor_complexes(e, d);
  CHECK(g.ranks == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(g.is_complex());
  // eta_1 = [phi_1, t]
  CHECK(g.phi(1) == M(T, {{"z", "w", "t"}}));
  // eta_2 = [[phi_2, -t Id], [0, phi_1]]
  CHECK(g.phi(2) == M(T, {{"-w", "-t", "0"}, {"z", "0", "-t"}, {"0", "z", "w"}}));
  // eta_3 = [[phi_3 (empty), t Id], [0, phi_2]] with E_3 = 0
  CHECK(g.phi(3) == M(T, {{"t"}, {"-w"}, {"z"}}));
}

TEST_CASE("tensor product of one-variable Koszul complexes") {
  auto R = PolynomialRing::make({"x", "y"});
  ChainComplex g = tensor_complexes(koszul_complex(Ps(R, {"x"})), koszul_complex(Ps(R, {"y"})));
  ChainComplex k = koszul_complex(Ps(R, {"x", "y"}));
  CHECK(g.ranks == k.ranks);
  for (std::size_t i = 1; i <= k.length(); ++i) CHECK(equal_up_to_units(g.phi(i), k.phi(i)));

  ChainComplex unit{QuotientContext(R)};
  unit.ranks = {1};
  ChainComplex c = free_resolution(I(R, {"x^2", "x*y"}));
  ChainComplex same = tensor_complexes(c, unit);
  CHECK(same.ranks == c.ranks);
  CHECK(same.diffs == c.diffs);

  auto other = PolynomialRing::make({"x", "y"});
  QuotientContext q(I(R, {"x*y"}));
  ChainComplex cq = koszul_complex(Ps(R, {"x"}), q);
  CHECK_THROWS_AS(tensor_complexes(c, cq), AlgebraError);
}

TEST_CASE("tensor products of random Koszul complexes square to zero") {
  auto R = xyz();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> len(1, 2);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> f, g;
    for (int a = len(rng); a > 0; --a) f.push_back(random_poly(R, rng, 2, 2));
    for (int b = len(rng); b > 0; --b) g.push_back(random_poly(R, rng, 2, 2));
    ChainComplex t = tensor_complexes(koszul_complex(f), koszul_complex(g));
    CHECK(t.is_complex());
  }
}

TEST_CASE("extend ring") {
  auto S = PolynomialRing::make({"z", "w"});
  auto T = PolynomialRing::make({"z", "w", "t"});
  ChainComplex k = koszul_complex(Ps(S, {"z", "w"}));
  ChainComplex e = extend_ring(k, T);
  CHECK(e.ranks == k.ranks);
  CHECK(e.phi(1) == M(T, {{"z", "w"}}));
  CHECK(e.phi(2) == M(T, {{"-w"}, {"z"}}));
  ChainComplex same = extend_ring(k, S);
  CHECK(same.diffs == k.diffs);
  CHECK_THROWS_AS(extend_ring(k, PolynomialRing::make({"z"})), AlgebraError);
}

TEST_CASE("expected ranks") {
  auto S = PolynomialRing::make({"z", "w"});
  auto r = expected_ranks(koszul_complex(Ps(S, {"z", "w"})));
  REQUIRE(r.size() == 3);
  CHECK(r[1] == 1);
  CHECK(r[2] == 1);
  auto r2 = expected_ranks(free_resolution(I(xyz(), {"x*z", "y*z"})));
  CHECK(r2[1] == 1);
  CHECK(r2[2] == 1);
  auto r3 = expected_ranks(koszul_complex(Ps(S, {"z"})));
  CHECK(r3[1] == 1);
}

TEST_CASE("rank loci") {
  auto R = xyz();
  auto d = rank_loci(free_resolution(I(R, {"x*z", "y*z"})));
  REQUIRE(d.loci.size() == 2);
  CHECK(d.loci[0].codim == 1);
  CHECK(d.loci[1].codim == 2);
  CHECK(d.loci[0].ideal.equals(I(R, {"x*z", "y*z"})));
  CHECK(d.loci[1].ideal.equals(I(R, {"x", "y"})));

  auto S = PolynomialRing::make({"z", "w"});
  auto k = rank_loci(koszul_complex(Ps(S, {"z", "w"})));
  CHECK(k.loci[0].ideal.equals(I(S, {"z", "w"})));
  CHECK(k.loci[1].ideal.equals(I(S, {"z", "w"})));
  CHECK(k.loci[0].codim == 2);
  CHECK(k.loci[1].codim == 2);

  auto Q = PolynomialRing::make({"x", "y"});
  QuotientContext ctx(I(Q, {"x*y"}));
  auto p = rank_loci(free_resolution(I(Q, {"x"}), ctx, 6));
  CHECK(p.expected_ranks.empty());
  REQUIRE(p.loci.size() == 6);
  for (const auto& locus : p.loci) {
    CHECK(locus.rank == 1);
    CHECK(locus.ideal.equals(I(Q, {locus.level % 2 == 1 ? "x" : "y"})));
  }
}

TEST_CASE("Buchsbaum-Eisenbud check") {
  auto R = xyz();
  auto v = buchsbaum_eisenbud_check(free_resolution(I(R, {"x*z", "y*z"})));
  CHECK(v.applicable);
  CHECK(v.passed);
  auto S = PolynomialRing::make({"z", "w"});
  CHECK(buchsbaum_eisenbud_check(koszul_complex(Ps(S, {"z", "w"}))).passed);
  auto bad = buchsbaum_eisenbud_check(koszul_complex(Ps(R, {"x", "x"})));
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.failing_level.has_value());
  CHECK(*bad.failing_level == 2);
  CHECK(bad.levels[1].codim == 1);

  auto Q = PolynomialRing::make({"x", "y"});
  QuotientContext ctx(I(Q, {"x*y"}));
  auto refused = buchsbaum_eisenbud_check(free_resolution(I(Q, {"x"}), ctx, 4));
  CHECK_FALSE(refused.applicable);
  CHECK_FALSE(refused.reason.empty());
  auto quotient_koszul = buchsbaum_eisenbud_check(koszul_complex(Ps(Q, {"x + y"}), ctx));
  CHECK_FALSE(quotient_koszul.applicable);
}

TEST_CASE("minimal resolutions of the corpus pass Buchsbaum-Eisenbud") {
  auto R = xyz();
  for (const auto& gens : resolution_corpus()) {
    CAPTURE(gens.front());
    ChainComplex c = free_resolution(I(R, gens));
    CHECK(c.complete());
    CHECK(c.is_complex());
    auto v = buchsbaum_eisenbud_check(c);
    CHECK(v.passed);
    // Expected ranks of a passing complex are its generic ranks.
    auto r = expected_ranks(c);
    for (const auto& level : v.levels) CHECK(level.generic == r[level.level]);
  }
}

TEST_CASE("syzygy completeness spot-check through Buchsbaum-Eisenbud") {
  auto R = xyz();
  std::mt19937 rng(37);
  for (int i = 0; i < 6; ++i) {
    Ideal ideal(R, {P(R, "x") * random_poly(R, rng, 2, 1), P(R, "y") * random_poly(R, rng, 2, 1),
                    P(R, "z^2")});
    ChainComplex c = free_resolution(ideal);
    CHECK(c.is_complex());
    CHECK(buchsbaum_eisenbud_check(c).passed);
    Ideal before(R, ideal.generators()), after(R, c.phi(1).row(0));
    CHECK(before.equals(after));
  }
}

TEST_CASE("quotient-ring syzygies agree with a low-degree linear search") {
  auto R = PolynomialRing::make({"x", "y"});
  struct Case {
    std::vector<std::string> relations;
    std::vector<std::string> gens;
  };
  std::vector<Case> cases{{{"x*y"}, {"x"}},
                          {{"x*y"}, {"x", "y"}},
                          {{"x^2"}, {"x"}},
                          {{"x^3 - y^2"}, {"x", "y"}},
                          {{"x^2", "y^2"}, {"x + y"}}};
  for (const auto& c : cases) {
    QuotientContext ctx(I(R, c.relations));
    Ideal gens = I(R, c.gens);
    auto syz = syzygies(gens, ctx);
    for (const auto& s : syz.generators) {
      Polynomial sum(R);
      for (std::size_t i = 0; i < s.size(); ++i) sum += s[i] * gens.generators()[i];
      CHECK(ctx.reduce(sum).is_zero());
    }
    CHECK(syzygies_complete_to_degree(gens.generators(), ctx, syz.generators, 4));
  }
}

TEST_CASE("proper intersection check") {
  auto R = xyz();
  ChainComplex c = free_resolution(I(R, {"x", "y"}));
  ChainComplex d = koszul_complex(Ps(R, {"z"}));
  auto ok = proper_intersection_check(c, d, 2, 1);
  CHECK(ok.passed);
  REQUIRE(ok.checked.size() == 1);
  CHECK(ok.checked[0].codim == 3);

  ChainComplex kx = koszul_complex(Ps(R, {"x"}));
  auto bad = proper_intersection_check(kx, kx, 1, 1);
  CHECK_FALSE(bad.passed);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->k == 1);
  CHECK(bad.witness->l == 1);
  CHECK(bad.witness->codim == 1);

  ChainComplex unit{QuotientContext(R)};
  unit.ranks = {1, 1};
  unit.diffs = {M(R, {{"1"}})};
  CHECK(proper_intersection_check(kx, unit, 1, 1).passed);
}

TEST_CASE("Cohen-Macaulay check") {
  auto S = PolynomialRing::make({"z", "w"});
  auto cusp = cohen_macaulay_check(I(S, {"z^3 - w^2"}));
  CHECK(cusp.cohen_macaulay);
  CHECK(cusp.length == 1);
  CHECK(cusp.codim == 1);
  auto pt = cohen_macaulay_check(I(S, {"z", "w"}));
  CHECK(pt.cohen_macaulay);
  CHECK(pt.length == 2);
  auto mixed = cohen_macaulay_check(I(xyz(), {"x*z", "y*z"}));
  CHECK_FALSE(mixed.cohen_macaulay);
  CHECK(mixed.length == 2);
  CHECK(mixed.codim == 1);
  CHECK_THROWS_AS(cohen_macaulay_check(Ideal::unit(S)), AlgebraError);
}

TEST_CASE("canonicalization") {
  auto R = PolynomialRing::make({"x", "y"});
  CHECK(equal_up_to_units(M(R, {{"-y"}, {"x"}}), M(R, {{"y"}, {"-x"}})));
  CHECK(equal_up_to_units(M(R, {{"x", "y"}}), M(R, {{"y", "x"}})));
  CHECK(equal_up_to_units(M(R, {{"x"}, {"y"}}), M(R, {{"y"}, {"x"}})));
  CHECK_FALSE(equal_up_to_units(M(R, {{"x"}, {"y"}}), M(R, {{"x"}, {"x"}})));
  CHECK(equal_up_to_units(M(R, {{"2*x"}}), M(R, {{"-x"}})));
}

}  // TEST_SUITE
