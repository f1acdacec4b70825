#include "rescalc/cli.hpp"

namespace rescalc::cli {

std::string rational_json(const Rational& q) { return rational_to_string(q); }

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < t.monomial.size(); ++i) exps.push_back(t.monomial[i]);
    terms.push_back(Json{{"coeff", rational_json(t.coeff)}, {"exps", exps}});
  }
  return Json{{"vars", p.ring()->variables()}, {"terms", terms}};
}

Json to_json(const Ideal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(to_json(g));
  return Json{{"gens", gens}};
}

Json to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const ChainComplex& c) {
  Json diffs = Json::array();
  for (const auto& d : c.diffs) diffs.push_back(to_json(d));
  Json out{{"ranks", c.ranks}, {"diffs", diffs}};
  if (c.truncated) out["truncated"] = true;
  if (c.not_locally_minimal) out["not_locally_minimal"] = true;
  return out;
}

Json to_json(const ChainMap& a) {
  Json levels = Json::array();
  for (const auto& m : a.levels) levels.push_back(to_json(m));
  return Json{{"levels", levels}};
}

Polynomial polynomial_from_json(const Json& j) {
  RingPtr ring = PolynomialRing::make(j.at("vars").get<std::vector<std::string>>());
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    auto exps = t.at("exps").get<std::vector<int>>();
    if (exps.size() != ring->nvars()) throw AlgebraError("exponent vector length mismatch");
    terms.push_back(Term{Monomial(exps), rational_from_string(t.at("coeff").get<std::string>())});
  }
  return Polynomial(ring, std::move(terms));
}

Ideal ideal_from_json(const Json& j, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& g : j.at("gens")) gens.push_back(polynomial_from_json(g).map_to(ring));
  return Ideal(ring, std::move(gens));
}

PolyMatrix matrix_from_json(const Json& j, const RingPtr& ring, std::size_t rows_if_empty,
                            std::size_t cols_if_empty) {
  if (j.empty()) return PolyMatrix(ring, rows_if_empty, cols_if_empty);
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& row : j) {
    std::vector<Polynomial> r;
    for (const auto& e : row) r.push_back(Polynomial::parse(e.get<std::string>(), ring));
    rows.push_back(std::move(r));
  }
  if (rows.front().empty()) return PolyMatrix(ring, rows.size(), cols_if_empty);
  return PolyMatrix::from_rows(ring, rows);
}

ChainComplex complex_from_json(const Json& j, const QuotientContext& ctx) {
  ChainComplex c(ctx);
  c.ranks = j.at("ranks").get<std::vector<std::size_t>>();
  const Json& diffs = j.at("diffs");
  if (diffs.size() + 1 != c.ranks.size()) throw AlgebraError("ranks and diffs disagree");
  for (std::size_t k = 0; k < diffs.size(); ++k)
    c.diffs.push_back(matrix_from_json(diffs[k], ctx.ring(), c.ranks[k], c.ranks[k + 1]));
  c.truncated = j.value("truncated", false);
  c.not_locally_minimal = j.value("not_locally_minimal", false);
  return c;
}

}  // namespace rescalc::cli
