// Script front end: a line-oriented command language over the engine,
// canonical JSON emission, and the bundled example corpus.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rescalc/residues.hpp"

namespace rescalc::cli {

using Json = nlohmann::json;

// -- JSON --------------------------------------------------------------------

/// "p/q", or "p" when q = 1.
std::string rational_json(const Rational& q);

Json to_json(const Polynomial& p);
Json to_json(const Ideal& ideal);
Json to_json(const PolyMatrix& m);
Json to_json(const ChainComplex& c);
Json to_json(const ChainMap& a);

Polynomial polynomial_from_json(const Json& j);
/// The ring is needed for the zero ideal, whose JSON carries no variables.
Ideal ideal_from_json(const Json& j, const RingPtr& ring);
PolyMatrix matrix_from_json(const Json& j, const RingPtr& ring, std::size_t rows_if_empty,
                            std::size_t cols_if_empty);
ChainComplex complex_from_json(const Json& j, const QuotientContext& ctx);

// -- Script values ---------------------------------------------------------------

struct IdealValue {
  Ideal ideal;
  QuotientContext context;
};
struct TupleValue {
  std::vector<Polynomial> elements;
  QuotientContext context;
};
struct ResidueValue {
  MeromorphicForm form;
  bool relation_holds;
};

using Value = std::variant<bool, int, RingPtr, QuotientContext, Polynomial, IdealValue,
                           TupleValue, PolyMatrix, ChainComplex, ChainMap, HomotopyResult,
                           ResolutionDiagnostics, std::vector<int>, BEVerdict,
                           ProperIntersection, PeriodicityReport, CohenMacaulayReport,
                           RegularSequenceReport, FormalCurrent, TransformationVerdict,
                           ResidueValue, StructureFormShape, CurrentRecipe, Dimension>;

Json value_json(const Value& v);
std::string value_text(const Value& v);

// -- Scripts ---------------------------------------------------------------------

struct Statement {
  int line = 0;
  std::string text;     // source text of the statement
  std::string keyword;  // declaration keyword, possibly empty
  std::string name;     // bound name, possibly empty
  std::string rhs;
};

struct ParseIssue {
  int line;
  std::string message;
};

struct ParsedScript {
  std::vector<Statement> statements;
  std::vector<ParseIssue> issues;
};

ParsedScript parse_script(const std::string& source);

struct Options {
  int cap = kDefaultResolutionCap;
  MonomialOrder order = MonomialOrder::grevlex();
};

struct Outcome {
  int line;
  std::string statement;
  std::string name;
  std::optional<Value> value;
  std::string error;
};

struct Report {
  std::vector<Outcome> outcomes;
  std::vector<ParseIssue> parse_issues;
  int exit_status = 0;  // 0 success, 1 execution error, 2 parse error

  Json json() const;
  std::string text() const;
};

Report run_script(const std::string& source, const Options& options = {});

/// The bundled script reproducing the worked examples.
const std::string& corpus_script();

}  // namespace rescalc::cli
