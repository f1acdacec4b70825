#include <sstream>

#include "rescalc/cli.hpp"

namespace rescalc::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json codim_json(int codim) {
  if (codim == kInfiniteCodim) return "inf";
  return codim;
}

Json tuple_json(const std::vector<Polynomial>& elements) {
  Json gens = Json::array();
  for (const auto& g : elements) gens.push_back(to_json(g));
  return Json{{"gens", gens}};
}

Json ring_json(const RingPtr& ring) {
  return Json{{"vars", ring->variables()}, {"order", order_name(ring->order().kind)}};
}

Json current_json(const FormalCurrent& c) {
  return Json{{"kind", current_kind_name(c.kind)},
              {"annihilator", to_json(c.annihilator)},
              {"degree_span", {c.degree_span.first, c.degree_span.second}},
              {"twopi_exponent", c.twopi_exponent}};
}

Json shape_json(const StructureFormShape& s) {
  Json comps = Json::array();
  for (const auto& c : s.components) {
    Json j{{"index", c.index},
           {s.pure ? "bidegree" : "bidimension", {c.degree.first, c.degree.second}},
           {"level", c.level}};
    if (!s.pure) j["support"] = c.support;
    comps.push_back(j);
  }
  Json pairs = Json::array();
  for (const auto& p : s.pair_checks)
    pairs.push_back(Json{{"e", p.e},
                         {"e_prime", p.e_prime},
                         {"codim", codim_json(p.codim)},
                         {"required", p.required},
                         {"ok", p.ok}});
  return Json{{"pure", s.pure}, {"purity_assumed", s.purity_assumed},
              {"n", s.n},       {"d", s.d},
              {"p", s.p},       {"components", comps},
              {"pair_checks", pairs}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

std::string complex_text(const ChainComplex& c) {
  std::vector<std::string> diffs;
  for (std::size_t k = 1; k <= c.length(); ++k)
    diffs.push_back("phi" + std::to_string(k) + " = " + c.phi(k).to_string());
  std::string s = "ranks " + list_text(c.ranks);
  if (c.truncated) s += " (truncated)";
  if (c.not_locally_minimal) s += " (not locally minimal)";
  if (!diffs.empty()) s += "; " + join(diffs, "; ");
  return s;
}

std::string map_text(const std::vector<PolyMatrix>& levels, const std::string& sym) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < levels.size(); ++k)
    parts.push_back(sym + std::to_string(k) + " = " + levels[k].to_string());
  return join(parts, "; ");
}

std::string shape_text(const StructureFormShape& s) {
  std::vector<std::string> parts;
  for (const auto& c : s.components) {
    std::string deg = "(" + std::to_string(c.degree.first) + "," + std::to_string(c.degree.second) + ")";
    parts.push_back(s.pure ? "omega_" + std::to_string(c.index) + " bidegree " + deg + " in F_" +
                                 std::to_string(c.level)
                           : "omega^" + std::to_string(c.index) + " bidimension " + deg +
                                 " in F_" + std::to_string(c.level));
  }
  std::string head = s.pure ? "pure, d=" + std::to_string(s.d) + ", p=" + std::to_string(s.p)
                            : "non-pure, n=" + std::to_string(s.n);
  if (s.purity_assumed) head += " (purity assumed)";
  std::string out = head + ": " + join(parts, "; ");
  for (const auto& p : s.pair_checks)
    out += "; codim(W^" + std::to_string(p.e) + " + Z_" + std::to_string(s.n - p.e_prime) +
           ") = " + codim_to_string(p.codim) + (p.ok ? " >= " : " < ") + std::to_string(p.required);
  return out;
}

}  // namespace

Json value_json(const Value& v) {
  return std::visit(
      overloaded{
          [](bool b) -> Json { return b; },
          [](int i) -> Json { return i; },
          [](const RingPtr& r) -> Json { return ring_json(r); },
          [](const QuotientContext& c) -> Json {
            Json j = ring_json(c.ring());
            j["relations"] = to_json(c.relations());
            return j;
          },
          [](const Polynomial& p) -> Json { return to_json(p); },
          [](const IdealValue& i) -> Json { return to_json(i.ideal); },
          [](const TupleValue& t) -> Json { return tuple_json(t.elements); },
          [](const PolyMatrix& m) -> Json { return to_json(m); },
          [](const ChainComplex& c) -> Json { return to_json(c); },
          [](const ChainMap& a) -> Json { return to_json(a); },
          [](const HomotopyResult& h) -> Json {
            if (h.homotopy) {
              Json levels = Json::array();
              for (const auto& m : h.homotopy->levels) levels.push_back(to_json(m));
              return Json{{"found", true}, {"levels", levels}};
            }
            return Json{{"found", false}, {"failing_level", h.failing_level}, {"reason", h.reason}};
          },
          [](const ResolutionDiagnostics& d) -> Json {
            Json loci = Json::array();
            for (const auto& l : d.loci)
              loci.push_back(Json{{"level", l.level},
                                  {"rank", l.rank},
                                  {"generic_rank", l.generic},
                                  {"ideal", to_json(l.ideal)},
                                  {"codim", codim_json(l.codim)},
                                  {"codim_ok", l.codim_ok}});
            return Json{{"expected_ranks", d.expected_ranks}, {"loci", loci}};
          },
          [](const std::vector<int>& r) -> Json { return r; },
          [](const BEVerdict& v) -> Json {
            Json levels = Json::array();
            for (const auto& l : v.levels)
              levels.push_back(Json{{"level", l.level},
                                    {"generic_rank", l.generic},
                                    {"rank_ok", l.rank_ok},
                                    {"codim", codim_json(l.codim)},
                                    {"codim_ok", l.codim_ok}});
            Json j{{"applicable", v.applicable}, {"passed", v.passed}, {"levels", levels}};
            j["failing_level"] = v.failing_level ? Json(*v.failing_level) : Json(nullptr);
            if (!v.applicable) j["reason"] = v.reason;
            return j;
          },
          [](const ProperIntersection& p) -> Json {
            auto pair = [](const IntersectionPair& q) {
              return Json{{"k", q.k}, {"l", q.l}, {"codim", codim_json(q.codim)}};
            };
            Json checked = Json::array();
            for (const auto& q : p.checked) checked.push_back(pair(q));
            return Json{{"passed", p.passed},
                        {"witness", p.witness ? pair(*p.witness) : Json(nullptr)},
                        {"checked", checked}};
          },
          [](const PeriodicityReport& p) -> Json {
            return Json{{"detected", p.detected}, {"offset", p.offset}, {"period", p.period}};
          },
          [](const CohenMacaulayReport& c) -> Json {
            return Json{{"cohen_macaulay", c.cohen_macaulay},
                        {"length", c.length},
                        {"codim", codim_json(c.codim)}};
          },
          [](const RegularSequenceReport& r) -> Json {
            return Json{{"regular", r.regular},
                        {"failing_index", r.failing_index ? Json(*r.failing_index) : Json(nullptr)},
                        {"reason", r.reason}};
          },
          [](const FormalCurrent& c) -> Json { return current_json(c); },
          [](const TransformationVerdict& t) -> Json {
            return Json{{"is_transformation", t.is_transformation},
                        {"det", t.is_transformation ? to_json(t.det) : Json(nullptr)},
                        {"invertible_at_origin", t.invertible_at_origin},
                        {"ideals_equal", t.ideals_equal ? Json(*t.ideals_equal) : Json(nullptr)},
                        {"message", t.message}};
          },
          [](const ResidueValue& r) -> Json {
            return Json{{"wedge", r.form.wedge},
                        {"numerator", to_json(r.form.numerator)},
                        {"denominator", to_json(r.form.denominator)},
                        {"twopi_exponent", r.form.twopi_exponent},
                        {"relation_holds", r.relation_holds},
                        {"text", r.form.to_string()}};
          },
          [](const StructureFormShape& s) -> Json { return shape_json(s); },
          [](const CurrentRecipe& r) -> Json {
            return Json{{"relations", to_json(r.context.relations())},
                        {"j", to_json(r.j)},
                        {"j_tilde", to_json(r.j_tilde)},
                        {"e", to_json(r.e)},
                        {"f", to_json(r.f)},
                        {"a", to_json(r.a)},
                        {"shape", shape_json(r.shape)},
                        {"current", current_json(r.current)},
                        {"z_cohen_macaulay", r.z_cohen_macaulay},
                        {"j_tilde_cohen_macaulay", r.j_tilde_cohen_macaulay}};
          },
          [](const Dimension& d) -> Json {
            return Json{{"dim", d.dim}, {"codim", codim_json(d.codim)}};
          },
      },
      v);
}

std::string value_text(const Value& v) {
  return std::visit(
      overloaded{
          [](bool b) -> std::string { return b ? "true" : "false"; },
          [](int i) -> std::string { return std::to_string(i); },
          [](const RingPtr& r) -> std::string { return r->to_string(); },
          [](const QuotientContext& c) -> std::string { return c.to_string(); },
          [](const Polynomial& p) -> std::string { return p.to_string(); },
          [](const IdealValue& i) -> std::string {
            return i.context.is_ambient() ? i.ideal.to_string()
                                          : i.ideal.to_string() + " in " + i.context.to_string();
          },
          [](const TupleValue& t) -> std::string {
            std::vector<std::string> parts;
            for (const auto& e : t.elements) parts.push_back(e.to_string());
            return "(" + join(parts, ", ") + ")";
          },
          [](const PolyMatrix& m) -> std::string { return m.to_string(); },
          [](const ChainComplex& c) -> std::string { return complex_text(c); },
          [](const ChainMap& a) -> std::string {
            return map_text(a.levels, "a") + (a.commutes() ? "" : " (does not commute)");
          },
          [](const HomotopyResult& h) -> std::string {
            if (!h.homotopy) return "no homotopy: " + h.reason;
            return "homotopy " + map_text(h.homotopy->levels, "s");
          },
          [](const ResolutionDiagnostics& d) -> std::string {
            std::vector<std::string> parts;
            for (const auto& l : d.loci)
              parts.push_back("Z_" + std::to_string(l.level) + " = V" + l.ideal.to_string() +
                              " codim " + codim_to_string(l.codim));
            return join(parts, "; ");
          },
          [](const std::vector<int>& r) -> std::string { return list_text(r); },
          [](const BEVerdict& v) -> std::string {
            if (!v.applicable) return "refused: " + v.reason;
            std::vector<std::string> parts;
            for (const auto& l : v.levels)
              parts.push_back("k=" + std::to_string(l.level) + " rank " +
                              std::to_string(l.generic) + (l.rank_ok ? "" : " (rank mismatch)") +
                              " codim " + codim_to_string(l.codim) + (l.codim_ok ? "" : " < k"));
            std::string head = v.passed ? "pass" : "fail at k=" + std::to_string(*v.failing_level);
            return head + " (" + join(parts, "; ") + ")";
          },
          [](const ProperIntersection& p) -> std::string {
            if (p.passed)
              return "pass (" + std::to_string(p.checked.size()) +
                     (p.checked.size() == 1 ? " pair)" : " pairs)");
            return "fail at (k,l) = (" + std::to_string(p.witness->k) + "," +
                   std::to_string(p.witness->l) + "), codim " + codim_to_string(p.witness->codim);
          },
          [](const PeriodicityReport& p) -> std::string {
            if (!p.detected) return "no period detected";
            return "offset " + std::to_string(p.offset) + ", period " + std::to_string(p.period);
          },
          [](const CohenMacaulayReport& c) -> std::string {
            return std::string(c.cohen_macaulay ? "Cohen-Macaulay" : "not Cohen-Macaulay") +
                   " (length " + std::to_string(c.length) + ", codim " + codim_to_string(c.codim) +
                   ")";
          },
          [](const RegularSequenceReport& r) -> std::string {
            if (r.regular) return "regular";
            return "not regular" +
                   (r.failing_index ? " at " + std::to_string(*r.failing_index) : std::string()) +
                   ": " + r.reason;
          },
          [](const FormalCurrent& c) -> std::string {
            return current_kind_name(c.kind) + ", ann = " + c.annihilator.to_string() +
                   ", degrees " + std::to_string(c.degree_span.first) + ".." +
                   std::to_string(c.degree_span.second);
          },
          [](const TransformationVerdict& t) -> std::string {
            if (!t.is_transformation) return t.message;
            return "det A = " + t.det.to_string() + "; " + t.message;
          },
          [](const ResidueValue& r) -> std::string {
            return r.form.to_string() + (r.relation_holds ? " (relation holds)" : " (relation FAILS)");
          },
          [](const StructureFormShape& s) -> std::string { return shape_text(s); },
          [](const CurrentRecipe& r) -> std::string {
            return "J~ = " + r.j_tilde.to_string() + ", E ranks " + list_text(r.e.ranks) +
                   ", F ranks " + list_text(r.f.ranks) + ", " + map_text(r.a.levels, "a") +
                   ", current " + current_kind_name(r.current.kind) + " degrees " +
                   std::to_string(r.current.degree_span.first) + ".." +
                   std::to_string(r.current.degree_span.second);
          },
          [](const Dimension& d) -> std::string {
            return "dim " + std::to_string(d.dim) + ", codim " + codim_to_string(d.codim);
          },
      },
      v);
}

}  // namespace rescalc::cli
