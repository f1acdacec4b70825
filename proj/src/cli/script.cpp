#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "rescalc/cli.hpp"

namespace rescalc::cli {

namespace {

const std::set<std::string>& declaration_keywords() {
  static const std::set<std::string> k{"ring", "quotient", "ideal", "tuple", "matrix", "poly"};
  return k;
}

const std::set<std::string>& command_names() {
  static const std::set<std::string> c{
      "resolve",  "minimalize", "koszul",   "tensor",   "extend",       "lift",
      "compare",  "chainmap",   "homotopy", "be-check", "proper-check", "period",
      "loci",     "expected",   "cm-check", "regseq",   "ch",           "translaw",
      "presidue", "shape",      "recipe",   "annmember", "member",      "dim",
      "gb"};
  return c;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_]*");
  return std::regex_match(s, re);
}

bool is_integer(const std::string& s) {
  static const std::regex re("-?[0-9]+");
  return std::regex_match(s, re);
}

// Splits at `sep` outside brackets; empty when the brackets do not balance.
std::optional<std::vector<std::string>> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::vector<char> stack;
  for (char ch : s) {
    if (ch == '(' || ch == '[') {
      stack.push_back(ch == '(' ? ')' : ']');
    } else if (ch == ')' || ch == ']') {
      if (stack.empty() || stack.back() != ch) return std::nullopt;
      stack.pop_back();
    } else if (ch == sep && stack.empty()) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!stack.empty()) return std::nullopt;
  parts.push_back(cur);
  return parts;
}

std::vector<std::string> split_list(const std::string& s) {
  auto parts = split_top(s, ',');
  if (!parts) throw AlgebraError("unbalanced brackets in " + s);
  return *parts;
}

// Index of the bracket closing the one at `open`, or npos.
std::size_t matching(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']')
      if (--depth == 0) return i;
  }
  return std::string::npos;
}

// "(a, b)" as a whole: the outer parentheses enclose everything.
bool is_wrapped(const std::string& s) {
  return !s.empty() && s.front() == '(' && matching(s, 0) == s.size() - 1;
}

struct Call {
  std::string name;
  std::vector<std::string> args;
};

std::optional<Call> parse_call(const std::string& text) {
  static const std::regex re("([a-z][a-z0-9-]*)\\s*\\(([\\s\\S]*)\\)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  std::size_t open = text.find('(');
  if (matching(text, open) != text.size() - 1) return std::nullopt;
  auto args = split_top(m[2].str(), ',');
  if (!args) return std::nullopt;
  Call call{m[1].str(), {}};
  for (auto& a : *args) call.args.push_back(trim(a));
  if (call.args.size() == 1 && call.args[0].empty()) call.args.clear();
  return call;
}

std::optional<std::vector<std::string>> parse_ring_vars(const std::string& text) {
  static const std::regex re("Q\\[([^\\]]*)\\]");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  std::vector<std::string> vars;
  for (auto& v : split_list(m[1].str())) {
    std::string t = trim(v);
    if (!is_identifier(t)) return std::nullopt;
    vars.push_back(t);
  }
  return vars;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::optional<std::string> check_statement(const Statement& st) {
  if (st.name == "last" || st.name == "over") return "'" + st.name + "' is reserved";
  if (!split_top(st.rhs, ',')) return "unbalanced brackets";
  auto call = parse_call(st.rhs);
  if (call) {
    if (!command_names().count(call->name)) return "unknown command '" + call->name + "'";
    return std::nullopt;
  }
  if (st.keyword.empty() && st.name.empty()) return "expected a command call";
  if (st.keyword == "ring" && !parse_ring_vars(st.rhs)) return "expected Q[vars]";
  if (st.keyword == "quotient" && st.rhs.find('/') == std::string::npos)
    return "expected R/(generators)";
  if (st.keyword == "matrix" && st.rhs.find("[[") == std::string::npos)
    return "expected [[...]]";
  if (!st.keyword.empty() && !declaration_keywords().count(st.keyword))
    return "label '" + st.keyword + "' needs a command call";
  return std::nullopt;
}

std::optional<QuotientContext> context_of(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::optional<QuotientContext> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RingPtr>) return QuotientContext(x);
        else if constexpr (std::is_same_v<T, QuotientContext>) return x;
        else if constexpr (std::is_same_v<T, IdealValue> || std::is_same_v<T, TupleValue> ||
                           std::is_same_v<T, ChainComplex> || std::is_same_v<T, CurrentRecipe> ||
                           std::is_same_v<T, FormalCurrent>)
          return x.context;
        else if constexpr (std::is_same_v<T, ChainMap>) return x.source.context;
        else if constexpr (std::is_same_v<T, Polynomial> || std::is_same_v<T, PolyMatrix>)
          return QuotientContext(x.ring());
        else return std::nullopt;
      },
      v);
}

const char* type_name(const Value& v) {
  static const char* names[] = {"boolean",     "integer",      "ring",         "quotient",
                                "polynomial",  "ideal",        "tuple",        "matrix",
                                "complex",     "chain map",    "homotopy",     "loci",
                                "rank list",   "B-E verdict",  "intersection", "periodicity",
                                "CM report",   "regularity",   "current",      "transformation",
                                "residue",     "shape",        "recipe",       "dimension"};
  return names[v.index()];
}

class Interpreter {
 public:
  explicit Interpreter(const Options& options) : options_(options) {}

  Value execute(const Statement& st) {
    if (auto call = parse_call(st.rhs)) return run_call(*call);
    if (st.keyword == "ring") return make_ring(st.rhs);
    if (st.keyword == "quotient") return make_quotient(st.rhs);
    if (st.keyword == "ideal") {
      auto [ctx, body] = split_prefix(st.rhs);
      return IdealValue{Ideal(ctx.ring(), poly_list(body, ctx.ring())), ctx};
    }
    if (st.keyword == "tuple") {
      auto [ctx, body] = split_prefix(st.rhs);
      return TupleValue{poly_list(body, ctx.ring()), ctx};
    }
    if (st.keyword == "matrix") {
      auto [ctx, body] = split_prefix(st.rhs);
      return matrix_literal(body, ctx.ring());
    }
    if (st.keyword == "poly") {
      auto [ctx, body] = split_prefix(st.rhs);
      return Polynomial::parse(body, ctx.ring());
    }
    // name = expression
    std::string rhs = trim(st.rhs);
    if (auto v = lookup(rhs)) return *v;
    return Polynomial::parse(rhs, current().ring());
  }

  void bind(const std::string& name, const Value& v) {
    if (!name.empty()) env_.insert_or_assign(name, v);
    last_ = v;
    if (auto* r = std::get_if<RingPtr>(&v)) current_ = QuotientContext(*r);
    if (auto* q = std::get_if<QuotientContext>(&v)) current_ = QuotientContext(q->ring());
  }
  void forget_last() { last_.reset(); }

 private:
  // -- environment and literals ------------------------------------------------

  std::optional<Value> lookup(const std::string& name) const {
    if (name == "last") {
      if (!last_) throw AlgebraError("'last' has no value");
      return last_;
    }
    auto it = env_.find(name);
    if (it == env_.end()) return std::nullopt;
    return it->second;
  }

  const QuotientContext& current() const {
    if (!current_) throw AlgebraError("no ring declared");
    return *current_;
  }

  RingPtr make_ring(const std::string& text) const {
    auto vars = parse_ring_vars(trim(text));
    if (!vars) throw AlgebraError("expected Q[vars], got " + text);
    return PolynomialRing::make(*vars, options_.order);
  }

  QuotientContext make_quotient(const std::string& text) const {
    std::string t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string::npos) throw AlgebraError("expected R/(generators)");
    std::string base = trim(t.substr(0, slash));
    RingPtr ring;
    if (auto v = lookup(base)) {
      auto ctx = context_of(*v);
      if (!ctx || !ctx->is_ambient()) throw AlgebraError("'" + base + "' is not a ring");
      ring = ctx->ring();
    } else {
      ring = make_ring(base);
    }
    return QuotientContext(Ideal(ring, poly_list(t.substr(slash + 1), ring)));
  }

  // "Z:(...)" names its context; otherwise the current one.
  std::pair<QuotientContext, std::string> split_prefix(const std::string& text) const {
    std::string t = trim(text);
    static const std::regex re("([A-Za-z_][A-Za-z0-9_]*)\\s*:([\\s\\S]*)");
    std::smatch m;
    if (std::regex_match(t, m, re)) {
      auto v = lookup(m[1].str());
      if (!v) throw AlgebraError("undeclared identifier '" + m[1].str() + "'");
      auto ctx = context_of(*v);
      if (!ctx) throw AlgebraError("'" + m[1].str() + "' has no ring");
      return {*ctx, trim(m[2].str())};
    }
    return {current(), t};
  }

  std::vector<Polynomial> poly_list(const std::string& text, const RingPtr& ring) const {
    std::string t = trim(text);
    if (!is_wrapped(t)) return {Polynomial::parse(t, ring)};
    std::vector<Polynomial> out;
    std::string inner = trim(t.substr(1, t.size() - 2));
    if (inner.empty() || inner == "0") return out;
    for (auto& part : split_list(inner)) {
      std::string e = trim(part);
      Polynomial p;
      if (auto v = bound(e); v && std::holds_alternative<Polynomial>(*v))
        p = std::get<Polynomial>(*v).map_to(ring);
      else
        p = Polynomial::parse(e, ring);
      if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
  }

  PolyMatrix matrix_literal(const std::string& text, const RingPtr& ring) const {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '[' || matching(t, 0) != t.size() - 1)
      throw AlgebraError("expected [[...]], got " + t);
    std::vector<std::vector<Polynomial>> rows;
    for (auto& row : split_list(t.substr(1, t.size() - 2))) {
      std::string r = trim(row);
      if (r.size() < 2 || r.front() != '[' || r.back() != ']')
        throw AlgebraError("malformed matrix row " + r);
      std::vector<Polynomial> entries;
      std::string inner = trim(r.substr(1, r.size() - 2));
      if (!inner.empty())
        for (auto& e : split_list(inner)) entries.push_back(Polynomial::parse(trim(e), ring));
      rows.push_back(std::move(entries));
    }
    std::size_t width = rows.front().size();
    for (const auto& r : rows)
      if (r.size() != width) throw AlgebraError("ragged matrix literal");
    if (width == 0) return PolyMatrix(ring, rows.size(), 0);
    return PolyMatrix::from_rows(ring, rows);
  }

  // -- arguments ---------------------------------------------------------------

  struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> keyword;
    std::optional<std::string> over;
  };

  Args split_args(const Call& call) const {
    static const std::regex kw("([a-z_]+)\\s*=\\s*([\\s\\S]+)");
    static const std::regex over("over\\s+([\\s\\S]+)");
    Args a;
    std::smatch m;
    for (const auto& arg : call.args) {
      if (arg.empty()) throw AlgebraError("empty argument");
      if (std::regex_match(arg, m, over)) {
        a.over = trim(m[1].str());
      } else if (std::regex_match(arg, m, kw)) {
        a.keyword[m[1].str()] = trim(m[2].str());
      } else {
        a.positional.push_back(arg);
      }
    }
    return a;
  }

  // The context literal arguments are read in.
  QuotientContext literal_context(const Args& a) const {
    if (a.over) return as_context(*a.over);
    for (const auto& p : a.positional) {
      if (auto pre = prefixed(p)) return pre->first;
      if (auto v = bound(p))
        if (auto ctx = context_of(*v)) return *ctx;
    }
    return current();
  }

  std::optional<Value> bound(const std::string& arg) const {
    if (!is_identifier(arg)) return std::nullopt;
    return lookup(arg);
  }

  // "Z:(...)" inside an argument.
  std::optional<std::pair<QuotientContext, std::string>> prefixed(const std::string& arg) const {
    static const std::regex re("[A-Za-z_][A-Za-z0-9_]*\\s*:[\\s\\S]*");
    if (!std::regex_match(arg, re)) return std::nullopt;
    return split_prefix(arg);
  }

  QuotientContext as_context(const std::string& arg) const {
    if (auto v = bound(arg)) {
      if (auto ctx = context_of(*v)) return *ctx;
      throw AlgebraError("'" + arg + "' has no ring");
    }
    if (arg.find('/') != std::string::npos) return make_quotient(arg);
    return QuotientContext(make_ring(arg));
  }

  template <class T>
  T as(const std::string& arg, const char* what) const {
    auto v = bound(arg);
    if (!v) throw AlgebraError("expected a " + std::string(what) + " name, got '" + arg + "'");
    if (auto* x = std::get_if<T>(&*v)) return *x;
    throw AlgebraError("'" + arg + "' is a " + type_name(*v) + ", expected a " + what);
  }

  Polynomial as_poly(const std::string& arg, const RingPtr& ring) const {
    if (auto v = bound(arg)) {
      if (auto* p = std::get_if<Polynomial>(&*v)) return p->map_to(ring);
      throw AlgebraError("'" + arg + "' is a " + type_name(*v) + ", expected a polynomial");
    }
    if (auto pre = prefixed(arg)) return Polynomial::parse(pre->second, ring);
    return Polynomial::parse(arg, ring);
  }

  std::vector<Polynomial> as_polys(const std::string& arg, const RingPtr& ring) const {
    if (auto v = bound(arg)) {
      if (auto* t = std::get_if<TupleValue>(&*v)) return map_all(t->elements, ring);
      if (auto* i = std::get_if<IdealValue>(&*v)) return map_all(i->ideal.generators(), ring);
      if (auto* q = std::get_if<QuotientContext>(&*v))
        return map_all(q->relations().generators(), ring);
      if (auto* p = std::get_if<Polynomial>(&*v)) return {p->map_to(ring)};
      throw AlgebraError("'" + arg + "' is a " + type_name(*v) + ", expected generators");
    }
    if (auto pre = prefixed(arg)) return poly_list(pre->second, ring);
    return poly_list(arg, ring);
  }

  static std::vector<Polynomial> map_all(const std::vector<Polynomial>& ps, const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (const auto& p : ps) out.push_back(p.map_to(ring));
    return out;
  }

  // An ideal together with the context it lives over; `over` wins.
  IdealValue as_ideal(const std::string& arg, const Args& a) const {
    std::optional<QuotientContext> ctx;
    if (a.over) ctx = as_context(*a.over);
    if (auto v = bound(arg)) {
      if (!ctx) ctx = context_of(*v);
      if (auto* q = std::get_if<QuotientContext>(&*v); q && !a.over)
        return IdealValue{q->relations(), QuotientContext(q->ring())};
    } else if (auto pre = prefixed(arg); pre && !ctx) {
      ctx = pre->first;
    }
    if (!ctx) ctx = current();
    return IdealValue{Ideal(ctx->ring(), as_polys(arg, ctx->ring())), *ctx};
  }

  PolyMatrix as_matrix(const std::string& arg, const RingPtr& ring) const {
    if (auto v = bound(arg)) {
      if (auto* m = std::get_if<PolyMatrix>(&*v)) return m->map_to(ring);
      throw AlgebraError("'" + arg + "' is a " + type_name(*v) + ", expected a matrix");
    }
    if (auto pre = prefixed(arg)) return matrix_literal(pre->second, ring);
    return matrix_literal(arg, ring);
  }

  int as_int(const std::string& arg) const {
    if (auto v = bound(arg))
      if (auto* i = std::get_if<int>(&*v)) return *i;
    if (!is_integer(arg)) throw AlgebraError("expected an integer, got '" + arg + "'");
    return std::stoi(arg);
  }

  static bool as_bool(const std::string& arg) {
    std::string l = lowercase(arg);
    if (l == "true" || l == "1") return true;
    if (l == "false" || l == "0") return false;
    throw AlgebraError("expected true or false, got '" + arg + "'");
  }

  std::vector<DeclaredComponent> components(const std::vector<std::string>& args,
                                            const QuotientContext& z) const {
    std::vector<DeclaredComponent> out;
    for (const auto& arg : args) {
      auto at = arg.rfind('@');
      if (at == std::string::npos) throw AlgebraError("expected component@dim, got '" + arg + "'");
      std::string name = trim(arg.substr(0, at));
      Ideal w(z.ring(), as_polys(name, z.ring()));
      out.push_back(DeclaredComponent{w, as_int(trim(arg.substr(at + 1)))});
    }
    return out;
  }

  static void arity(const Call& call, const Args& a, std::size_t lo, std::size_t hi) {
    std::size_t n = a.positional.size();
    if (n < lo || n > hi) {
      std::string want = lo == hi ? std::to_string(lo)
                                  : std::to_string(lo) + ".." +
                                        (hi == SIZE_MAX ? std::string("") : std::to_string(hi));
      throw AlgebraError(call.name + " takes " + want + " arguments, got " + std::to_string(n));
    }
  }

  static void allow_keywords(const Call& call, const Args& a, std::set<std::string> allowed) {
    for (const auto& [k, v] : a.keyword)
      if (!allowed.count(k)) throw AlgebraError(call.name + " has no option '" + k + "'");
    if (a.over && !allowed.count("over"))
      throw AlgebraError(call.name + " does not take 'over'");
  }

  // -- commands ----------------------------------------------------------------

  Value run_call(const Call& call) {
    Args a = split_args(call);
    const std::string& c = call.name;

    if (c == "resolve") {
      allow_keywords(call, a, {"over", "cap", "minimal"});
      arity(call, a, 1, 1);
      IdealValue i = as_ideal(a.positional[0], a);
      int cap = a.keyword.count("cap") ? as_int(a.keyword.at("cap")) : options_.cap;
      if (cap < 1) throw AlgebraError("cap must be positive");
      bool minimal = a.keyword.count("minimal") ? as_bool(a.keyword.at("minimal")) : true;
      return free_resolution(i.ideal, i.context, cap, minimal);
    }
    if (c == "minimalize") {
      allow_keywords(call, a, {});
      arity(call, a, 1, 1);
      return minimalize(as<ChainComplex>(a.positional[0], "complex"));
    }
    if (c == "koszul") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 1, SIZE_MAX);
      QuotientContext ctx = literal_context(a);
      std::vector<Polynomial> f;
      if (a.positional.size() == 1) {
        f = as_polys(a.positional[0], ctx.ring());
      } else {
        for (const auto& p : a.positional) f.push_back(as_poly(p, ctx.ring()));
      }
      return koszul_complex(f, ctx);
    }
    if (c == "tensor") {
      allow_keywords(call, a, {});
      arity(call, a, 2, 2);
      return tensor_complexes(as<ChainComplex>(a.positional[0], "complex"),
                              as<ChainComplex>(a.positional[1], "complex"));
    }
    if (c == "extend") {
      allow_keywords(call, a, {});
      arity(call, a, 2, 2);
      QuotientContext target = as_context(a.positional[1]);
      if (!target.is_ambient()) throw AlgebraError("extend needs a polynomial ring");
      return extend_ring(as<ChainComplex>(a.positional[0], "complex"), target.ring());
    }
    if (c == "lift") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 1, 1);
      IdealValue i = as_ideal(a.positional[0], a);
      return IdealValue{maximal_lifting(i.ideal, i.context), QuotientContext(i.context.ring())};
    }
    if (c == "compare") {
      allow_keywords(call, a, {"order"});
      arity(call, a, 2, 2);
      std::optional<MonomialOrder> order;
      if (a.keyword.count("order"))
        order = MonomialOrder{order_from_name(lowercase(a.keyword.at("order"))), {}};
      return comparison_morphism(as<ChainComplex>(a.positional[0], "complex"),
                                 as<ChainComplex>(a.positional[1], "complex"), order);
    }
    if (c == "chainmap") {
      allow_keywords(call, a, {});
      arity(call, a, 2, SIZE_MAX);
      ChainComplex f = as<ChainComplex>(a.positional[0], "complex");
      ChainComplex e = as<ChainComplex>(a.positional[1], "complex");
      ChainMap m{f, e, {}};
      for (std::size_t k = 2; k < a.positional.size(); ++k)
        m.levels.push_back(as_matrix(a.positional[k], e.ring()));
      if (m.levels.size() != f.length() + 1)
        throw AlgebraError("chainmap needs " + std::to_string(f.length() + 1) + " levels, got " +
                           std::to_string(m.levels.size()));
      if (!m.commutes()) throw AlgebraError("the given levels do not commute with the differentials");
      return m;
    }
    if (c == "homotopy") {
      allow_keywords(call, a, {});
      arity(call, a, 2, 2);
      return chain_homotopy(as<ChainMap>(a.positional[0], "chain map"),
                            as<ChainMap>(a.positional[1], "chain map"));
    }
    if (c == "be-check") {
      allow_keywords(call, a, {});
      arity(call, a, 1, 1);
      return buchsbaum_eisenbud_check(as<ChainComplex>(a.positional[0], "complex"));
    }
    if (c == "proper-check") {
      allow_keywords(call, a, {});
      arity(call, a, 4, 4);
      return proper_intersection_check(as<ChainComplex>(a.positional[0], "complex"),
                                       as<ChainComplex>(a.positional[1], "complex"),
                                       as_int(a.positional[2]), as_int(a.positional[3]));
    }
    if (c == "period") {
      allow_keywords(call, a, {});
      arity(call, a, 1, 1);
      return detect_periodicity(as<ChainComplex>(a.positional[0], "complex"));
    }
    if (c == "loci") {
      allow_keywords(call, a, {});
      arity(call, a, 1, 1);
      return rank_loci(as<ChainComplex>(a.positional[0], "complex"));
    }
    if (c == "expected") {
      allow_keywords(call, a, {});
      arity(call, a, 1, 1);
      return expected_ranks(as<ChainComplex>(a.positional[0], "complex"));
    }
    if (c == "cm-check") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 1, 1);
      IdealValue i = as_ideal(a.positional[0], a);
      return cohen_macaulay_check(i.context.lift(i.ideal));
    }
    if (c == "regseq" || c == "ch") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 1, SIZE_MAX);
      QuotientContext ctx = literal_context(a);
      std::vector<Polynomial> f;
      if (a.positional.size() == 1) {
        f = as_polys(a.positional[0], ctx.ring());
      } else {
        for (const auto& p : a.positional) f.push_back(as_poly(p, ctx.ring()));
      }
      if (c == "regseq") return regular_sequence_check(f, ctx);
      return coleff_herrera(f, ctx);
    }
    if (c == "translaw") {
      allow_keywords(call, a, {});
      arity(call, a, 3, 3);
      RingPtr ring = literal_context(a).ring();
      return transformation_law_check(as_polys(a.positional[0], ring),
                                       as_polys(a.positional[1], ring),
                                       as_matrix(a.positional[2], ring));
    }
    if (c == "presidue") {
      allow_keywords(call, a, {});
      arity(call, a, 2, 2);
      RingPtr ring = literal_context(a).ring();
      Polynomial h = as_poly(a.positional[0], ring);
      MeromorphicForm form = poincare_residue(h, a.positional[1]);
      return ResidueValue{form, verify_poincare_relation(form, h)};
    }
    if (c == "shape") {
      allow_keywords(call, a, {});
      arity(call, a, 1, SIZE_MAX);
      QuotientContext z = as_context(a.positional[0]);
      return structure_form_shape(
          z, components({a.positional.begin() + 1, a.positional.end()}, z));
    }
    if (c == "recipe") {
      allow_keywords(call, a, {});
      arity(call, a, 2, SIZE_MAX);
      QuotientContext z = as_context(a.positional[0]);
      Ideal j(z.ring(), as_polys(a.positional[1], z.ring()));
      return build_current_recipe(
          z, j, components({a.positional.begin() + 2, a.positional.end()}, z));
    }
    if (c == "annmember") {
      allow_keywords(call, a, {});
      arity(call, a, 2, 2);
      auto v = bound(a.positional[0]);
      if (v) {
        if (auto* r = std::get_if<CurrentRecipe>(&*v))
          return annihilator_member(*r, as_poly(a.positional[1], r->context.ring()));
        if (auto* f = std::get_if<FormalCurrent>(&*v))
          return f->annihilates(as_poly(a.positional[1], f->context.ring()));
      }
      throw AlgebraError("annmember needs a recipe or a current");
    }
    if (c == "member") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 2, 2);
      IdealValue i = as_ideal(a.positional[0], a);
      return ideal_member(as_poly(a.positional[1], i.context.ring()), i.ideal, i.context);
    }
    if (c == "dim") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 1, 1);
      IdealValue i = as_ideal(a.positional[0], a);
      return dimension(i.context.lift(i.ideal));
    }
    if (c == "gb") {
      allow_keywords(call, a, {"over"});
      arity(call, a, 1, 1);
      IdealValue i = as_ideal(a.positional[0], a);
      Ideal lifted = i.context.lift(i.ideal);
      return IdealValue{Ideal(lifted.ring(), lifted.groebner_basis()),
                        QuotientContext(lifted.ring())};
    }
    throw AlgebraError("unknown command '" + c + "'");
  }

  Options options_;
  std::map<std::string, Value> env_;
  std::optional<Value> last_;
  std::optional<QuotientContext> current_;
};

}  // namespace

ParsedScript parse_script(const std::string& source) {
  static const std::regex head("(?:([A-Za-z][A-Za-z0-9_-]*)\\s+)?([A-Za-z_][A-Za-z0-9_]*)\\s*=([\\s\\S]*)");
  ParsedScript out;
  std::istringstream in(source);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw.substr(0, raw.find('#'));
    auto pieces = split_top(text, ';');
    if (!pieces) {
      out.issues.push_back(ParseIssue{line, "unbalanced brackets"});
      continue;
    }
    for (const auto& piece : *pieces) {
      std::string s = trim(piece);
      if (s.empty()) continue;
      Statement st{line, s, "", "", s};
      std::smatch m;
      if (std::regex_match(s, m, head) && !parse_call(s)) {
        st.keyword = m[1].str();
        st.name = m[2].str();
        st.rhs = trim(m[3].str());
        if (st.rhs.empty()) {
          out.issues.push_back(ParseIssue{line, "missing right-hand side"});
          continue;
        }
      }
      if (auto issue = check_statement(st)) {
        out.issues.push_back(ParseIssue{line, *issue});
        continue;
      }
      out.statements.push_back(std::move(st));
    }
  }
  return out;
}

Report run_script(const std::string& source, const Options& options) {
  Report report;
  ParsedScript parsed = parse_script(source);
  report.parse_issues = parsed.issues;
  if (!parsed.issues.empty()) {
    report.exit_status = 2;
    return report;
  }
  Interpreter interp(options);
  for (const auto& st : parsed.statements) {
    Outcome o{st.line, st.text, st.name, std::nullopt, ""};
    try {
      Value v = interp.execute(st);
      interp.bind(st.name, v);
      o.value = std::move(v);
    } catch (const std::exception& e) {
      interp.forget_last();
      o.error = e.what();
      report.exit_status = 1;
    }
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

Json Report::json() const {
  Json parse_errors = Json::array();
  for (const auto& p : parse_issues)
    parse_errors.push_back(Json{{"line", p.line}, {"message", p.message}});
  Json results = Json::array();
  for (const auto& o : outcomes) {
    Json r{{"line", o.line}, {"statement", o.statement}};
    if (!o.name.empty()) r["name"] = o.name;
    if (o.value)
      r["value"] = value_json(*o.value);
    else
      r["error"] = o.error;
    results.push_back(std::move(r));
  }
  return Json{{"exit_status", exit_status}, {"parse_errors", parse_errors}, {"results", results}};
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& p : parse_issues) os << "line " << p.line << ": parse error: " << p.message << "\n";
  for (const auto& o : outcomes) {
    os << "line " << o.line << ": ";
    if (!o.name.empty()) os << o.name << " = ";
    if (o.value)
      os << value_text(*o.value) << "\n";
    else
      os << "error: " << o.error << "\n";
  }
  return os.str();
}

}  // namespace rescalc::cli
