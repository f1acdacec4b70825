#include "rescalc/residues.hpp"

#include <algorithm>

namespace rescalc {

RegularSequenceReport regular_sequence_check(const std::vector<Polynomial>& f) {
  if (f.empty()) throw AlgebraError("regular sequence check of an empty tuple");
  return regular_sequence_check(f, QuotientContext(f.front().ring()));
}

RegularSequenceReport regular_sequence_check(const std::vector<Polynomial>& f,
                                             const QuotientContext& ctx) {
  if (f.empty()) throw AlgebraError("regular sequence check of an empty tuple");
  RegularSequenceReport report;
  std::vector<Polynomial> prefix;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Ideal prev = ctx.lift(Ideal(ctx.ring(), prefix));
    auto fail = [&](std::string why) {
      report.regular = false;
      report.failing_index = i + 1;
      report.reason = std::move(why);
      return report;
    };
    if (prev.contains(f[i]))
      return fail(f[i].to_string() + " vanishes modulo the earlier elements");
    Ideal q = ideal_quotient(prev, f[i]);
    if (!prev.contains(q))
      return fail(f[i].to_string() + " is a zero divisor modulo the earlier elements");
    prefix.push_back(f[i]);
  }
  if (ctx.lift(Ideal(ctx.ring(), prefix)).is_unit()) {
    report.regular = false;
    report.reason = "the sequence generates the unit ideal";
  }
  return report;
}

std::string current_kind_name(CurrentKind kind) {
  switch (kind) {
    case CurrentKind::ColeffHerrera: return "coleff_herrera";
    case CurrentKind::AWCurrent: return "aw_current";
    case CurrentKind::PoincareResidue: return "poincare_residue";
  }
  return "unknown";
}

bool FormalCurrent::annihilates(const Polynomial& g) const {
  return ideal_member(g, annihilator, context);
}

FormalCurrent coleff_herrera(const std::vector<Polynomial>& f) {
  if (f.empty()) throw AlgebraError("Coleff-Herrera product of an empty tuple");
  return coleff_herrera(f, QuotientContext(f.front().ring()));
}

FormalCurrent coleff_herrera(const std::vector<Polynomial>& f, const QuotientContext& ctx) {
  auto check = regular_sequence_check(f, ctx);
  if (!check.regular) {
    std::string where =
        check.failing_index ? " (element " + std::to_string(*check.failing_index) + ")" : "";
    throw AlgebraError("not a regular sequence" + where + ": " + check.reason);
  }
  int p = static_cast<int>(f.size());
  return FormalCurrent{CurrentKind::ColeffHerrera, ctx, Ideal(ctx.ring(), f), {p, p}, 0, f};
}

TransformationVerdict transformation_law_check(const std::vector<Polynomial>& f,
                                               const std::vector<Polynomial>& g,
                                               const PolyMatrix& a) {
  const std::size_t p = f.size();
  if (p == 0 || g.size() != p || a.rows() != p || a.cols() != p)
    throw AlgebraError("transformation law needs tuples of equal length p and a p x p matrix");
  TransformationVerdict v;
  const RingPtr& ring = a.ring();
  for (std::size_t j = 0; j < p; ++j) {
    Polynomial sum(ring);
    for (std::size_t i = 0; i < p; ++i) sum += g[i] * a(i, j);
    if (sum != f[j]) {
      v.message = "not a transformation: f_" + std::to_string(j + 1) + " = " + f[j].to_string() +
                  " but (g A)_" + std::to_string(j + 1) + " = " + sum.to_string();
      return v;
    }
  }
  v.is_transformation = true;
  v.det = determinant(a);
  v.invertible_at_origin = v.det.is_local_unit();
  if (!v.invertible_at_origin) {
    v.message = "det A = " + v.det.to_string() + " vanishes at the origin; no ideal equality claimed";
    return v;
  }
  Ideal jf(ring, f), jg(ring, g);
  // Polynomial ideals agree only up to localisation; mutual membership is
  // the exact statement checked here.
  v.ideals_equal = jf.equals(jg);
  v.message = *v.ideals_equal ? "det A invertible at the origin; J(f) = J(g)"
                              : "det A invertible at the origin; J(f) and J(g) differ away from it";
  return v;
}

std::string MeromorphicForm::to_string() const {
  std::string s;
  if (numerator == Polynomial(numerator.ring(), Rational(-1)))
    s += "-";
  else if (numerator != Polynomial(numerator.ring(), Rational(1)))
    s += "(" + numerator.to_string() + ")*";
  if (twopi_exponent == 1)
    s += "2πi*";
  else if (twopi_exponent != 0)
    s += "(2πi)^" + std::to_string(twopi_exponent) + "*";
  for (std::size_t i = 0; i < wedge.size(); ++i) s += (i ? "∧d" : "d") + wedge[i];
  if (wedge.empty()) s += "1";
  if (denominator != Polynomial(denominator.ring(), Rational(1)))
    s += "/(" + denominator.to_string() + ")";
  return s;
}

MeromorphicForm poincare_residue(const Polynomial& h, const std::string& distinguished) {
  const RingPtr& ring = h.ring();
  const std::size_t j = ring->index_of(distinguished);
  if (j == ring->nvars()) throw AlgebraError("unknown variable '" + distinguished + "'");
  QuotientContext ctx(Ideal(ring, {h}));
  Polynomial dh = h.derivative(j);
  if (ctx.reduce(dh).is_zero())
    throw AlgebraError("dh/d" + distinguished + " vanishes identically on V(" + h.to_string() + ")");
  // dz_j ∧ dz_{rest} = (-1)^j dz with j counted from 0, so the coefficient
  // solving (dh/2πi) ∧ ω = dz is (-1)^j * 2πi / (dh/dz_j).
  Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
  if (dh.leading_term().coeff < 0) {
    dh = -dh;
    sign = -sign;
  }
  std::vector<std::string> wedge;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (i != j) wedge.push_back(ring->variables()[i]);
  return MeromorphicForm{ctx, wedge, Polynomial(ring, sign), dh, 1};
}

bool verify_poincare_relation(const MeromorphicForm& form, const Polynomial& h) {
  const RingPtr& ring = h.ring();
  if (form.twopi_exponent != 1) return false;
  std::vector<std::size_t> w;
  for (const auto& name : form.wedge) {
    std::size_t i = ring->index_of(name);
    if (i == ring->nvars()) return false;
    w.push_back(i);
  }
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) return false;
  if (w.size() + 1 != ring->nvars()) return false;
  // dh ∧ dz_W = sum_k dh/dz_k dz_k ∧ dz_W; only the missing k survives,
  // and dz_k ∧ dz_W = (-1)^{#{i in W : i < k}} dz.
  Polynomial coeff(ring);
  for (std::size_t k = 0; k < ring->nvars(); ++k) {
    if (std::binary_search(w.begin(), w.end(), k)) continue;
    long before = std::count_if(w.begin(), w.end(), [k](std::size_t i) { return i < k; });
    Polynomial term = h.derivative(k) * form.numerator;
    coeff += before % 2 == 0 ? term : -term;
  }
  // (coeff / 2πi) * 2πi / denominator ≡ 1 modulo (h).
  QuotientContext ctx(Ideal(ring, {h}));
  return ctx.reduce(coeff - form.denominator).is_zero();
}

}  // namespace rescalc
