#include "rescalc/groebner.hpp"

#include <algorithm>
#include <set>

namespace rescalc {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  std::size_t component;
  Monomial lcm;
};

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g, const Monomial& lcm,
                           const ModuleOrder& order) {
  const ModuleTerm& lf = f.lead();
  const ModuleTerm& lg = g.lead();
  ModuleElement s = f.times(1 / lf.coeff, lcm / lf.monomial);
  s.add_multiple(-1 / lg.coeff, lcm / lg.monomial, g, order);
  return s;
}

ModuleElement reduce_fully(const ModuleElement& f, const std::vector<ModuleElement>& basis,
                           const ModuleOrder& order) {
  if (basis.empty()) return f;
  return divide_elements(f, basis, order).remainder;
}

bool lead_divides(const ModuleElement& a, const ModuleTerm& t) {
  return a.lead().component == t.component && a.lead().monomial.divides(t.monomial);
}

}  // namespace

std::vector<ModuleElement> buchberger(std::vector<ModuleElement> gens, const ModuleOrder& order,
                                      bool rank_one) {
  std::vector<ModuleElement> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    g.make_monic();
    basis.push_back(std::move(g));
  }

  std::vector<CriticalPair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].lead().component != basis[j].lead().component) continue;
      queue.push_back(CriticalPair{i, j, basis[j].lead().component,
                                   basis[i].lead().monomial.lcm(basis[j].lead().monomial)});
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    // Normal strategy: smallest lcm first, ties by pair indices.
    auto best = std::min_element(queue.begin(), queue.end(),
                                 [&](const CriticalPair& a, const CriticalPair& b) {
                                   auto c = order.compare(a.component, a.lcm, b.component, b.lcm);
                                   if (c != 0) return c < 0;
                                   if (a.j != b.j) return a.j < b.j;
                                   return a.i < b.i;
                                 });
    CriticalPair pair = *best;
    queue.erase(best);
    pending.erase({pair.i, pair.j});

    const ModuleElement& f = basis[pair.i];
    const ModuleElement& g = basis[pair.j];
    if (rank_one && f.lead().monomial.coprime(g.lead().monomial)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      const ModuleTerm& lk = basis[k].lead();
      if (lk.component != pair.component || !lk.monomial.divides(pair.lcm)) continue;
      if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) chain = true;
    }
    if (chain) continue;

    ModuleElement s = reduce_fully(s_polynomial(f, g, pair.lcm, order), basis, order);
    if (s.is_zero()) continue;
    s.make_monic();
    basis.push_back(std::move(s));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<ModuleElement> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !lead_divides(basis[j], basis[i].lead())) continue;
      // Equal leading terms: keep the earlier element.
      if (basis[j].lead().monomial == basis[i].lead().monomial && j > i) continue;
      redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Interreduce tails.
  std::vector<ModuleElement> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ModuleElement tail = minimal[i];
    ModuleTerm lead = tail.lead();
    tail.pop_lead();
    ModuleElement r = reduce_fully(tail, others, order);
    std::vector<ModuleTerm> terms{lead};
    terms.insert(terms.end(), r.terms().begin(), r.terms().end());
    ModuleElement e = ModuleElement::from_terms(std::move(terms), order);
    e.make_monic();
    reduced.push_back(std::move(e));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    return order.compare(a.lead().component, a.lead().monomial, b.lead().component,
                         b.lead().monomial) > 0;
  });
  return reduced;
}

bool is_groebner_basis(const std::vector<ModuleElement>& basis, const ModuleOrder& order) {
  for (const auto& b : basis)
    if (b.is_zero()) return false;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].lead().component != basis[j].lead().component) continue;
      Monomial l = basis[i].lead().monomial.lcm(basis[j].lead().monomial);
      if (!reduce_fully(s_polynomial(basis[i], basis[j], l, order), basis, order).is_zero())
        return false;
    }
  return true;
}

namespace {

ModuleOrder ideal_order(const MonomialOrder& order) {
  return ModuleOrder{order, ModuleRule::PositionOverTerm, {}};
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order) {
  if (gens.empty()) return {};
  RingPtr ring = gens.front().ring();
  ModuleOrder mo = ideal_order(order);
  std::vector<ModuleElement> elems;
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), ring)) throw AlgebraError("ring mismatch in Gröbner basis");
    elems.push_back(ModuleElement::from_polynomial(g, mo));
  }
  std::vector<Polynomial> out;
  for (const auto& e : buchberger(std::move(elems), mo, true)) out.push_back(e.to_polynomial(ring));
  return out;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  ModuleOrder mo = ideal_order(order);
  std::vector<ModuleElement> elems;
  for (const auto& g : basis) elems.push_back(ModuleElement::from_polynomial(g, mo));
  return is_groebner_basis(elems, mo);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (basis.empty()) return f;
  for (const auto& b : basis)
    if (b.is_zero()) throw AlgebraError("zero element in a Gröbner basis");
  return divide(f, basis).remainder;
}

SubmoduleBasis groebner_basis(const SubmoduleBasis& module) {
  std::vector<ModuleElement> elems;
  for (const auto& g : module.generators) {
    if (g.size() != module.rank) throw AlgebraError("generator rank mismatch");
    elems.push_back(ModuleElement::from_vector(g, module.order));
  }
  SubmoduleBasis out{module.ring, module.rank, {}, module.order};
  for (const auto& e : buchberger(std::move(elems), module.order, module.rank == 1))
    out.generators.push_back(e.to_vector(module.ring, module.rank));
  return out;
}

PolyVector normal_form(const PolyVector& f, const SubmoduleBasis& basis) {
  if (basis.generators.empty()) return f;
  return divide(f, basis.generators, basis.order).remainder;
}

}  // namespace rescalc
