// Gröbner bases of ideals and submodules, normal forms, syzygies, and the
// derived ideal operations. Quotient rings Q[x]/I_Z enter through a
// QuotientContext; an ambient computation is a context with no relations.
#pragma once

#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rescalc/polyring.hpp"

namespace rescalc {

/// Codimension of the empty set. Any "codim >= k" test passes against it.
inline constexpr int kInfiniteCodim = std::numeric_limits<int>::max();

std::string codim_to_string(int codim);

// -- Engine ----------------------------------------------------------------

/// Reduced Gröbner basis of the submodule generated by `gens`: monic, no
/// term of an element divisible by another element's leading term, sorted
/// descending by leading term. Buchberger's algorithm with the normal
/// selection strategy, the chain criterion, and (for rank-1 input) the
/// coprime criterion.
std::vector<ModuleElement> buchberger(std::vector<ModuleElement> gens,
                                      const ModuleOrder& order, bool rank_one);

/// Every S-pair of `basis` reduces to zero.
bool is_groebner_basis(const std::vector<ModuleElement>& basis, const ModuleOrder& order);

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order);
bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Remainder of `f` on division by a Gröbner basis (under the ring order).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// -- Ideals ------------------------------------------------------------------

class Ideal {
 public:
  Ideal();
  /// Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal unit(const RingPtr& ring);

  const RingPtr& ring() const { return state_->ring; }
  const std::vector<Polynomial>& generators() const { return state_->gens; }

  bool is_zero() const { return state_->gens.empty(); }
  bool is_unit() const;

  /// Reduced Gröbner basis under the ring's default order, computed once.
  const std::vector<Polynomial>& groebner_basis() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  /// other ⊆ this, checked on generators.
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

  Ideal operator+(const Ideal& other) const;
  Ideal map_to(const RingPtr& target) const;

  /// "(g1, g2)"; "(0)" for the zero ideal.
  std::string to_string() const;

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::once_flag once;
    mutable std::vector<Polynomial> basis;
  };
  std::shared_ptr<const State> state_;
};

/// O_Z = Q[x]/I_Z. All arithmetic "in the context" is reduction modulo I_Z.
class QuotientContext {
 public:
  explicit QuotientContext(RingPtr ring) : relations_(ring, {}) {}
  explicit QuotientContext(Ideal relations) : relations_(std::move(relations)) {}

  const RingPtr& ring() const { return relations_.ring(); }
  const Ideal& relations() const { return relations_; }
  bool is_ambient() const { return relations_.is_zero(); }

  Polynomial reduce(const Polynomial& f) const;
  PolyVector reduce(const PolyVector& v) const;
  PolyMatrix reduce(const PolyMatrix& m) const;
  /// J + I_Z as an ambient ideal.
  Ideal lift(const Ideal& j) const;

  bool same_as(const QuotientContext& other) const;
  std::string to_string() const;

 private:
  Ideal relations_;
};

/// Submodule of R^rank given by generators, with the module order its
/// Gröbner computations use.
struct SubmoduleBasis {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<PolyVector> generators;
  ModuleOrder order;

  static SubmoduleBasis of_columns(const PolyMatrix& m);
  PolyMatrix as_matrix() const;
};

SubmoduleBasis groebner_basis(const SubmoduleBasis& module);
PolyVector normal_form(const PolyVector& f, const SubmoduleBasis& basis);

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const QuotientContext& ctx);
bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool ideal_member(const Polynomial& f, const Ideal& ideal, const QuotientContext& ctx);

/// Solves phi * x = v (modulo I_Z in a quotient context) through a Gröbner
/// basis of the augmented module generated by (phi_j | e_j). The same basis
/// yields the syzygy module of the columns of phi.
class ImageLifter {
 public:
  ImageLifter(const PolyMatrix& phi, const QuotientContext& ctx);
  ImageLifter(const PolyMatrix& phi, const QuotientContext& ctx, const MonomialOrder& order);

  std::optional<PolyVector> lift(const PolyVector& v) const;
  /// Generators of {x : phi x ≡ 0}.
  const std::vector<PolyVector>& kernel() const { return kernel_; }

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  ModuleOrder order_;
  std::vector<ModuleElement> basis_;
  std::vector<PolyVector> kernel_;
};

/// Drops generators lying in the submodule spanned by the others (plus
/// I_Z times the free module). Later generators are tried first.
std::vector<PolyVector> prune_generators(std::vector<PolyVector> gens, std::size_t rank,
                                         const QuotientContext& ctx);

/// Syzygies of the generators, i.e. the kernel of R^m -> R^rank sending e_j
/// to the j-th generator, taken modulo I_Z in a quotient context.
SubmoduleBasis syzygies(const SubmoduleBasis& gens, const QuotientContext& ctx);
SubmoduleBasis syzygies(const SubmoduleBasis& gens);
SubmoduleBasis syzygies(const Ideal& gens, const QuotientContext& ctx);
SubmoduleBasis syzygies(const Ideal& gens);

/// I ∩ Q[keep], generators returned in the original ring.
Ideal elimination(const Ideal& ideal, const std::vector<std::string>& keep);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (I : f). In a quotient context the result is (I + I_Z : f), with
/// generators reduced modulo I_Z.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const QuotientContext& ctx);
Ideal saturation(const Ideal& ideal, const Polynomial& f);
Ideal saturation(const Ideal& ideal, const Polynomial& f, const QuotientContext& ctx);

inline constexpr int kSaturationCap = 64;

struct Dimension {
  int dim;    // -1 for the unit ideal
  int codim;  // kInfiniteCodim for the unit ideal
};

/// Krull dimension of Q[x]/I from the leading-term ideal.
Dimension dimension(const Ideal& ideal);
/// Codimension of V(I + I_Z) inside V(I_Z).
int codim_in(const Ideal& ideal, const QuotientContext& ctx);

}  // namespace rescalc
