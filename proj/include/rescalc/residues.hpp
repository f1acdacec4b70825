// The residue-current layer: maximal liftings, comparison morphisms and
// homotopies between resolutions, regular sequences, Coleff-Herrera
// annihilators, Poincaré residues, structure-form shapes and the recipe
// whose annihilator oracle decides g ∈ J on Z.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rescalc/homalg.hpp"

namespace rescalc {

/// J + I_Z as an ambient ideal, presented by its reduced Gröbner basis.
Ideal maximal_lifting(const Ideal& j, const QuotientContext& ctx);

/// a : (F, psi) -> (E, phi), levels[k] = a_k of shape rank E_k x rank F_k
/// for k = 0..length(F). E_k = 0 beyond the length of E.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::vector<PolyMatrix> levels;

  /// phi_k a_k = a_{k-1} psi_k for every k, modulo I_Z.
  bool commutes() const;
};

/// levels[k] = s_k : F_k -> E_{k+1}.
struct Homotopy {
  std::vector<PolyMatrix> levels;
};

/// Lifts a_{k-1} psi_k through phi_k column by column, starting from
/// a_0 = (1). `order` selects the division order of the lifting.
ChainMap comparison_morphism(const ChainComplex& f, const ChainComplex& e,
                             const std::optional<MonomialOrder>& order = std::nullopt);

ChainMap identity_chain_map(const ChainComplex& c);

struct HomotopyResult {
  std::optional<Homotopy> homotopy;
  std::size_t failing_level = 0;
  std::string reason;
};

/// Solves b_k - a_k = phi_{k+1} s_k + s_{k-1} psi_k level by level.
HomotopyResult chain_homotopy(const ChainMap& a, const ChainMap& b);
bool verify_homotopy(const ChainMap& a, const ChainMap& b, const Homotopy& s);

struct RegularSequenceReport {
  bool regular = true;
  std::optional<std::size_t> failing_index;  // 1-based
  std::string reason;
};

RegularSequenceReport regular_sequence_check(const std::vector<Polynomial>& f,
                                             const QuotientContext& ctx);
RegularSequenceReport regular_sequence_check(const std::vector<Polynomial>& f);

enum class CurrentKind { ColeffHerrera, AWCurrent, PoincareResidue };
std::string current_kind_name(CurrentKind kind);

struct FormalCurrent {
  CurrentKind kind;
  QuotientContext context;
  Ideal annihilator;
  std::pair<int, int> degree_span;
  int twopi_exponent = 0;
  std::vector<Polynomial> tuple;  // Coleff-Herrera only

  bool annihilates(const Polynomial& g) const;
};

/// Refuses tuples that are not regular sequences on Z.
FormalCurrent coleff_herrera(const std::vector<Polynomial>& f, const QuotientContext& ctx);
FormalCurrent coleff_herrera(const std::vector<Polynomial>& f);

struct TransformationVerdict {
  bool is_transformation = false;
  Polynomial det;
  bool invertible_at_origin = false;
  std::optional<bool> ideals_equal;  // only claimed when invertible
  std::string message;
};

/// Checks f_j = sum_i g_i A_ij and what det A says about J(f) and J(g).
TransformationVerdict transformation_law_check(const std::vector<Polynomial>& f,
                                               const std::vector<Polynomial>& g,
                                               const PolyMatrix& a);

/// (2πi)^twopi_exponent * numerator / denominator * dz_wedge on V(h).
struct MeromorphicForm {
  QuotientContext context;
  std::vector<std::string> wedge;
  Polynomial numerator;
  Polynomial denominator;
  int twopi_exponent = 0;

  std::string to_string() const;
};

/// ω with (dh/2πi) ∧ ω = dz_1 ∧ ... ∧ dz_n on V(h), solved along the
/// distinguished variable.
MeromorphicForm poincare_residue(const Polynomial& h, const std::string& distinguished);
/// Expands (dh/2πi) ∧ ω and compares with dz modulo (h).
bool verify_poincare_relation(const MeromorphicForm& form, const Polynomial& h);

struct ShapeComponent {
  int index;                  // r (pure) or e (non-pure)
  std::pair<int, int> degree; // bidegree (d, r) or bidimension (0, e)
  int level;                  // bundle F_level
  std::vector<int> support;   // non-pure: the e' >= e whose W^e' carry it
};

struct DeclaredComponent {
  Ideal ideal;
  int dim;
};

struct ComponentPairCheck {
  int e;
  int e_prime;
  int codim;
  int required;
  bool ok;
};

struct StructureFormShape {
  bool pure = true;
  bool purity_assumed = false;  // no decomposition given and Z not Cohen-Macaulay
  int n = 0;
  int d = 0;
  int p = 0;
  std::vector<ShapeComponent> components;
  std::vector<ComponentPairCheck> pair_checks;
};

StructureFormShape structure_form_shape(
    const QuotientContext& z, const std::vector<DeclaredComponent>& decomposition = {});

struct CurrentRecipe {
  QuotientContext context;
  Ideal j;
  Ideal j_tilde;
  ChainComplex e;
  ChainComplex f;
  ChainMap a;
  StructureFormShape shape;
  FormalCurrent current;
  bool z_cohen_macaulay;
  bool j_tilde_cohen_macaulay;
};

CurrentRecipe build_current_recipe(const QuotientContext& z, const Ideal& j,
                                   const std::vector<DeclaredComponent>& decomposition = {});

/// g mod I_Z ∈ J, decided both over O_Z and through J̃; a disagreement
/// throws std::logic_error.
bool annihilator_member(const CurrentRecipe& recipe, const Polynomial& g);

}  // namespace rescalc
