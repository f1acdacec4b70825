// Chain complexes of free modules over Q[x] or a quotient O_Z = Q[x]/I_Z:
// free resolutions, minimalization, Koszul and tensor complexes, rank loci
// and the exactness diagnostics built on them.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rescalc/groebner.hpp"

namespace rescalc {

inline constexpr int kDefaultResolutionCap = 16;

/// 0 <- C_0 <- C_1 <- ... <- C_N with C_k = R^{ranks[k]}.
/// diffs[k-1] is phi_k, a ranks[k-1] x ranks[k] matrix.
struct ChainComplex {
  QuotientContext context;
  std::vector<std::size_t> ranks;
  std::vector<PolyMatrix> diffs;
  bool truncated = false;
  // Set by minimalize when a non-constant entry with nonzero constant term
  // survives (a unit of the local ring that we do not divide by).
  bool not_locally_minimal = false;

  explicit ChainComplex(QuotientContext ctx) : context(std::move(ctx)) {}

  const RingPtr& ring() const { return context.ring(); }
  std::size_t length() const { return diffs.size(); }
  bool complete() const { return !truncated; }
  /// phi_k, 1-based.
  const PolyMatrix& phi(std::size_t k) const;

  /// Shapes chain and phi_k phi_{k+1} reduces to zero in the context.
  bool is_complex() const;
};

ChainComplex free_resolution(const Ideal& gens, const QuotientContext& ctx,
                             int cap = kDefaultResolutionCap, bool minimal = true);
ChainComplex free_resolution(const Ideal& gens, int cap = kDefaultResolutionCap,
                             bool minimal = true);

/// Splits off trivial summands through nonzero-constant entries until none
/// remain. Trailing zero modules are dropped.
ChainComplex minimalize(const ChainComplex& c);

/// Exterior-algebra basis e_S over increasing k-subsets S in lexicographic
/// order, d(e_S) = sum_t (-1)^t f_{s_t} e_{S - s_t}.
ChainComplex koszul_complex(const std::vector<Polynomial>& f, const QuotientContext& ctx);
ChainComplex koszul_complex(const std::vector<Polynomial>& f);

/// (C ⊗ D)_k = ⊕_{p+q=k} C_p ⊗ D_q, blocks by descending p, each block
/// row-major (c_a ⊗ d_b at a * rank D_q + b), with
/// d(c ⊗ d) = phi(c) ⊗ d + (-1)^p c ⊗ psi(d).
ChainComplex tensor_complexes(const ChainComplex& c, const ChainComplex& d);

ChainComplex extend_ring(const ChainComplex& c, const RingPtr& bigger);

/// r_k = sum_{i >= k} (-1)^{i-k} rank C_i for k = 0..N.
std::vector<int> expected_ranks(const ChainComplex& c);

/// Ideal of r x r minors (r = 0 gives the unit ideal).
Ideal minors_ideal(const PolyMatrix& m, std::size_t r);
/// Largest r with a minor of size r nonzero modulo I_Z.
std::size_t generic_rank(const PolyMatrix& m, const QuotientContext& ctx);

struct RankLocus {
  std::size_t level;
  int rank;       // rank used for the Fitting ideal
  int generic;    // actual generic rank of phi_k
  Ideal ideal;    // I_rank(phi_k) (+ I_Z)
  int codim;      // inside Z in a quotient context
  bool codim_ok;  // codim >= level
};

struct ResolutionDiagnostics {
  // Empty for truncated complexes, whose loci use generic ranks instead.
  std::vector<int> expected_ranks;
  std::vector<RankLocus> loci;
};

ResolutionDiagnostics rank_loci(const ChainComplex& c);

struct BELevel {
  std::size_t level;
  int generic;
  bool rank_ok;
  int codim;
  bool codim_ok;
};

struct BEVerdict {
  bool applicable = true;
  std::string reason;  // why the criterion was refused
  bool passed = false;
  std::optional<std::size_t> failing_level;
  std::vector<BELevel> levels;
};

BEVerdict buchsbaum_eisenbud_check(const ChainComplex& c);

struct IntersectionPair {
  std::size_t k;
  std::size_t l;
  int codim;
};

struct ProperIntersection {
  bool passed = true;
  std::optional<IntersectionPair> witness;
  std::vector<IntersectionPair> checked;
};

ProperIntersection proper_intersection_check(const ChainComplex& c, const ChainComplex& d,
                                             int codim_c, int codim_d);

struct PeriodicityReport {
  bool detected = false;
  std::size_t offset = 0;  // 0 means starting at phi_1
  std::size_t period = 0;
};

PeriodicityReport detect_periodicity(const ChainComplex& c);

/// Columns scaled so the largest coefficient on the top monomial is 1,
/// rows then columns sorted by keys that ignore the other permutation.
PolyMatrix canonicalize(const PolyMatrix& m);
bool equal_up_to_units(const PolyMatrix& a, const PolyMatrix& b);

struct CohenMacaulayReport {
  bool cohen_macaulay;
  std::size_t length;
  int codim;
};

CohenMacaulayReport cohen_macaulay_check(const Ideal& ideal);

}  // namespace rescalc
