#pragma once

#include "hopfz/subquot.hpp"

namespace hopfz {

enum class Tri { yes, no, undetermined };
std::string tri_name(Tri t);

/// Flatness facts for one fiber. Freeness carries a witness: the list of
/// module basis indices whose algebra span is everything.
struct FiberReport {
  Fiber fiber = Fiber::rationals();
  bool flat = false;
  std::optional<std::vector<int>> free_basis;
  Tri faithfully_flat = Tri::undetermined;
};

struct FlatnessCertificate {
  std::vector<Int> candidate_primes;
  std::vector<FiberReport> fibers;
  std::optional<bool> global_projective;
  std::optional<ExactMatrix> global_section;
  std::optional<std::vector<int>> free_basis_global;
  Tri verdict = Tri::undetermined;
  Certificate certificate{"faithfully-flat", ""};
};

/// Left module built from an inclusion: the ambient algebra acted on by the
/// subalgebra through the embedding.
ModuleData ambient_as_left_module(const HopfInclusion& inc);

/// Base change of an integral module structure into a fiber.
ModuleData module_to_fiber(const ModuleData& m, const Fiber& k);

/// Primes dividing any elementary divisor of the splitting presentation of
/// the module, plus the floor {2, 3}. For p outside this set the F_p report
/// duplicates the Q report, because all kernel and image ranks mod p equal
/// the Q-ranks.
std::vector<Int> candidate_primes(const ModuleData& m);

/// Field fiber: flatness = projectivity = an A_k-linear section of the free
/// cover from the module generators, decided by an exact solve; freeness by
/// a complete depth-first search over subsets of the module basis within the
/// rank bound. faithfully_flat is yes when free, no when not flat, and
/// undetermined when flat but no basis was found among the candidates.
FiberReport fiber_flat(const ModuleData& m_k);

/// Projectivity over Z: an A-linear section of A^g -> M is an integer linear
/// system; solvable gives the stored witness, unsolvable proves
/// non-projectivity for finitely generated modules.
struct GlobalProjective {
  bool projective = false;
  std::optional<ExactMatrix> section;
};
GlobalProjective global_projective(const ModuleData& m);

/// Complete basis search over Z: indices of module basis elements whose
/// algebra span gives a unimodular map.
std::optional<std::vector<int>> global_free_basis(const ModuleData& m);

/// The fiber criterion: faithfully flat over the base iff faithfully flat
/// over the fraction field and every residue fiber; runs candidate primes,
/// per-fiber reports, aggregation, and the global cross-check (flat over Z
/// iff flat on all fibers; disagreement is a theorem violation and throws).
FlatnessCertificate certify_faithfully_flat(const HopfInclusion& inc);
FlatnessCertificate certify_faithfully_flat_module(const ModuleData& m);

/// Projectivity of the ambient algebra over a normal saturated Hopf
/// subalgebra, certified through the quotient: a nonzero integral on the
/// quotient, the twist isomorphism, the coinvariant identification of
/// B (x) C with B, and a global splitting witness.
Certificate certify_projective_over_normal(const HopfInclusion& inc);

/// Seeded randomized cross-check of the fiber criterion against the global
/// splitting test, over random stable sublattices of free modules.
Certificate criterion_cross_check(unsigned long long seed, int instances);

}  // namespace hopfz
