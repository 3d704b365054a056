#pragma once

#include "hopfz/module.hpp"

namespace hopfz {

/// Module of integral functionals on H: left integrals satisfy
/// sum h_1 phi(h_2) = phi(h) 1, right integrals sum phi(h_1) h_2 = phi(h) 1.
/// Over Z the basis spans a saturated sublattice of the dual.
struct IntegralModule {
  HopfAlgebra hopf;
  Side side = Side::left;
  ExactMatrix basis;  // n x rank, columns are functional coefficient vectors
  int rank() const { return basis.cols(); }
  std::vector<LinearFunctional> functionals() const;
};

/// Integral elements inside the algebra: right integral-elements satisfy
/// t a = eps(a) t, left ones a t = eps(a) t.
struct IntegralElementModule {
  HopfAlgebra algebra;
  Side side = Side::right;
  ExactMatrix basis;  // n x rank, columns are element coordinate vectors
  int rank() const { return basis.cols(); }
};

IntegralModule integral_functionals(const HopfAlgebra& h, Side side);
IntegralElementModule integral_elements(const HopfAlgebra& h, Side side);

/// Rank of the integral module over Z is one, and the reduced Z-basis spans
/// the independently computed kernel over every requested fiber. Reported as
/// inapplicable when there is no nonzero integral.
Certificate verify_rank_one_and_base_change(const HopfAlgebra& h, Side side,
                                            const std::vector<Fiber>& fibers);

/// Default fiber set for base-change checks: Q, F_2, F_3, and F_p for every
/// prime p dividing an elementary divisor of the integral system.
std::vector<Fiber> integral_test_fibers(const HopfAlgebra& h);

struct EnoughIntegralsResult {
  Certificate certificate;
  Int gcd = 0;  // generator of the image ideal of I^l (x) H -> Z
};

/// gcd of the values of the integral basis on all basis elements; the value
/// is 1 for a Z-projective Hopf algebra with a nonzero integral, and any
/// other value is flagged.
EnoughIntegralsResult enough_integrals_index(const HopfAlgebra& h);

/// Exact determinant of the antipode; a unit whenever a nonzero integral
/// exists (over Z this means +-1).
Certificate antipode_bijectivity(const HopfAlgebra& h);

/// Evaluation map coinvariants (x) H -> M of a Hopf module over H, checked
/// bijective over Z (all Smith divisors 1); the failing divisors are
/// recorded otherwise.
Certificate fundamental_iso_check(const HopfModuleData& m);

/// The standard Hopf module structure on the dual: right action
/// (f <- h)(x) = f(x S(h)) and the unique coaction making the left
/// convolution action rational. The constructor re-checks the compatibility
/// and fails loudly if the convention were wrong.
HopfModuleData dual_hopf_module(const HopfAlgebra& h);

/// Hopf module structure on M (x) H with diagonal coaction and free action
/// on the right factor.
HopfModuleData tensor_hopf_module(const HopfAlgebra& h, const ComoduleData& m);

/// The map M (x) I^r -> Hom-colinear(H, M), m (x) phi -> (h -> sum m_0
/// phi(S(m_1) h)), checked to land in the colinear-hom lattice and to be a
/// bijection onto it.
Certificate hom_from_H_iso(const HopfAlgebra& h, const ComoduleData& m);

/// Splitting witness for H as a direct summand of a free module over its
/// dual (with the dual acting through the coproduct), found by an exact
/// integer solve.
Certificate dual_module_projectivity(const HopfAlgebra& h);

}  // namespace hopfz
