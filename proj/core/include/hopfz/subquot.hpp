#pragma once

#include <optional>

#include "hopfz/integrals.hpp"
#include "hopfz/module.hpp"

namespace hopfz {

/// An injective Hopf algebra map A -> B given by the embedding matrix
/// (rank B x rank A), with cached saturation/normality facts filled in by
/// the check operations.
struct HopfInclusion {
  HopfAlgebra sub;  // A
  HopfAlgebra amb;  // B
  ExactMatrix embedding;
  std::string name;

  mutable std::optional<bool> is_saturated;
  mutable std::optional<bool> is_normal;

  /// Image lattice f(A) in the ambient coordinates.
  Lattice image() const { return Lattice(amb.rank(), embedding); }
  /// f applied to an element of A.
  ExactMatrix embed(const ExactMatrix& a) const { return embedding * a; }
};

/// Injectivity, the four Hopf-map intertwinings, and saturation of the
/// image, each recorded separately.
Certificate check_inclusion(const HopfInclusion& inc);

/// Normality of the inclusion: both adjoint expressions
/// sum b_1 f(a) S(b_2) and sum S(b_1) f(a) b_2 lie in f(A), decided by
/// membership tests over all basis pairs. A negative result is a valid
/// certificate; the first counterexample pair is recorded.
Certificate check_normal(const HopfInclusion& inc);

/// Quotient Hopf algebra C = B / B f(A)^+ with projection and section.
/// The quotient basis is normalized so the image of the unit is the first
/// basis vector and the remaining vectors are the classes of the non-pivot
/// standard basis vectors in ascending order.
struct QuotientHopf {
  HopfInclusion inc;
  Lattice ideal;        // B f(A)^+ = f(A)^+ B
  HopfAlgebra quotient; // C
  ExactMatrix projection;  // rank C x rank B
  ExactMatrix section;     // rank B x rank C

  ComoduleData right_coaction_on_amb() const;  // (id (x) pi) Delta_B
  ComoduleData left_coaction_on_amb() const;   // (pi (x) id) Delta_B
};

struct BuildQuotientResult {
  Certificate certificate;
  std::optional<QuotientHopf> quotient;
};

/// Builds C: computes A^+ = ker eps_A, the ideal B f(A)^+, verifies it
/// equals f(A)^+ B, checks saturation (a non-saturated ideal is reported
/// with its torsion invariants and stops the construction over Z), induces
/// the quotient structure constants, re-verifies every Hopf axiom on C, and
/// checks that the projection is a conormal Hopf map.
BuildQuotientResult build_quotient(const HopfInclusion& inc);

/// Recovers A from C: computes coinvariants of B on both sides through the
/// projection coactions, asserts both equal f(A), and closes the
/// correspondence round-trip A -> I -> coinvariants -> ideal.
Certificate coinvariant_recovery(const QuotientHopf& q);

/// The canonical map B (x)_A B -> C (x) B, b (x) b' -> sum pi(b_1) (x) b_2 b',
/// checked well-defined on the relation lattice and exactly bijective.
Certificate gamma_iso(const QuotientHopf& q);

/// The canonical map A (x) B -> B box_C B, a (x) b -> sum f(a) b_1 (x) b_2,
/// checked bijective onto the cotensor lattice, with the stated inverse
/// b (x) b' -> sum b S(b'_1) (x) b'_2 composing to the identity both ways.
Certificate theta_iso(const QuotientHopf& q);

/// The map A_eps (x) C -> B, t (x) class(b) -> t b: well-defined, right
/// B-linear, right C-colinear, injective, with image the lattice A_eps B.
Certificate f_B_map(const QuotientHopf& q);

struct IntegralTransfer {
  Certificate certificate;
  std::optional<LinearFunctional> transferred;  // right integral on C
};

/// Transfers a right integral phi on B through a left integral-element t of
/// A: checks the A-linearity of b -> sum t_1 phi(S(t_2) b) and returns
/// psi(class(b)) = phi(S(t) b), verified to be a right integral on C,
/// nonzero when phi and t are.
IntegralTransfer integral_transfer(const QuotientHopf& q);

}  // namespace hopfz
