#pragma once

#include "hopfz/hopf.hpp"

namespace hopfz {

enum class Side { left, right };

/// Module over the algebra part of a Hopf algebra. Left-sided modules are
/// stored as right modules over the opposite algebra, with the flag keeping
/// the user-facing view: one code path, two views. The stored action matrix
/// is rank x (rank * n) with column i*n+j holding the action of a_j on m_i.
struct ModuleData {
  HopfAlgebra algebra;
  Side side = Side::right;
  int rank = 0;
  ExactMatrix action;

  static ModuleData right_module(HopfAlgebra a, ExactMatrix action);
  /// `action` column i*n+j holds a_j . m_i.
  static ModuleData left_module(HopfAlgebra a, ExactMatrix action);

  /// Algebra the stored right action is over (the opposite for left views).
  HopfAlgebra stored_algebra() const;
  /// m <| a in the stored right view (= a.m for left modules).
  ExactMatrix act(const ExactMatrix& m, const ExactMatrix& a) const;
  /// Action operator by the algebra element a as a rank x rank matrix.
  ExactMatrix action_matrix(const ExactMatrix& a) const;
};

/// Associativity and unitality of the action, checked exactly.
Certificate check_module(const ModuleData& m);

/// Comodule over the coalgebra part. Coaction matrices are always written
/// with the comodule factor first (M (x) C): (rank*n) x rank, column i
/// holding the coaction of m_i with index q*n+c. Left comodules are stored
/// as right comodules over the co-opposite.
struct ComoduleData {
  HopfAlgebra coalgebra;
  Side side = Side::right;
  int rank = 0;
  ExactMatrix coaction;

  static ComoduleData right_comodule(HopfAlgebra c, ExactMatrix coaction);
  /// `coaction` column i holds the swap of the left coaction of m_i into
  /// M (x) C layout.
  static ComoduleData left_comodule(HopfAlgebra c, ExactMatrix coaction);

  HopfAlgebra stored_coalgebra() const;
  ExactMatrix coact(const ExactMatrix& m) const;
};

/// Coassociativity and the counit law, checked exactly.
Certificate check_comodule(const ComoduleData& m);

/// The regular (co)module structures of a Hopf algebra on itself.
ModuleData regular_right_module(const HopfAlgebra& h);
ModuleData regular_left_module(const HopfAlgebra& h);
ComoduleData regular_right_comodule(const HopfAlgebra& h);
ComoduleData regular_left_comodule(const HopfAlgebra& h);
ComoduleData trivial_comodule(const HopfAlgebra& h, int rank, Side side);

/// Right comodule over Y obtained from a right comodule over X along a
/// coalgebra map phi: X -> Y (matrix nY x nX).
ComoduleData corestrict(const ComoduleData& m, const HopfAlgebra& y, const ExactMatrix& phi);

/// Simultaneous module and comodule with the compatibility
/// rho(m a) = sum m_0 a_1 (x) m_1 phi(a_2), where phi maps the acting
/// algebra into the coacting one. Covers both Hopf (B,A)-modules (phi the
/// inclusion) and (B,C)-Hopf modules (phi the quotient map).
struct HopfModuleData {
  ModuleData module_part;      // right module over X
  ComoduleData comodule_part;  // right comodule over Y
  ExactMatrix structure_map;   // phi: X -> Y
};

Certificate check_hopf_module(const HopfModuleData& m);

/// Cotensor product M box_C N inside M (x) N as the equalizer kernel of
/// rho_M (x) id - id (x) lambda_N; saturated over Z by construction.
Lattice cotensor(const ComoduleData& m, const ComoduleData& n);
/// Field fibers: basis of the equalizer as columns.
ExactMatrix cotensor_basis(const ComoduleData& m, const ComoduleData& n);

/// Coinvariants of a comodule: kernel of rho - (id (x) unit).
Lattice coinvariants(const ComoduleData& m);
ExactMatrix coinvariants_basis(const ComoduleData& m);

/// P (x)_A M for a right module P and a left module M, presented as the
/// quotient of P (x) M by the span of p a (x) m - p (x) a m.
QuotientPresentation tensor_over_algebra(const ModuleData& p, const ModuleData& m);

/// Lattice of colinear maps M -> N between right comodules over the same
/// coalgebra, inside matrices flattened as q*rank(M)+j.
Lattice comodule_hom(const ComoduleData& m, const ComoduleData& n);

/// The twist c (x) b -> sum b_1 (x) c pi(b_2) between the two standard
/// Hopf-module structures on C (x) B and B (x) C, with the stated inverse
/// b (x) c -> sum c pi(S^{-1}(b_2)) (x) b_1; both composites are checked to
/// be the identity, and the map is checked to be a morphism of modules and
/// comodules. Requires an invertible antipode.
Certificate twist_iso(const HopfAlgebra& b, const HopfAlgebra& c, const ExactMatrix& pi,
                      const ExactMatrix& s_inverse);

/// The two standard objects of Remark-style Hopf module structures used by
/// the projectivity pipeline.
HopfModuleData m_tensor_c_hopf_module(const HopfAlgebra& b, const HopfAlgebra& c,
                                      const ExactMatrix& pi, const ModuleData& m);
HopfModuleData c_tensor_b_hopf_module(const HopfAlgebra& b, const HopfAlgebra& c,
                                      const ExactMatrix& pi);

// Induced structures on sublattices, quotients and tensor factors. Every
// constructor re-verifies what it builds: a wrong induced formula surfaces
// as a hard error, not silent corruption.

/// P (x) M with the coaction through the M factor (P a free placeholder of
/// the given rank).
ComoduleData tensor_comodule_right_factor(int p_rank, const ComoduleData& m);
/// P (x) M with the action through the P factor.
ModuleData tensor_module_left_factor(const ModuleData& p, int m_rank);
/// Coaction restricted to a stable sublattice, in its basis coordinates;
/// throws Error("NotStable") if the sublattice is not a subcomodule.
ComoduleData restrict_comodule(const ComoduleData& ambient, const Lattice& sub);
/// Action restricted to a stable sublattice.
ModuleData restrict_module(const ModuleData& ambient, const Lattice& sub);
/// Coaction descended to a quotient presentation; throws
/// Error("NotWellDefined") unless the coaction kills the sublattice.
ComoduleData comodule_on_quotient(const ComoduleData& ambient, const QuotientPresentation& qp);
/// Action descended to a quotient presentation.
ModuleData module_on_quotient(const ModuleData& ambient, const QuotientPresentation& qp);

}  // namespace hopfz
