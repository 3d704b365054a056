#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfz/certificate.hpp"
#include "hopfz/lattice.hpp"

namespace hopfz {

class HopfAlgebra;

/// Element of the dual: coefficients in the dual basis. Evaluation is the
/// exact dot product with element coordinates.
struct LinearFunctional {
  ExactMatrix coeffs;  // n x 1

  Rat evaluate(const ExactMatrix& x) const;
  int rank() const { return coeffs.rows(); }
  const Fiber& fiber() const { return coeffs.fiber(); }
  bool operator==(const LinearFunctional&) const = default;
};

/// Finite-rank Hopf algebra over a fiber, given by structure constants on a
/// fixed basis:
///   mult:    n x n^2, column i*n+j holds e_i * e_j
///   unit:    n x 1
///   comult:  n^2 x n, column i holds coproduct of e_i (index a*n+b for the
///            basis tensor a (x) b)
///   counit:  a functional
///   antipode: n x n, column j holds the image of e_j (optional on input;
///            solve_antipode fills it in)
/// Construction checks dimensions only; verify_hopf checks the axioms.
class HopfAlgebra {
 public:
  HopfAlgebra(Fiber fiber, ExactMatrix mult, ExactMatrix unit, ExactMatrix comult,
              LinearFunctional counit, std::optional<ExactMatrix> antipode,
              std::vector<std::string> basis_names = {});

  int rank() const { return rank_; }
  const Fiber& fiber() const { return fiber_; }
  const ExactMatrix& mult() const { return mult_; }
  const ExactMatrix& unit() const { return unit_; }
  const ExactMatrix& comult() const { return comult_; }
  const LinearFunctional& counit() const { return counit_; }
  bool has_antipode() const { return antipode_.has_value(); }
  const ExactMatrix& antipode() const;
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  ExactMatrix basis_element(int i) const;
  ExactMatrix product(const ExactMatrix& x, const ExactMatrix& y) const;
  ExactMatrix comult_of(const ExactMatrix& x) const;
  Rat counit_of(const ExactMatrix& x) const { return counit_.evaluate(x); }
  ExactMatrix antipode_of(const ExactMatrix& x) const { return antipode() * x; }
  /// Product in H (x) H of two tensor-coordinate vectors (length n^2).
  ExactMatrix tensor_square_product(const ExactMatrix& u, const ExactMatrix& v) const;
  /// Left/right multiplication operator by x as an n x n matrix.
  ExactMatrix left_mult_matrix(const ExactMatrix& x) const;
  ExactMatrix right_mult_matrix(const ExactMatrix& x) const;

  bool operator==(const HopfAlgebra&) const = default;

 private:
  Fiber fiber_;
  int rank_;
  ExactMatrix mult_;
  ExactMatrix unit_;
  ExactMatrix comult_;
  LinearFunctional counit_;
  std::optional<ExactMatrix> antipode_;
  std::vector<std::string> basis_names_;
};

/// Checks every Hopf axiom as an exact identity of structure tensors:
/// associativity, unitality, coassociativity, counitality, the bialgebra
/// compatibilities, and the antipode axiom when an antipode is present.
Certificate verify_hopf(const HopfAlgebra& h);

/// The unique convolution inverse of the identity, found by an exact linear
/// solve of both one-sided antipode identities. Requires the bialgebra
/// axioms; throws Error("BialgebraInvalid") otherwise.
std::optional<ExactMatrix> solve_antipode(const HopfAlgebra& h);

/// Same algebra with the antipode solved (when absent) or verified (when
/// present); both paths end in the same verified state.
HopfAlgebra with_antipode(const HopfAlgebra& h);

/// Entrywise reduction of an integer structure into a fiber; Hopf axioms are
/// polynomial identities, so they survive base change.
HopfAlgebra base_change(const HopfAlgebra& h, const Fiber& k);

/// Dual Hopf algebra on the dual basis: multiplication is convolution
/// (transpose of comult), comultiplication the transpose of mult. Double
/// duals are equal on the nose under the double-dual basis identification.
HopfAlgebra dual(const HopfAlgebra& h);

HopfAlgebra opposite(const HopfAlgebra& h);
HopfAlgebra coopposite(const HopfAlgebra& h);

/// Convolution product (f . g)(x) = sum f(x_1) g(x_2).
LinearFunctional convolution(const LinearFunctional& f, const LinearFunctional& g,
                             const HopfAlgebra& h);

LinearFunctional counit_functional(const HopfAlgebra& h);

}  // namespace hopfz
