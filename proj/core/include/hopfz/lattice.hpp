#pragma once

#include <optional>
#include <vector>

#include "hopfz/matrix.hpp"

namespace hopfz {

// Exact linear algebra over Z. Normal forms follow a fixed pivot rule
// (smallest nonzero absolute value, ties broken towards the leftmost column,
// pivot sign normalized positive) so bases are reproducible across runs.

/// Column-style Hermite normal form: H = m * U with U unimodular. Pivot rows
/// strictly increase with the column index, pivots are positive, entries to
/// the left of a pivot in its row are reduced into [0, pivot). Columns past
/// the rank are zero.
ExactMatrix hnf(const ExactMatrix& m);

struct HnfResult {
  ExactMatrix h;
  ExactMatrix transform;  // unimodular, h = m * transform
  int rank;
};
HnfResult hnf_with_transform(const ExactMatrix& m);

struct SnfResult {
  std::vector<Int> divisors;  // min(rows, cols) entries, d_i | d_{i+1}, zeros trailing
  ExactMatrix left;           // empty unless requested
  ExactMatrix right;
  int rank;                   // number of nonzero divisors
};
/// Smith normal form: left * m * right is diagonal with the divisor chain.
SnfResult snf(const ExactMatrix& m, bool want_left = true, bool want_right = true);

/// Exact determinant via fraction-free (Bareiss) elimination.
Int integer_determinant(const ExactMatrix& m);
bool is_unimodular(const ExactMatrix& m);
/// Inverse of a unimodular integer matrix.
ExactMatrix inverse_unimodular(const ExactMatrix& m);

/// Basis of {x : m x = 0} over Z as HNF-reduced columns. Integer kernels are
/// saturated by construction.
ExactMatrix integer_kernel(const ExactMatrix& m);

/// Solves m x = rhs over Z (columnwise) or decides no solution exists.
std::optional<ExactMatrix> solve_integer(const ExactMatrix& m, const ExactMatrix& rhs);

/// A finitely generated submodule of Z^n, stored HNF-reduced with zero
/// columns dropped. Equality of lattices is equality of reduced bases.
class Lattice {
 public:
  Lattice(int ambient_rank, const ExactMatrix& generators);
  static Lattice zero(int ambient_rank);
  static Lattice full(int ambient_rank);

  int ambient_rank() const { return ambient_; }
  int rank() const { return basis_.cols(); }
  const ExactMatrix& basis() const { return basis_; }

  bool contains(const ExactMatrix& v) const;
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& o) const = default;

 private:
  int ambient_;
  ExactMatrix basis_;
  std::vector<int> pivot_rows_;
};

bool membership(const ExactMatrix& v, const Lattice& l);

Lattice kernel_lattice(const ExactMatrix& m);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

/// Saturation of l in Z^n: all x with k x in l for some k != 0.
Lattice saturate(const Lattice& l);
bool is_saturated(const Lattice& l);

/// Z^n / sub presented by a free-part basis with a section and the torsion
/// invariants (elementary divisors > 1). projection * section = identity.
struct QuotientPresentation {
  int ambient_rank = 0;
  Lattice sublattice = Lattice::zero(0);
  ExactMatrix projection;      // free_rank x n
  ExactMatrix section;         // n x free_rank
  std::vector<Int> torsion;    // invariants > 1; empty iff sub is saturated
  int free_rank() const { return projection.rows(); }
};
QuotientPresentation quotient(int ambient_rank, const Lattice& sub);

}  // namespace hopfz
