#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfz/subquot.hpp"

namespace hopfz {

/// Finite group given by its multiplication table over element indices.
/// Basis orderings are fixed so serialized output is byte-stable.
struct GroupTable {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i g_j
  std::vector<int> inverse;
  int identity = 0;
};

/// Throws Error("InvalidTable") unless associativity, identity and inverse
/// laws hold on all triples.
void validate_group(const GroupTable& g);

// Shipped groups. Conventions:
//   cyclic groups: index i is the i-th power of the generator
//   c2xc2: (0,0), (1,0), (0,1), (1,1)
//   s3: e, r, r2, s, rs, r2s with r^3 = s^2 = e, s r = r2 s
//   d4: e, r, r2, r3, s, rs, r2s, r3s with r^4 = s^2 = e, s r = r3 s
//   q8: 1, -1, i, -i, j, -j, k, -k
GroupTable group_c2();
GroupTable group_c3();
GroupTable group_c4();
GroupTable group_c2xc2();
GroupTable group_s3();
GroupTable group_d4();
GroupTable group_q8();

/// Group algebra Z[G]: grouplike coproduct, counit 1, antipode = inversion.
HopfAlgebra group_algebra(const GroupTable& g);

/// Function Hopf algebra Z^G on the idempotent basis; equals
/// dual(group_algebra(g)) on the nose.
HopfAlgebra function_hopf(const GroupTable& g);

/// Rank-4 algebra with basis (1, g, x, gx), g^2 = 1, x^2 = 0, xg = -gx.
/// The minimal non-commutative non-cocommutative example; it only needs the
/// unit -1, so it is defined over Z.
HopfAlgebra sweedler_over_Z();

/// The trivial Hopf algebra Z.
HopfAlgebra trivial_hopf();

/// Inclusion of Z[H] into Z[G] along basis indices. Throws
/// Error("NotASubgroup") unless the subset is closed.
HopfInclusion subgroup_inclusion(const GroupTable& g, const std::vector<int>& elements,
                                 const std::string& name = "");

/// All subgroups as sorted element-index lists, ordered by (size, elements).
std::vector<std::vector<int>> all_subgroups(const GroupTable& g);
bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& elements);

/// Quotient group table of G by a normal subgroup, cosets ordered by their
/// smallest member.
GroupTable quotient_group(const GroupTable& g, const std::vector<int>& normal_subgroup);

// Named corpus, addressable from the CLI as "builtin:<name>".
std::vector<std::string> builtin_algebra_names();
HopfAlgebra builtin_algebra(const std::string& name);
std::vector<std::string> builtin_inclusion_names();
HopfInclusion builtin_inclusion(const std::string& name);

}  // namespace hopfz
