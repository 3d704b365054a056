#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfz/flatcert.hpp"
#include "hopfz/zoo.hpp"

using namespace hopfz;

namespace {

const Fiber Z = Fiber::integers();

ModuleData trivial_left_module_over(const HopfAlgebra& a) {
  ExactMatrix act(Z, 1, a.rank());
  for (int j = 0; j < a.rank(); ++j) act.set(0, j, a.counit().coeffs.at(j, 0));
  return ModuleData::left_module(a, act);
}

}  // namespace

TEST_CASE("candidate primes include the torsion primes of the splitting system") {
  HopfInclusion a3 = builtin_inclusion("A3-in-S3");
  std::vector<Int> p1 = candidate_primes(ambient_as_left_module(a3));
  CHECK(std::find(p1.begin(), p1.end(), Int(2)) != p1.end());
  CHECK(std::find(p1.begin(), p1.end(), Int(3)) != p1.end());

  HopfInclusion c4 = builtin_inclusion("C2-in-C4");
  std::vector<Int> p2 = candidate_primes(ambient_as_left_module(c4));
  CHECK(std::find(p2.begin(), p2.end(), Int(2)) != p2.end());
}

TEST_CASE("fiber reports: group algebra over a subgroup algebra is free with coset basis") {
  HopfInclusion a3 = builtin_inclusion("A3-in-S3");
  ModuleData m = ambient_as_left_module(a3);
  for (const Fiber& k : {Fiber::prime(2), Fiber::rationals(), Fiber::prime(3)}) {
    FiberReport rep = fiber_flat(module_to_fiber(m, k));
    CHECK(rep.flat);
    CHECK(rep.faithfully_flat == Tri::yes);
    REQUIRE(rep.free_basis.has_value());
    CHECK(rep.free_basis->size() == 2);
    CHECK((*rep.free_basis)[0] == 0);  // e
    CHECK((*rep.free_basis)[1] == 3);  // s
  }
}

TEST_CASE("an algebra is free of rank 1 over itself on every fiber") {
  HopfAlgebra c2 = group_algebra(group_c2());
  ModuleData m = regular_left_module(c2);
  FiberReport rep = fiber_flat(module_to_fiber(m, Fiber::prime(2)));
  CHECK(rep.flat);
  REQUIRE(rep.free_basis.has_value());
  CHECK(rep.free_basis->size() == 1);
}

TEST_CASE("global projectivity: free cases have witnesses, the trivial module over Z[C2] has none") {
  HopfInclusion a3 = builtin_inclusion("A3-in-S3");
  GlobalProjective gp = global_projective(ambient_as_left_module(a3));
  CHECK(gp.projective);
  REQUIRE(gp.section.has_value());

  // the trivial module over a group algebra is not projective: the counit
  // has no Z[C2]-linear section (the norm element obstructs)
  HopfAlgebra c2 = group_algebra(group_c2());
  GlobalProjective trivial = global_projective(trivial_left_module_over(c2));
  CHECK(!trivial.projective);

  // over itself: identity section exists
  GlobalProjective self = global_projective(regular_left_module(c2));
  CHECK(self.projective);
}

TEST_CASE("faithfully flat certificates for the corpus inclusions") {
  for (const std::string& name : {"A3-in-S3", "C2-in-C4"}) {
    HopfInclusion inc = builtin_inclusion(name);
    FlatnessCertificate fc = certify_faithfully_flat(inc);
    CHECK(fc.verdict == Tri::yes);
    CHECK(fc.certificate.passed());
    CHECK(fc.global_projective == true);
    REQUIRE(fc.free_basis_global.has_value());
    CHECK(fc.free_basis_global->size() == 2);
    for (const FiberReport& rep : fc.fibers) CHECK(rep.faithfully_flat == Tri::yes);
  }
  HopfInclusion self = builtin_inclusion("S3-in-S3");
  FlatnessCertificate fc = certify_faithfully_flat(self);
  CHECK(fc.verdict == Tri::yes);
  REQUIRE(fc.free_basis_global.has_value());
  CHECK(fc.free_basis_global->size() == 1);
}

TEST_CASE("verdict monotonicity: adding fibers never flips yes to no") {
  // all fibers of a free module report yes, so any extension of the prime
  // set keeps the verdict
  HopfInclusion inc = builtin_inclusion("C2-in-C2xC2");
  ModuleData m = ambient_as_left_module(inc);
  for (const Int& p : {Int(2), Int(3), Int(5), Int(7)}) {
    FiberReport rep = fiber_flat(module_to_fiber(m, Fiber::prime(p)));
    CHECK(rep.faithfully_flat == Tri::yes);
  }
}

TEST_CASE("freeness witnesses flatten to unimodular maps") {
  HopfInclusion inc = builtin_inclusion("C2-in-C4");
  ModuleData m = ambient_as_left_module(inc);
  auto basis = global_free_basis(m);
  REQUIRE(basis.has_value());
  const HopfAlgebra& a = inc.sub;
  ExactMatrix cols(Z, m.rank, 0);
  for (int i : *basis) {
    ExactMatrix block(Z, m.rank, a.rank());
    ExactMatrix ei(Z, m.rank, 1);
    ei.set(i, 0, 1);
    for (int j = 0; j < a.rank(); ++j) block.set_column(j, m.act(ei, a.basis_element(j)));
    cols = hstack(cols, block);
  }
  Int det = integer_determinant(cols);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("projectivity certificates over normal subalgebras") {
  for (const std::string& name : {"A3-in-S3", "C2-in-C2xC2", "trivial-in-S3", "C2-in-C4"}) {
    HopfInclusion inc = builtin_inclusion(name);
    Certificate cert = certify_projective_over_normal(inc);
    CHECK(cert.passed());
  }
}

TEST_CASE("projectivity certificate reports unmet hypotheses on a non-normal inclusion") {
  HopfInclusion inc = builtin_inclusion("C2-in-S3");
  Certificate cert = certify_projective_over_normal(inc);
  CHECK(!cert.passed());
  REQUIRE(cert.first_failure() != nullptr);
  CHECK(cert.first_failure()->name == "hypotheses");
  CHECK(cert.first_failure()->detail.find("normal") != std::string::npos);
}

TEST_CASE("seeded criterion cross-check agrees on every instance") {
  Certificate cert = criterion_cross_check(20240613ULL, 40);
  CHECK(cert.passed());
  CHECK(cert.witness()["agreements"] == 40);
}
