#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfz/zoo.hpp"

using namespace hopfz;

namespace {

const Fiber Z = Fiber::integers();

// coset projection Z[S3] -> Z[C2] (A3-cosets)
ExactMatrix s3_to_c2_projection() {
  return ExactMatrix::from_rows(Z, {{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}});
}

ExactMatrix flatten_map(const ExactMatrix& g) {
  // matrix (q, j) -> vector index q * cols + j
  ExactMatrix v(g.fiber(), g.rows() * g.cols(), 1);
  for (int q = 0; q < g.rows(); ++q)
    for (int j = 0; j < g.cols(); ++j) v.set(q * g.cols() + j, 0, g.at(q, j));
  return v;
}

}  // namespace

TEST_CASE("regular structures satisfy the module and comodule axioms") {
  for (const HopfAlgebra& h : {group_algebra(group_s3()), sweedler_over_Z()}) {
    CHECK(check_module(regular_right_module(h)).passed());
    CHECK(check_module(regular_left_module(h)).passed());
    CHECK(check_comodule(regular_right_comodule(h)).passed());
    CHECK(check_comodule(regular_left_comodule(h)).passed());
  }
}

TEST_CASE("left module storage uses the opposite algebra") {
  HopfAlgebra sw = sweedler_over_Z();
  ModuleData left = regular_left_module(sw);
  // act(m, a) must equal a * m
  ExactMatrix x = sw.basis_element(2), g = sw.basis_element(1);
  CHECK(left.act(x, g) == sw.product(g, x));
  CHECK(check_module(left).passed());
}

TEST_CASE("cotensor of C with itself along the regular coactions is C") {
  for (const HopfAlgebra& c : {group_algebra(group_c3()), sweedler_over_Z()}) {
    Lattice ct = cotensor(regular_right_comodule(c), regular_left_comodule(c));
    CHECK(ct.rank() == c.rank());
    // the image of comult spans it
    ExactMatrix d(Z, c.rank() * c.rank(), c.rank());
    for (int i = 0; i < c.rank(); ++i) d.set_column(i, c.comult_of(c.basis_element(i)));
    CHECK(ct == Lattice(c.rank() * c.rank(), d));
  }
}

TEST_CASE("cotensor of the trivial comodule with C is the coinvariants, rank 1") {
  HopfAlgebra c = group_algebra(group_c3());
  ComoduleData r = trivial_comodule(c, 1, Side::right);
  Lattice ct = cotensor(r, regular_left_comodule(c));
  CHECK(ct.rank() == 1);
}

TEST_CASE("B box_C B has rank 18 for B = Z[S3] over the A3-coset quotient") {
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  ComoduleData right = corestrict(regular_right_comodule(b), c, pi);
  ComoduleData left = corestrict(regular_left_comodule(b), c, pi);
  Lattice ct = cotensor(right, left);
  CHECK(ct.rank() == 18);  // = rank(A (x) B) = 3 * 6
  CHECK(saturate(ct) == ct);
}

TEST_CASE("coinvariants of Z[S3] through the coset projection recover Z[A3]") {
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  Lattice co = coinvariants(corestrict(regular_right_comodule(b), c, pi));
  CHECK(co.rank() == 3);
  ExactMatrix a3(Z, 6, 3);
  a3.set(0, 0, 1);
  a3.set(1, 1, 1);
  a3.set(2, 2, 1);
  CHECK(co == Lattice(6, a3));
}

TEST_CASE("coinvariants of a trivial coaction is everything; of the regular coaction, the unit") {
  HopfAlgebra c = group_algebra(group_c4());
  CHECK(coinvariants(trivial_comodule(c, 3, Side::right)).rank() == 3);
  Lattice co = coinvariants(regular_right_comodule(c));
  CHECK(co.rank() == 1);
  CHECK(co.contains(c.unit()));
}

TEST_CASE("A tensor_A M is M") {
  HopfAlgebra a = group_algebra(group_c3());
  QuotientPresentation qp = tensor_over_algebra(regular_right_module(a), regular_left_module(a));
  CHECK(qp.free_rank() == a.rank());
  CHECK(qp.torsion.empty());
}

TEST_CASE("B tensor_A R has rank 2 with no torsion for A3 in S3") {
  HopfInclusion inc = builtin_inclusion("A3-in-S3");
  const HopfAlgebra& a = inc.sub;
  const HopfAlgebra& b = inc.amb;
  // B as right A-module through the embedding
  ExactMatrix act(Z, 6, 6 * 3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j)
      act.set_column(i * 3 + j, b.product(b.basis_element(i), inc.embed(a.basis_element(j))));
  ModuleData bmod = ModuleData::right_module(a, act);
  CHECK(check_module(bmod).passed());
  // R as the trivial left A-module through the counit
  ExactMatrix tact(Z, 1, 3);
  for (int j = 0; j < 3; ++j) tact.set(0, j, a.counit().coeffs.at(j, 0));
  ModuleData r = ModuleData::left_module(a, tact);
  CHECK(check_module(r).passed());
  QuotientPresentation qp = tensor_over_algebra(bmod, r);
  CHECK(qp.free_rank() == 2);
  CHECK(qp.torsion.empty());
}

TEST_CASE("Z[C2] tensor over itself of the trivial module has rank 1") {
  HopfAlgebra a = group_algebra(group_c2());
  ExactMatrix tact(Z, 1, 2);
  tact.set(0, 0, 1);
  tact.set(0, 1, 1);
  QuotientPresentation qp =
      tensor_over_algebra(regular_right_module(a), ModuleData::left_module(a, tact));
  CHECK(qp.free_rank() == 1);
}

TEST_CASE("the standard Hopf module structures of the quotient situation check out") {
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  HopfModuleData mc = m_tensor_c_hopf_module(b, c, pi, regular_right_module(b));
  CHECK(check_hopf_module(mc).passed());
  HopfModuleData cb = c_tensor_b_hopf_module(b, c, pi);
  CHECK(check_hopf_module(cb).passed());
}

TEST_CASE("replacing the diagonal action by the trivial one breaks compatibility") {
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  HopfModuleData mc = m_tensor_c_hopf_module(b, c, pi, regular_right_module(b));
  const int mr = mc.module_part.rank, nb = b.rank();
  ExactMatrix trivial_act(Z, mr, mr * nb);
  for (int i = 0; i < mr; ++i)
    for (int j = 0; j < nb; ++j)
      trivial_act.set(i, i * nb + j, b.counit().coeffs.at(j, 0));
  HopfModuleData broken{ModuleData::right_module(b, trivial_act), mc.comodule_part, pi};
  Certificate cert = check_hopf_module(broken);
  CHECK(!cert.passed());
  CHECK(cert.first_failure()->name == "compatibility");
}

TEST_CASE("twist isomorphism for B = C = Z[C2] and for the trivial quotient") {
  HopfAlgebra b = group_algebra(group_c2());
  ExactMatrix id2 = ExactMatrix::identity(Z, 2);
  Certificate cert = twist_iso(b, b, id2, inverse_unimodular(b.antipode()));
  CHECK(cert.passed());

  HopfAlgebra r = trivial_hopf();
  ExactMatrix eps(Z, 1, 2);
  eps.set(0, 0, 1);
  eps.set(0, 1, 1);
  CHECK(twist_iso(b, r, eps, inverse_unimodular(b.antipode())).passed());
}

TEST_CASE("twist isomorphism on a grouplike-spanned B sends c (x) g to g (x) c g") {
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  CHECK(twist_iso(b, c, pi, inverse_unimodular(b.antipode())).passed());
}

TEST_CASE("colinear endomorphisms of the regular comodule are the (id (x) f) Delta maps") {
  HopfAlgebra c = group_algebra(group_c2());
  Lattice hom = comodule_hom(regular_right_comodule(c), regular_right_comodule(c));
  CHECK(hom.rank() == c.rank());
  // phi(h) = sum h_1 f(h_2) is colinear for every functional f; on a group
  // algebra these are the diagonal maps
  for (int fi = 0; fi < c.rank(); ++fi) {
    ExactMatrix phi(Z, c.rank(), c.rank());
    phi.set(fi, fi, 1);
    CHECK(hom.contains(flatten_map(phi)));
  }
  ExactMatrix lg = c.left_mult_matrix(c.basis_element(1));
  CHECK(!hom.contains(flatten_map(lg)));  // left multiplication is not colinear
}

TEST_CASE("restriction and quotient descent of structures verify themselves") {
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  ComoduleData right = corestrict(regular_right_comodule(b), c, pi);
  Lattice co = coinvariants(right);
  // the coinvariant lattice is a C-subcomodule (it carries the trivial coaction)
  ComoduleData sub = restrict_comodule(right, co);
  CHECK(check_comodule(sub).passed());
}

TEST_CASE("induction adjunction: Hom_C(M, N) matches Hom_B(M, N box_C B)") {
  // B = Z[S3], C the coset quotient, M = B regular, N = C regular
  HopfAlgebra b = group_algebra(group_s3());
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();
  ComoduleData m_over_b = regular_right_comodule(b);
  ComoduleData m_over_c = corestrict(m_over_b, c, pi);
  ComoduleData n_reg = regular_right_comodule(c);

  Lattice hom_c = comodule_hom(m_over_c, n_reg);

  // N box_C B inside N (x) B, with the B-comodule structure through B
  ComoduleData b_left_c = corestrict(regular_left_comodule(b), c, pi);
  Lattice ct = cotensor(n_reg, b_left_c);
  ComoduleData ambient = tensor_comodule_right_factor(c.rank(), regular_right_comodule(b));
  ComoduleData ct_com = restrict_comodule(ambient, ct);
  Lattice hom_b = comodule_hom(m_over_b, ct_com);

  CHECK(hom_c.rank() == hom_b.rank());

  // f -> (f (x) id) Delta_B lands in the cotensor and is inverse to
  // g -> (id (x) eps_B) g on a spanning set
  const int nb = b.rank(), nc = c.rank(), r = ct.rank();
  ExactMatrix images(Z, hom_b.ambient_rank(), hom_c.rank());
  for (int k = 0; k < hom_c.rank(); ++k) {
    // unflatten f: nc x nb
    ExactMatrix f(Z, nc, nb);
    for (int q = 0; q < nc; ++q)
      for (int j = 0; j < nb; ++j) f.set(q, j, hom_c.basis().at(q * nb + j, k));
    // g(e_j) = sum f(e_j1) (x) e_j2 in N (x) B, expressed in the cotensor basis
    ExactMatrix g(Z, r, nb);
    for (int j = 0; j < nb; ++j) {
      ExactMatrix val(Z, nc * nb, 1);
      ExactMatrix d = b.comult_of(b.basis_element(j));
      for (int ab = 0; ab < nb * nb; ++ab) {
        const Rat& v = d.at(ab, 0);
        if (v == 0) continue;
        int j1 = ab / nb, j2 = ab % nb;
        for (int q = 0; q < nc; ++q)
          if (f.at(q, j1) != 0) val.add_at(q * nb + j2, 0, f.at(q, j1) * v);
      }
      auto coords = solve_integer(ct.basis(), val);
      REQUIRE(coords.has_value());
      g.set_column(j, *coords);
    }
    ExactMatrix gv = flatten_map(g);
    CHECK(hom_b.contains(gv));
    images.set_column(k, gv);
    // round trip: (id (x) eps_B) g = f
    ExactMatrix back(Z, nc, nb);
    for (int j = 0; j < nb; ++j) {
      ExactMatrix in_nb = ct.basis() * g.column(j);  // element of N (x) B
      for (int q = 0; q < nc; ++q) {
        Rat acc(0);
        for (int t = 0; t < nb; ++t)
          acc += in_nb.at(q * nb + t, 0) * b.counit().coeffs.at(t, 0);
        back.set(q, j, acc);
      }
    }
    CHECK(flatten_map(back) == flatten_map(f));
  }
  // the adjunction map is a bijection of the hom lattices
  auto coords = solve_integer(hom_b.basis(), images);
  REQUIRE(coords.has_value());
  CHECK(abs(integer_determinant(*coords)) == 1);
}

TEST_CASE("base change compatibility of the cotensor against tensoring with free modules") {
  // P (x)_A (M box_C N) and (P (x)_A M) box_C N give the same lattice inside
  // W (x) N, for P = A free of rank 1
  HopfInclusion inc = builtin_inclusion("A3-in-S3");
  const HopfAlgebra& a = inc.sub;
  const HopfAlgebra& b = inc.amb;
  HopfAlgebra c = group_algebra(group_c2());
  ExactMatrix pi = s3_to_c2_projection();

  // M = B as left A-module and right C-comodule
  ExactMatrix lact(Z, 6, 6 * 3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 3; ++j)
      lact.set_column(i * 3 + j, b.product(inc.embed(a.basis_element(j)), b.basis_element(i)));
  ModuleData m_mod = ModuleData::left_module(a, lact);
  ComoduleData m_com = corestrict(regular_right_comodule(b), c, pi);
  ComoduleData n_com = regular_left_comodule(c);

  // V = M box_C N with its left A-action
  Lattice v = cotensor(m_com, n_com);
  ModuleData ambient_action = tensor_module_left_factor(m_mod, n_com.rank);
  ModuleData v_mod = restrict_module(ambient_action, v);

  // W = P (x)_A M with its C-coaction
  ModuleData p = regular_right_module(a);
  QuotientPresentation w = tensor_over_algebra(p, m_mod);
  ComoduleData w_ambient = tensor_comodule_right_factor(p.rank, m_com);
  ComoduleData w_com = comodule_on_quotient(w_ambient, w);

  // side 2: (P (x)_A M) box_C N
  Lattice side2 = cotensor(w_com, n_com);

  // side 1: image of P (x) V inside W (x) N
  const int mn = n_com.rank, mm = m_mod.rank, pr = p.rank, wr = w.free_rank();
  ExactMatrix gens(Z, wr * mn, pr * v.rank());
  for (int i = 0; i < pr; ++i)
    for (int k = 0; k < v.rank(); ++k) {
      ExactMatrix col(Z, wr * mn, 1);
      for (int t = 0; t < mm * mn; ++t) {
        const Rat& vv = v.basis().at(t, k);
        if (vv == 0) continue;
        int mi = t / mn, nj = t % mn;
        ExactMatrix pm(Z, pr * mm, 1);
        pm.set(i * mm + mi, 0, 1);
        ExactMatrix wcoord = w.projection * pm;
        for (int q = 0; q < wr; ++q)
          if (wcoord.at(q, 0) != 0) col.add_at(q * mn + nj, 0, vv * wcoord.at(q, 0));
      }
      gens.set_column(i * v.rank() + k, col);
    }
  Lattice side1(wr * mn, gens);
  CHECK(side1 == side2);
  CHECK(check_module(v_mod).passed());
  // ranks also agree with the quotient presentation of P (x)_A V
  QuotientPresentation pv = tensor_over_algebra(p, v_mod);
  CHECK(pv.free_rank() == side2.rank());
}
