#include "hopfz/subquot.hpp"

namespace hopfz {

namespace {

const Fiber Z = Fiber::integers();

ExactMatrix tensor_cols(const ExactMatrix& x, const ExactMatrix& y) { return kron(x, y); }

}  // namespace

Certificate check_inclusion(const HopfInclusion& inc) {
  Certificate cert("hopf-inclusion",
                   "the embedding is an injective, saturated map of Hopf algebras");
  const HopfAlgebra& a = inc.sub;
  const HopfAlgebra& b = inc.amb;
  const ExactMatrix& f = inc.embedding;
  if (f.rows() != b.rank() || f.cols() != a.rank())
    throw Error("DimensionMismatch", "embedding shape vs ranks");

  bool injective = inc.embedding.fiber().is_integers()
                       ? integer_kernel(f).cols() == 0
                       : field_kernel(f).cols() == 0;
  cert.check("injective", injective, injective ? "" : "embedding has a kernel");
  if (!injective) return cert;

  bool mult_ok = true, unit_ok = true, comult_ok = true, counit_ok = true, antipode_ok = true;
  std::string detail;
  for (int i = 0; i < a.rank() && mult_ok; ++i)
    for (int j = 0; j < a.rank() && mult_ok; ++j) {
      ExactMatrix lhs = inc.embed(a.product(a.basis_element(i), a.basis_element(j)));
      ExactMatrix rhs = b.product(inc.embed(a.basis_element(i)), inc.embed(a.basis_element(j)));
      if (!(lhs == rhs)) {
        mult_ok = false;
        detail = "f(a_i a_j) != f(a_i) f(a_j) at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")";
      }
    }
  cert.check("intertwines-mult", mult_ok, detail);
  unit_ok = inc.embed(a.unit()) == b.unit();
  cert.check("intertwines-unit", unit_ok);
  ExactMatrix ff = kron(f, f);
  for (int i = 0; i < a.rank() && comult_ok; ++i) {
    if (!(ff * a.comult_of(a.basis_element(i)) == b.comult_of(inc.embed(a.basis_element(i)))))
      comult_ok = false;
  }
  cert.check("intertwines-comult", comult_ok);
  for (int i = 0; i < a.rank() && counit_ok; ++i) {
    if (a.counit_of(a.basis_element(i)) != b.counit_of(inc.embed(a.basis_element(i))))
      counit_ok = false;
  }
  cert.check("intertwines-counit", counit_ok);
  for (int i = 0; i < a.rank() && antipode_ok; ++i) {
    if (!(inc.embed(a.antipode_of(a.basis_element(i))) ==
          b.antipode_of(inc.embed(a.basis_element(i)))))
      antipode_ok = false;
  }
  cert.check("intertwines-antipode", antipode_ok);

  if (inc.embedding.fiber().is_integers()) {
    bool sat = is_saturated(inc.image());
    inc.is_saturated = sat;
    cert.check("saturated", sat, sat ? "" : "image lattice is not saturated");
  }
  if (!(mult_ok && unit_ok && comult_ok && counit_ok && antipode_ok)) {
    // keep the error taxonomy: a failed intertwining is NotHopfMap
    cert.witness()["error"] = "NotHopfMap";
  }
  return cert;
}

Certificate check_normal(const HopfInclusion& inc) {
  Certificate cert("normality",
                   "both adjoint actions of the ambient algebra keep the image inside itself");
  const HopfAlgebra& a = inc.sub;
  const HopfAlgebra& b = inc.amb;
  Lattice image = inc.image();
  bool normal = true;
  std::string counterexample;
  for (int ai = 0; ai < a.rank() && normal; ++ai) {
    ExactMatrix fa = inc.embed(a.basis_element(ai));
    for (int bi = 0; bi < b.rank() && normal; ++bi) {
      ExactMatrix d = b.comult_of(b.basis_element(bi));
      ExactMatrix adj1(b.fiber(), b.rank(), 1);  // sum b_1 f(a) S(b_2)
      ExactMatrix adj2(b.fiber(), b.rank(), 1);  // sum S(b_1) f(a) b_2
      for (int xy = 0; xy < b.rank() * b.rank(); ++xy) {
        const Rat& c = d.at(xy, 0);
        if (c == 0) continue;
        int b1 = xy / b.rank(), b2 = xy % b.rank();
        ExactMatrix t1 = b.product(b.basis_element(b1),
                                   b.product(fa, b.antipode_of(b.basis_element(b2))));
        ExactMatrix t2 = b.product(b.antipode_of(b.basis_element(b1)),
                                   b.product(fa, b.basis_element(b2)));
        for (int k = 0; k < b.rank(); ++k) {
          if (t1.at(k, 0) != 0) adj1.add_at(k, 0, b.fiber().mul(c, t1.at(k, 0)));
          if (t2.at(k, 0) != 0) adj2.add_at(k, 0, b.fiber().mul(c, t2.at(k, 0)));
        }
      }
      if (!image.contains(adj1) || !image.contains(adj2)) {
        normal = false;
        counterexample = "adjoint of basis pair (a" + std::to_string(ai) + ", b" +
                         std::to_string(bi) + ") leaves the image";
      }
    }
  }
  inc.is_normal = normal;
  // either answer is a valid determination; the finding goes in the witness
  cert.check("normality-decided", true);
  cert.witness()["normal"] = normal;
  if (!normal) cert.witness()["counterexample"] = counterexample;
  return cert;
}

ComoduleData QuotientHopf::right_coaction_on_amb() const {
  return corestrict(regular_right_comodule(inc.amb), quotient, projection);
}

ComoduleData QuotientHopf::left_coaction_on_amb() const {
  return corestrict(regular_left_comodule(inc.amb), quotient, projection);
}

BuildQuotientResult build_quotient(const HopfInclusion& inc) {
  Certificate cert("quotient-hopf-algebra",
                   "the quotient of the ambient algebra by the two-sided augmentation ideal of "
                   "the image carries an induced Hopf structure");
  const HopfAlgebra& a = inc.sub;
  const HopfAlgebra& b = inc.amb;
  const int nb = b.rank();

  if (!inc.is_saturated.has_value()) {
    Certificate ci = check_inclusion(inc);
    cert.check("inclusion-verified", ci.passed(), ci.passed() ? "" : ci.first_failure()->name);
    if (!ci.passed()) return {cert, std::nullopt};
  } else {
    cert.check("inclusion-verified", *inc.is_saturated, "cached");
    if (!*inc.is_saturated) return {cert, std::nullopt};
  }
  if (!inc.is_normal.has_value()) check_normal(inc);
  cert.check("normality-verified", *inc.is_normal,
             *inc.is_normal ? "" : "the inclusion is not normal");
  if (!*inc.is_normal) return {cert, std::nullopt};

  // A+ = ker eps_A, embedded into B
  ExactMatrix aplus = integer_kernel(a.counit().coeffs.transpose());
  ExactMatrix aplus_in_b = inc.embedding * aplus;

  // ideal generators b_i f(a+) and f(a+) b_i
  const int np = aplus_in_b.cols();
  ExactMatrix left_gens(Z, nb, nb * np);
  ExactMatrix right_gens(Z, nb, nb * np);
  for (int i = 0; i < nb; ++i)
    for (int k = 0; k < np; ++k) {
      left_gens.set_column(i * np + k, b.product(b.basis_element(i), aplus_in_b.column(k)));
      right_gens.set_column(i * np + k, b.product(aplus_in_b.column(k), b.basis_element(i)));
    }
  Lattice ideal(nb, left_gens);
  Lattice ideal_r(nb, right_gens);
  cert.check("two-sided", ideal == ideal_r, "B f(A)+ and f(A)+ B differ as lattices");
  if (!(ideal == ideal_r)) return {cert, std::nullopt};

  QuotientPresentation qp = quotient(nb, ideal);
  bool sat = qp.torsion.empty();
  cert.check("ideal-saturated", sat, sat ? "" : "IdealNotSaturated");
  if (!sat) {
    cert.witness()["torsion_invariants"] = int_vector_to_json(qp.torsion);
    return {cert, std::nullopt};
  }

  // normalize: image of the unit becomes the first quotient basis vector
  const int nc = qp.free_rank();
  ExactMatrix proj = qp.projection;
  ExactMatrix sect = qp.section;
  {
    ExactMatrix ubar = proj * b.unit();
    SnfResult s = snf(ubar, true, false);
    if (!(s.divisors.size() == 1 && s.divisors[0] == 1))
      throw Error("InternalCriterionMismatch", "image of the unit is not primitive");
    proj = s.left * proj;
    sect = sect * inverse_unimodular(s.left);
  }

  // induced structure constants on the quotient basis
  ExactMatrix mult_c(Z, nc, nc * nc);
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      mult_c.set_column(i * nc + j, proj * b.product(sect.column(i), sect.column(j)));
  ExactMatrix pp = kron(proj, proj);
  ExactMatrix comult_c(Z, nc * nc, nc);
  for (int i = 0; i < nc; ++i) comult_c.set_column(i, pp * b.comult_of(sect.column(i)));
  ExactMatrix unit_c = proj * b.unit();
  ExactMatrix counit_c(Z, nc, 1);
  for (int i = 0; i < nc; ++i) counit_c.set(i, 0, b.counit_of(sect.column(i)));
  ExactMatrix s_c(Z, nc, nc);
  for (int i = 0; i < nc; ++i) s_c.set_column(i, proj * b.antipode_of(sect.column(i)));
  HopfAlgebra c(Z, mult_c, unit_c, comult_c, LinearFunctional{counit_c}, s_c);

  Certificate ch = verify_hopf(c);
  cert.check("quotient-hopf-axioms", ch.passed(),
             ch.passed() ? "" : ch.first_failure()->name);

  // the projection is a Hopf algebra map and a retraction of the section
  bool proj_mult = true, proj_comult = true, proj_counit = true, proj_antipode = true;
  for (int i = 0; i < nb && proj_mult; ++i)
    for (int j = 0; j < nb && proj_mult; ++j)
      if (!(proj * b.product(b.basis_element(i), b.basis_element(j)) ==
            c.product(proj * b.basis_element(i), proj * b.basis_element(j))))
        proj_mult = false;
  for (int i = 0; i < nb; ++i) {
    if (!(pp * b.comult_of(b.basis_element(i)) == c.comult_of(proj * b.basis_element(i))))
      proj_comult = false;
    if (b.counit_of(b.basis_element(i)) != c.counit_of(proj * b.basis_element(i)))
      proj_counit = false;
    if (!(proj * b.antipode_of(b.basis_element(i)) == c.antipode_of(proj * b.basis_element(i))))
      proj_antipode = false;
  }
  cert.check("projection-is-algebra-map", proj_mult);
  cert.check("projection-is-coalgebra-map", proj_comult && proj_counit);
  cert.check("projection-intertwines-antipode", proj_antipode);
  cert.check("section-retracts", (proj * sect).is_identity());
  cert.check("kernel-is-ideal", kernel_lattice(proj) == ideal);

  // conormality of the projection: for every v in the ideal both coadjoint
  // tensors sum v_2 (x) S(v_1) v_3 and sum v_2 (x) v_1 S(v_3) lie in I (x) B
  Lattice ideal_tensor_b(nb * nb, kron(ideal.basis(), ExactMatrix::identity(Z, nb)));
  bool conormal = true;
  for (int k = 0; k < ideal.rank() && conormal; ++k) {
    ExactMatrix v = ideal.basis().column(k);
    ExactMatrix d = b.comult_of(v);
    ExactMatrix t1(Z, nb * nb, 1), t2(Z, nb * nb, 1);
    for (int xy = 0; xy < nb * nb; ++xy) {
      const Rat& cxy = d.at(xy, 0);
      if (cxy == 0) continue;
      int v1 = xy / nb, rest = xy % nb;
      ExactMatrix d2 = b.comult_of(b.basis_element(rest));
      for (int zw = 0; zw < nb * nb; ++zw) {
        const Rat& czw = d2.at(zw, 0);
        if (czw == 0) continue;
        int v2 = zw / nb, v3 = zw % nb;
        Rat cc = cxy * czw;
        ExactMatrix m1 = b.product(b.antipode_of(b.basis_element(v1)), b.basis_element(v3));
        ExactMatrix m2 = b.product(b.basis_element(v1), b.antipode_of(b.basis_element(v3)));
        for (int t = 0; t < nb; ++t) {
          if (m1.at(t, 0) != 0) t1.add_at(v2 * nb + t, 0, cc * m1.at(t, 0));
          if (m2.at(t, 0) != 0) t2.add_at(v2 * nb + t, 0, cc * m2.at(t, 0));
        }
      }
    }
    if (!ideal_tensor_b.contains(t1) || !ideal_tensor_b.contains(t2)) conormal = false;
  }
  cert.check("projection-conormal", conormal);

  if (!cert.passed()) return {cert, std::nullopt};
  QuotientHopf q{inc, ideal, c, proj, sect};
  return {cert, q};
}

Certificate coinvariant_recovery(const QuotientHopf& q) {
  Certificate cert("coinvariant-recovery",
                   "coinvariants of the ambient algebra along the quotient recover the "
                   "subalgebra, and the correspondence round-trips");
  const HopfAlgebra& b = q.inc.amb;
  Lattice image = q.inc.image();
  Lattice right_co = coinvariants(q.right_coaction_on_amb());
  Lattice left_co = coinvariants(q.left_coaction_on_amb());
  cert.check("right-coinvariants-recover-subalgebra", right_co == image);
  cert.check("left-coinvariants-recover-subalgebra", left_co == image);
  cert.check("left-and-right-agree", left_co == right_co);

  // round trip on the ideal: rebuild B (recovered)+ and compare
  Lattice eps_kernel = kernel_lattice(b.counit().coeffs.transpose());
  Lattice rec_plus = lattice_intersect(right_co, eps_kernel);
  ExactMatrix gens(Fiber::integers(), b.rank(), b.rank() * rec_plus.rank());
  for (int i = 0; i < b.rank(); ++i)
    for (int k = 0; k < rec_plus.rank(); ++k)
      gens.set_column(i * rec_plus.rank() + k,
                      b.product(b.basis_element(i), rec_plus.basis().column(k)));
  cert.check("ideal-round-trip", Lattice(b.rank(), gens) == q.ideal);
  return cert;
}

Certificate gamma_iso(const QuotientHopf& q) {
  Certificate cert("gamma-isomorphism",
                   "b (x) b' -> sum pi(b_1) (x) b_2 b' identifies B (x)_A B with C (x) B");
  const HopfAlgebra& a = q.inc.sub;
  const HopfAlgebra& b = q.inc.amb;
  const HopfAlgebra& c = q.quotient;
  const int nb = b.rank(), na = a.rank(), nc = c.rank();

  // B as right and left A-module through the embedding
  ExactMatrix ract(Z, nb, nb * na), lact(Z, nb, nb * na);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < na; ++j) {
      ract.set_column(i * na + j,
                      b.product(b.basis_element(i), q.inc.embed(a.basis_element(j))));
      lact.set_column(i * na + j,
                      b.product(q.inc.embed(a.basis_element(j)), b.basis_element(i)));
    }
  QuotientPresentation bab =
      tensor_over_algebra(ModuleData::right_module(a, ract), ModuleData::left_module(a, lact));
  cert.witness()["tensor_free_rank"] = bab.free_rank();
  cert.check("tensor-torsion-free", bab.torsion.empty());

  // the raw map on B (x) B
  ExactMatrix raw(Z, nc * nb, nb * nb);
  for (int i = 0; i < nb; ++i) {
    ExactMatrix d = b.comult_of(b.basis_element(i));
    for (int j = 0; j < nb; ++j) {
      int col = i * nb + j;
      for (int xy = 0; xy < nb * nb; ++xy) {
        const Rat& v = d.at(xy, 0);
        if (v == 0) continue;
        int b1 = xy / nb, b2 = xy % nb;
        ExactMatrix pc = q.projection * b.basis_element(b1);
        ExactMatrix bb = b.product(b.basis_element(b2), b.basis_element(j));
        for (int p = 0; p < nc; ++p) {
          if (pc.at(p, 0) == 0) continue;
          Rat s = v * pc.at(p, 0);
          for (int t = 0; t < nb; ++t)
            if (bb.at(t, 0) != 0) raw.add_at(p * nb + t, col, s * bb.at(t, 0));
        }
      }
    }
  }
  bool well_defined = (raw * bab.sublattice.basis()).is_zero();
  cert.check("well-defined-on-relations", well_defined,
             well_defined ? "" : "NotWellDefined");
  if (!well_defined) return cert;

  ExactMatrix induced = raw * bab.section;
  bool square = induced.rows() == induced.cols();
  cert.check("square", square);
  if (!square) return cert;
  Int det = integer_determinant(induced);
  cert.witness()["determinant"] = det.str();
  cert.check("bijective", det == 1 || det == -1,
             det == 1 || det == -1 ? "" : "NotBijective: det = " + det.str());
  return cert;
}

Certificate theta_iso(const QuotientHopf& q) {
  Certificate cert("theta-isomorphism",
                   "a (x) b -> sum f(a) b_1 (x) b_2 identifies A (x) B with B box_C B, with the "
                   "stated inverse");
  const HopfAlgebra& a = q.inc.sub;
  const HopfAlgebra& b = q.inc.amb;
  const int nb = b.rank(), na = a.rank();

  Lattice ct = cotensor(q.right_coaction_on_amb(), q.left_coaction_on_amb());
  cert.witness()["cotensor_rank"] = ct.rank();
  cert.check("rank-agreement", ct.rank() == na * nb);

  ExactMatrix theta(Z, nb * nb, na * nb);
  for (int k = 0; k < na; ++k) {
    ExactMatrix fa = q.inc.embed(a.basis_element(k));
    for (int j = 0; j < nb; ++j) {
      int col = k * nb + j;
      ExactMatrix d = b.comult_of(b.basis_element(j));
      for (int xy = 0; xy < nb * nb; ++xy) {
        const Rat& v = d.at(xy, 0);
        if (v == 0) continue;
        int b1 = xy / nb, b2 = xy % nb;
        ExactMatrix ab1 = b.product(fa, b.basis_element(b1));
        for (int t = 0; t < nb; ++t)
          if (ab1.at(t, 0) != 0) theta.add_at(t * nb + b2, col, v * ab1.at(t, 0));
      }
    }
  }
  bool lands = true;
  for (int col = 0; col < theta.cols() && lands; ++col)
    lands = ct.contains(theta.column(col));
  cert.check("lands-in-cotensor", lands);
  if (!lands) return cert;
  auto coords = solve_integer(ct.basis(), theta);
  bool bij = false;
  Int det = 0;
  if (coords && coords->rows() == coords->cols()) {
    det = integer_determinant(*coords);
    bij = det == 1 || det == -1;
  }
  cert.witness()["determinant"] = det.str();
  cert.check("bijective", bij, bij ? "" : "NotBijective");
  if (!bij) return cert;

  // stated inverse on the cotensor basis: b (x) b' -> sum b S(b'_1) (x) b'_2
  ExactMatrix inv_raw(Z, nb * nb, ct.rank());
  for (int k = 0; k < ct.rank(); ++k) {
    ExactMatrix v = ct.basis().column(k);
    ExactMatrix out(Z, nb * nb, 1);
    for (int t = 0; t < nb * nb; ++t) {
      const Rat& vv = v.at(t, 0);
      if (vv == 0) continue;
      int bi = t / nb, bj = t % nb;
      ExactMatrix d = b.comult_of(b.basis_element(bj));
      for (int xy = 0; xy < nb * nb; ++xy) {
        const Rat& w = d.at(xy, 0);
        if (w == 0) continue;
        int b1 = xy / nb, b2 = xy % nb;
        ExactMatrix bs = b.product(b.basis_element(bi), b.antipode_of(b.basis_element(b1)));
        for (int p = 0; p < nb; ++p)
          if (bs.at(p, 0) != 0) out.add_at(p * nb + b2, 0, vv * w * bs.at(p, 0));
      }
    }
    inv_raw.set_column(k, out);
  }
  // the inverse lands in f(A) (x) B and, composed with theta, is the identity
  ExactMatrix fa_tensor_b = kron(q.inc.embedding, ExactMatrix::identity(Z, nb));
  auto back = solve_integer(fa_tensor_b, inv_raw);
  cert.check("inverse-lands-in-A-tensor-B", back.has_value());
  if (!back) return cert;
  cert.check("inverse-composes-to-identity",
             (*coords * *back).is_identity() && (*back * *coords).is_identity());
  return cert;
}

Certificate f_B_map(const QuotientHopf& q) {
  Certificate cert("integral-element-embedding",
                   "t (x) class(b) -> t b embeds A_eps (x) C into B onto the lattice A_eps B");
  const HopfAlgebra& a = q.inc.sub;
  const HopfAlgebra& b = q.inc.amb;
  const HopfAlgebra& c = q.quotient;
  const int nb = b.rank(), nc = c.rank();

  IntegralElementModule ae = integral_elements(a, Side::right);
  cert.witness()["integral_element_rank"] = ae.rank();
  if (ae.rank() == 0) {
    cert.mark_inapplicable("no nonzero right integral-element in the subalgebra");
    return cert;
  }
  cert.check("integral-element-rank-one", ae.rank() == 1);
  ExactMatrix t = q.inc.embedding * ae.basis;  // nb x rank

  // well-definedness: t annihilates the ideal
  bool kills_ideal = true;
  for (int k = 0; k < q.ideal.rank() && kills_ideal; ++k)
    for (int s = 0; s < t.cols() && kills_ideal; ++s)
      if (!b.product(t.column(s), q.ideal.basis().column(k)).is_zero()) kills_ideal = false;
  cert.check("independent-of-representative", kills_ideal);

  // the map on basis t (x) class_k
  ExactMatrix fb(Z, nb, t.cols() * nc);
  for (int s = 0; s < t.cols(); ++s)
    for (int k = 0; k < nc; ++k)
      fb.set_column(s * nc + k, b.product(t.column(s), q.section.column(k)));

  bool injective = integer_kernel(fb).cols() == 0;
  cert.check("injective", injective, injective ? "" : "NotInjective");

  // image equals the lattice A_eps B
  ExactMatrix gens(Z, nb, t.cols() * nb);
  for (int s = 0; s < t.cols(); ++s)
    for (int j = 0; j < nb; ++j)
      gens.set_column(s * nb + j, b.product(t.column(s), b.basis_element(j)));
  cert.check("image-is-integral-ideal", Lattice(nb, fb) == Lattice(nb, gens));

  // right B-linearity: f_B(t (x) class(c) b) = f_B(t (x) class(c)) b
  bool linear = true;
  for (int k = 0; k < nc && linear; ++k)
    for (int j = 0; j < nb && linear; ++j)
      for (int s = 0; s < t.cols() && linear; ++s) {
        ExactMatrix lhs = b.product(
            t.column(s), q.section * c.product(q.projection * q.section.column(k),
                                               q.projection * b.basis_element(j)));
        ExactMatrix rhs =
            b.product(b.product(t.column(s), q.section.column(k)), b.basis_element(j));
        if (!(lhs == rhs)) linear = false;
      }
  cert.check("right-B-linear", linear);

  // right C-colinearity: rho_B f_B = (f_B (x) id) (id (x) Delta_C)
  bool colinear = true;
  ComoduleData rho = q.right_coaction_on_amb();
  for (int k = 0; k < nc && colinear; ++k)
    for (int s = 0; s < t.cols() && colinear; ++s) {
      ExactMatrix lhs = rho.coact(fb.column(s * nc + k));  // in B (x) C
      ExactMatrix d = c.comult_of(c.basis_element(k));
      ExactMatrix rhs(Z, nb * nc, 1);
      for (int xy = 0; xy < nc * nc; ++xy) {
        const Rat& v = d.at(xy, 0);
        if (v == 0) continue;
        int c1 = xy / nc, c2 = xy % nc;
        ExactMatrix img = fb.column(s * nc + c1);
        for (int p = 0; p < nb; ++p)
          if (img.at(p, 0) != 0) rhs.add_at(p * nc + c2, 0, v * img.at(p, 0));
      }
      if (!(lhs == rhs)) colinear = false;
    }
  cert.check("right-C-colinear", colinear, colinear ? "" : "NotColinear");
  return cert;
}

IntegralTransfer integral_transfer(const QuotientHopf& q) {
  Certificate cert("integral-transfer",
                   "a right integral on the ambient algebra induces a nonzero right integral "
                   "on the quotient through a left integral-element of the subalgebra");
  const HopfAlgebra& a = q.inc.sub;
  const HopfAlgebra& b = q.inc.amb;
  const HopfAlgebra& c = q.quotient;
  const int nb = b.rank(), nc = c.rank();

  IntegralModule phis = integral_functionals(b, Side::right);
  IntegralElementModule ts = integral_elements(a, Side::left);
  if (phis.rank() == 0 || ts.rank() == 0) {
    cert.mark_inapplicable("missing a nonzero integral or integral-element");
    return {cert, std::nullopt};
  }
  LinearFunctional phi{phis.basis.column(0)};
  ExactMatrix t = q.inc.embedding * ts.basis.column(0);

  // phi_t(x) = sum t_1 phi(S(t_2) x)
  ExactMatrix phi_t(Z, nb, nb);
  ExactMatrix dt = b.comult_of(t);
  for (int j = 0; j < nb; ++j) {
    for (int xy = 0; xy < nb * nb; ++xy) {
      const Rat& v = dt.at(xy, 0);
      if (v == 0) continue;
      int t1 = xy / nb, t2 = xy % nb;
      Rat val =
          phi.evaluate(b.product(b.antipode_of(b.basis_element(t2)), b.basis_element(j)));
      if (val != 0) phi_t.add_at(t1, j, v * val);
    }
  }
  // A-linearity phi_t(x f(a)) = phi_t(x) f(a), and the image lies in f(A)
  bool linear = true;
  for (int j = 0; j < nb && linear; ++j)
    for (int k = 0; k < a.rank() && linear; ++k) {
      ExactMatrix xa = b.product(b.basis_element(j), q.inc.embed(a.basis_element(k)));
      ExactMatrix lhs = phi_t * xa;
      ExactMatrix rhs = b.product(phi_t * b.basis_element(j), q.inc.embed(a.basis_element(k)));
      if (!(lhs == rhs)) linear = false;
    }
  if (!cert.check("A-linear", linear, linear ? "" : "LinearityFailure")) return {cert, std::nullopt};
  bool in_image = true;
  Lattice image = q.inc.image();
  for (int j = 0; j < nb && in_image; ++j)
    if (!image.contains(phi_t.column(j))) in_image = false;
  cert.check("lands-in-subalgebra", in_image);

  // psi(class(b)) = phi(S(t) b), computed through the section
  ExactMatrix st = b.antipode_of(t);
  ExactMatrix psi(Z, nc, 1);
  for (int k = 0; k < nc; ++k)
    psi.set(k, 0, phi.evaluate(b.product(st, q.section.column(k))));
  LinearFunctional psi_f{psi};

  // psi pi = phi(S(t) -): well-defined independently of the section
  bool well_defined = true;
  for (int j = 0; j < nb && well_defined; ++j) {
    Rat via_pi = psi_f.evaluate(q.projection * b.basis_element(j));
    Rat direct = phi.evaluate(b.product(st, b.basis_element(j)));
    if (via_pi != direct) well_defined = false;
  }
  cert.check("factors-through-quotient", well_defined);

  // psi is a nonzero right integral on C
  bool nonzero = !psi.is_zero();
  cert.check("nonzero", nonzero);
  Lattice ir_c(nc, integral_functionals(c, Side::right).basis);
  cert.check("right-integral-on-quotient", ir_c.contains(psi));
  cert.witness()["psi"] = matrix_to_json(psi);
  return {cert, cert.passed() ? std::optional<LinearFunctional>(psi_f) : std::nullopt};
}

}  // namespace hopfz
