#include "hopfz/hopf.hpp"

namespace hopfz {

Rat LinearFunctional::evaluate(const ExactMatrix& x) const {
  if (x.rows() != coeffs.rows() || x.cols() != 1)
    throw Error("DimensionMismatch", "functional evaluation");
  const Fiber& f = coeffs.fiber();
  Rat acc(0);
  for (int i = 0; i < coeffs.rows(); ++i) acc = f.add(acc, f.mul(coeffs.at(i, 0), x.at(i, 0)));
  return acc;
}

HopfAlgebra::HopfAlgebra(Fiber fiber, ExactMatrix mult, ExactMatrix unit, ExactMatrix comult,
                         LinearFunctional counit, std::optional<ExactMatrix> antipode,
                         std::vector<std::string> basis_names)
    : fiber_(std::move(fiber)),
      rank_(unit.rows()),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      basis_names_(std::move(basis_names)) {
  const int n = rank_;
  if (unit_.cols() != 1) throw Error("DimensionMismatch", "unit must be a column vector");
  if (mult_.rows() != n || mult_.cols() != n * n)
    throw Error("DimensionMismatch", "mult tensor must be n x n^2");
  if (comult_.rows() != n * n || comult_.cols() != n)
    throw Error("DimensionMismatch", "comult tensor must be n^2 x n");
  if (counit_.coeffs.rows() != n || counit_.coeffs.cols() != 1)
    throw Error("DimensionMismatch", "counit must have n coefficients");
  if (antipode_ && (antipode_->rows() != n || antipode_->cols() != n))
    throw Error("DimensionMismatch", "antipode must be n x n");
  if (!basis_names_.empty() && static_cast<int>(basis_names_.size()) != n)
    throw Error("DimensionMismatch", "basis names vs rank");
  for (const ExactMatrix* m : {&mult_, &unit_, &comult_, &counit_.coeffs})
    if (m->fiber() != fiber_) throw Error("FiberMismatch", "structure tensor fiber");
  if (antipode_ && antipode_->fiber() != fiber_) throw Error("FiberMismatch", "antipode fiber");
}

const ExactMatrix& HopfAlgebra::antipode() const {
  if (!antipode_) throw Error("NoAntipode", "antipode not present; run with_antipode first");
  return *antipode_;
}

ExactMatrix HopfAlgebra::basis_element(int i) const {
  ExactMatrix e(fiber_, rank_, 1);
  e.set(i, 0, 1);
  return e;
}

ExactMatrix HopfAlgebra::product(const ExactMatrix& x, const ExactMatrix& y) const {
  if (x.rows() != rank_ || y.rows() != rank_ || x.cols() != 1 || y.cols() != 1)
    throw Error("DimensionMismatch", "product operands");
  ExactMatrix out(fiber_, rank_, 1);
  for (int i = 0; i < rank_; ++i) {
    const Rat& xi = x.at(i, 0);
    if (xi == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      const Rat& yj = y.at(j, 0);
      if (yj == 0) continue;
      Rat c = fiber_.mul(xi, yj);
      int col = i * rank_ + j;
      for (int k = 0; k < rank_; ++k) {
        const Rat& m = mult_.at(k, col);
        if (m != 0) out.add_at(k, 0, fiber_.mul(c, m));
      }
    }
  }
  return out;
}

ExactMatrix HopfAlgebra::comult_of(const ExactMatrix& x) const {
  if (x.rows() != rank_ || x.cols() != 1) throw Error("DimensionMismatch", "comult operand");
  ExactMatrix out(fiber_, rank_ * rank_, 1);
  for (int i = 0; i < rank_; ++i) {
    const Rat& xi = x.at(i, 0);
    if (xi == 0) continue;
    for (int t = 0; t < rank_ * rank_; ++t) {
      const Rat& d = comult_.at(t, i);
      if (d != 0) out.add_at(t, 0, fiber_.mul(xi, d));
    }
  }
  return out;
}

ExactMatrix HopfAlgebra::tensor_square_product(const ExactMatrix& u, const ExactMatrix& v) const {
  const int n = rank_;
  if (u.rows() != n * n || v.rows() != n * n || u.cols() != 1 || v.cols() != 1)
    throw Error("DimensionMismatch", "tensor square product operands");
  ExactMatrix out(fiber_, n * n, 1);
  for (int ab = 0; ab < n * n; ++ab) {
    const Rat& uc = u.at(ab, 0);
    if (uc == 0) continue;
    int a = ab / n, b = ab % n;
    for (int cd = 0; cd < n * n; ++cd) {
      const Rat& vc = v.at(cd, 0);
      if (vc == 0) continue;
      int c = cd / n, d = cd % n;
      Rat s = fiber_.mul(uc, vc);
      int col1 = a * n + c, col2 = b * n + d;
      for (int p = 0; p < n; ++p) {
        const Rat& m1 = mult_.at(p, col1);
        if (m1 == 0) continue;
        Rat sm1 = fiber_.mul(s, m1);
        for (int q = 0; q < n; ++q) {
          const Rat& m2 = mult_.at(q, col2);
          if (m2 != 0) out.add_at(p * n + q, 0, fiber_.mul(sm1, m2));
        }
      }
    }
  }
  return out;
}

ExactMatrix HopfAlgebra::left_mult_matrix(const ExactMatrix& x) const {
  ExactMatrix out(fiber_, rank_, rank_);
  for (int j = 0; j < rank_; ++j) out.set_column(j, product(x, basis_element(j)));
  return out;
}

ExactMatrix HopfAlgebra::right_mult_matrix(const ExactMatrix& x) const {
  ExactMatrix out(fiber_, rank_, rank_);
  for (int j = 0; j < rank_; ++j) out.set_column(j, product(basis_element(j), x));
  return out;
}

namespace {

ExactMatrix contract_left(const HopfAlgebra& h, const ExactMatrix& t) {
  const int n = h.rank();
  ExactMatrix out(h.fiber(), n, 1);
  for (int ab = 0; ab < n * n; ++ab) {
    const Rat& c = t.at(ab, 0);
    if (c == 0) continue;
    int a = ab / n, b = ab % n;
    Rat e = h.counit().coeffs.at(a, 0);
    if (e != 0) out.add_at(b, 0, h.fiber().mul(c, e));
  }
  return out;
}

ExactMatrix contract_right(const HopfAlgebra& h, const ExactMatrix& t) {
  const int n = h.rank();
  ExactMatrix out(h.fiber(), n, 1);
  for (int ab = 0; ab < n * n; ++ab) {
    const Rat& c = t.at(ab, 0);
    if (c == 0) continue;
    int a = ab / n, b = ab % n;
    Rat e = h.counit().coeffs.at(b, 0);
    if (e != 0) out.add_at(a, 0, h.fiber().mul(c, e));
  }
  return out;
}

// m(S (x) id)Delta e_i  or  m(id (x) S)Delta e_i
ExactMatrix antipode_composite(const HopfAlgebra& h, const ExactMatrix& s, int i, bool s_left) {
  const int n = h.rank();
  ExactMatrix out(h.fiber(), n, 1);
  ExactMatrix d = h.comult_of(h.basis_element(i));
  for (int ab = 0; ab < n * n; ++ab) {
    const Rat& c = d.at(ab, 0);
    if (c == 0) continue;
    int a = ab / n, b = ab % n;
    ExactMatrix x = s_left ? h.product(s * h.basis_element(a), h.basis_element(b))
                           : h.product(h.basis_element(a), s * h.basis_element(b));
    for (int k = 0; k < n; ++k)
      if (x.at(k, 0) != 0) out.add_at(k, 0, h.fiber().mul(c, x.at(k, 0)));
  }
  return out;
}

bool bialgebra_checks(const HopfAlgebra& h, Certificate& cert) {
  const int n = h.rank();
  const Fiber& f = h.fiber();
  bool assoc = true, unital = true, coassoc = true, counital = true;
  bool comult_alg = true, counit_alg = true;
  std::string detail_assoc, detail_unital, detail_coassoc, detail_counital, detail_comult,
      detail_counit;

  for (int i = 0; i < n && assoc; ++i)
    for (int j = 0; j < n && assoc; ++j)
      for (int k = 0; k < n && assoc; ++k) {
        ExactMatrix lhs =
            h.product(h.product(h.basis_element(i), h.basis_element(j)), h.basis_element(k));
        ExactMatrix rhs =
            h.product(h.basis_element(i), h.product(h.basis_element(j), h.basis_element(k)));
        if (!(lhs == rhs)) {
          assoc = false;
          detail_assoc = "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                         std::to_string(k) + " != e" + std::to_string(i) + " (e" +
                         std::to_string(j) + " e" + std::to_string(k) + ")";
        }
      }
  for (int i = 0; i < n && unital; ++i) {
    ExactMatrix e = h.basis_element(i);
    if (!(h.product(h.unit(), e) == e && h.product(e, h.unit()) == e)) {
      unital = false;
      detail_unital = "unit fails on e" + std::to_string(i);
    }
  }

  for (int i = 0; i < n && coassoc; ++i) {
    ExactMatrix d = h.comult_of(h.basis_element(i));
    ExactMatrix lhs(f, n * n * n, 1), rhs(f, n * n * n, 1);
    for (int ab = 0; ab < n * n; ++ab) {
      const Rat& c = d.at(ab, 0);
      if (c == 0) continue;
      int a = ab / n, b = ab % n;
      ExactMatrix da = h.comult_of(h.basis_element(a));
      for (int xy = 0; xy < n * n; ++xy)
        if (da.at(xy, 0) != 0) lhs.add_at(xy * n + b, 0, f.mul(c, da.at(xy, 0)));
      ExactMatrix db = h.comult_of(h.basis_element(b));
      for (int xy = 0; xy < n * n; ++xy)
        if (db.at(xy, 0) != 0) rhs.add_at(a * n * n + xy, 0, f.mul(c, db.at(xy, 0)));
    }
    if (!(lhs == rhs)) {
      coassoc = false;
      detail_coassoc = "coassociativity fails on e" + std::to_string(i);
    }
  }
  for (int i = 0; i < n && counital; ++i) {
    ExactMatrix e = h.basis_element(i);
    ExactMatrix d = h.comult_of(e);
    if (!(contract_left(h, d) == e && contract_right(h, d) == e)) {
      counital = false;
      detail_counital = "counit law fails on e" + std::to_string(i);
    }
  }

  for (int i = 0; i < n && comult_alg; ++i)
    for (int j = 0; j < n && comult_alg; ++j) {
      ExactMatrix lhs = h.comult_of(h.product(h.basis_element(i), h.basis_element(j)));
      ExactMatrix rhs = h.tensor_square_product(h.comult_of(h.basis_element(i)),
                                                h.comult_of(h.basis_element(j)));
      if (!(lhs == rhs)) {
        comult_alg = false;
        detail_comult = "comult not multiplicative on (e" + std::to_string(i) + ", e" +
                        std::to_string(j) + ")";
      }
    }
  {
    ExactMatrix d1 = h.comult_of(h.unit());
    ExactMatrix u2(f, n * n, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Rat v = f.mul(h.unit().at(a, 0), h.unit().at(b, 0));
        if (v != 0) u2.set(a * n + b, 0, v);
      }
    if (!(d1 == u2)) {
      comult_alg = false;
      detail_comult = "comult of the unit is not unit (x) unit";
    }
  }
  for (int i = 0; i < n && counit_alg; ++i)
    for (int j = 0; j < n && counit_alg; ++j) {
      Rat lhs = h.counit_of(h.product(h.basis_element(i), h.basis_element(j)));
      Rat rhs = f.mul(h.counit_of(h.basis_element(i)), h.counit_of(h.basis_element(j)));
      if (lhs != rhs) {
        counit_alg = false;
        detail_counit = "counit not multiplicative on (e" + std::to_string(i) + ", e" +
                        std::to_string(j) + ")";
      }
    }
  if (h.counit_of(h.unit()) != 1) {
    counit_alg = false;
    detail_counit = "counit of the unit is not 1";
  }

  cert.check("associativity", assoc, detail_assoc);
  cert.check("unitality", unital, detail_unital);
  cert.check("coassociativity", coassoc, detail_coassoc);
  cert.check("counitality", counital, detail_counital);
  cert.check("comult-is-algebra-map", comult_alg, detail_comult);
  cert.check("counit-is-algebra-map", counit_alg, detail_counit);
  return assoc && unital && coassoc && counital && comult_alg && counit_alg;
}

}  // namespace

Certificate verify_hopf(const HopfAlgebra& h) {
  Certificate cert("hopf-axioms", "structure constants satisfy all Hopf algebra axioms over " +
                                      h.fiber().name());
  bialgebra_checks(h, cert);
  if (!h.has_antipode()) {
    cert.check("antipode-present", false, "no antipode given and none solved");
    return cert;
  }
  const ExactMatrix& s = h.antipode();
  bool ok = true;
  std::string detail;
  for (int i = 0; i < h.rank() && ok; ++i) {
    ExactMatrix target = scale(h.counit_of(h.basis_element(i)), h.unit());
    if (!(antipode_composite(h, s, i, true) == target &&
          antipode_composite(h, s, i, false) == target)) {
      ok = false;
      detail = "antipode axiom fails on e" + std::to_string(i);
    }
  }
  cert.check("antipode-axiom", ok, detail);
  return cert;
}

std::optional<ExactMatrix> solve_antipode(const HopfAlgebra& h) {
  Certificate pre("bialgebra-axioms", "");
  if (!bialgebra_checks(h, pre))
    throw Error("BialgebraInvalid",
               pre.first_failure()->name + ": " + pre.first_failure()->detail);
  const int n = h.rank();
  const Fiber& f = h.fiber();
  // unknowns s(k, a) = coefficient of e_k in S(e_a), flattened as a*n + k;
  // stacked equations: both one-sided antipode identities on every basis
  // element. The convolution inverse is unique, so any solution is the
  // antipode.
  ExactMatrix sys(f, 2 * n * n, n * n);
  ExactMatrix rhs(f, 2 * n * n, 1);
  for (int i = 0; i < n; ++i) {
    ExactMatrix d = h.comult_of(h.basis_element(i));
    for (int ab = 0; ab < n * n; ++ab) {
      const Rat& c = d.at(ab, 0);
      if (c == 0) continue;
      int a = ab / n, b = ab % n;
      for (int k = 0; k < n; ++k) {
        int colL = a * n + k;
        int colR = b * n + k;
        ExactMatrix kb = h.product(h.basis_element(k), h.basis_element(b));
        ExactMatrix ak = h.product(h.basis_element(a), h.basis_element(k));
        for (int r = 0; r < n; ++r) {
          if (kb.at(r, 0) != 0) sys.add_at(i * n + r, colL, f.mul(c, kb.at(r, 0)));
          if (ak.at(r, 0) != 0) sys.add_at(n * n + i * n + r, colR, f.mul(c, ak.at(r, 0)));
        }
      }
    }
    Rat eps = h.counit_of(h.basis_element(i));
    for (int r = 0; r < n; ++r) {
      Rat v = f.mul(eps, h.unit().at(r, 0));
      rhs.set(i * n + r, 0, v);
      rhs.set(n * n + i * n + r, 0, v);
    }
  }
  std::optional<ExactMatrix> sol =
      f.is_integers() ? solve_integer(sys, rhs) : field_solve(sys, rhs);
  if (!sol) return std::nullopt;
  ExactMatrix s(f, n, n);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) s.set(k, a, sol->at(a * n + k, 0));
  return s;
}

HopfAlgebra with_antipode(const HopfAlgebra& h) {
  if (h.has_antipode()) {
    Certificate cert = verify_hopf(h);
    if (!cert.passed())
      throw Error("AxiomFailure",
                 cert.first_failure()->name + ": " + cert.first_failure()->detail);
    return h;
  }
  auto s = solve_antipode(h);
  if (!s) throw Error("NoAntipode", "the convolution inverse of the identity does not exist");
  HopfAlgebra out(h.fiber(), h.mult(), h.unit(), h.comult(), h.counit(), *s, h.basis_names());
  Certificate cert = verify_hopf(out);
  if (!cert.passed())
    throw Error("AxiomFailure", cert.first_failure()->name + ": " + cert.first_failure()->detail);
  return out;
}

HopfAlgebra base_change(const HopfAlgebra& h, const Fiber& k) {
  if (!h.fiber().is_integers())
    throw Error("FiberMismatch", "base change starts from an integral structure");
  std::optional<ExactMatrix> s;
  if (h.has_antipode()) s = to_fiber(h.antipode(), k);
  return HopfAlgebra(k, to_fiber(h.mult(), k), to_fiber(h.unit(), k), to_fiber(h.comult(), k),
                     LinearFunctional{to_fiber(h.counit().coeffs, k)}, s, h.basis_names());
}

HopfAlgebra dual(const HopfAlgebra& h) {
  ExactMatrix dmult = h.comult().transpose();
  ExactMatrix dcomult = h.mult().transpose();
  ExactMatrix dunit = h.counit().coeffs;
  LinearFunctional dcounit{h.unit()};
  std::optional<ExactMatrix> ds;
  if (h.has_antipode()) ds = h.antipode().transpose();
  return HopfAlgebra(h.fiber(), dmult, dunit, dcomult, dcounit, ds);
}

namespace {

// The antipode of the (co)opposite is the inverse of S; omitted when S is
// not invertible over the fiber.
std::optional<ExactMatrix> inverse_antipode(const HopfAlgebra& h) {
  if (!h.has_antipode()) return std::nullopt;
  const ExactMatrix& s = h.antipode();
  if (h.fiber().is_integers()) {
    if (!is_unimodular(s)) return std::nullopt;
    return inverse_unimodular(s);
  }
  return field_inverse(s);
}

}  // namespace

HopfAlgebra opposite(const HopfAlgebra& h) {
  const int n = h.rank();
  ExactMatrix m(h.fiber(), n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m.set(k, i * n + j, h.mult().at(k, j * n + i));
  return HopfAlgebra(h.fiber(), m, h.unit(), h.comult(), h.counit(), inverse_antipode(h),
                     h.basis_names());
}

HopfAlgebra coopposite(const HopfAlgebra& h) {
  const int n = h.rank();
  ExactMatrix d(h.fiber(), n * n, n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) d.set(a * n + b, i, h.comult().at(b * n + a, i));
  return HopfAlgebra(h.fiber(), h.mult(), h.unit(), d, h.counit(), inverse_antipode(h),
                     h.basis_names());
}

LinearFunctional convolution(const LinearFunctional& f, const LinearFunctional& g,
                             const HopfAlgebra& h) {
  const int n = h.rank();
  const Fiber& fib = h.fiber();
  ExactMatrix out(fib, n, 1);
  for (int x = 0; x < n; ++x) {
    Rat acc(0);
    ExactMatrix d = h.comult_of(h.basis_element(x));
    for (int ab = 0; ab < n * n; ++ab) {
      const Rat& c = d.at(ab, 0);
      if (c == 0) continue;
      int a = ab / n, b = ab % n;
      acc = fib.add(acc, fib.mul(c, fib.mul(f.coeffs.at(a, 0), g.coeffs.at(b, 0))));
    }
    out.set(x, 0, acc);
  }
  return LinearFunctional{out};
}

LinearFunctional counit_functional(const HopfAlgebra& h) { return h.counit(); }

}  // namespace hopfz
