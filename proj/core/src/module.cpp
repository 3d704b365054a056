#include "hopfz/module.hpp"

namespace hopfz {

ModuleData ModuleData::right_module(HopfAlgebra a, ExactMatrix action) {
  const int n = a.rank();
  if (action.cols() % n != 0 || action.rows() * n != action.cols())
    throw Error("DimensionMismatch", "action tensor must be m x (m n)");
  return ModuleData{std::move(a), Side::right, action.rows(), std::move(action)};
}

ModuleData ModuleData::left_module(HopfAlgebra a, ExactMatrix action) {
  ModuleData m = right_module(std::move(a), std::move(action));
  m.side = Side::left;
  return m;
}

HopfAlgebra ModuleData::stored_algebra() const {
  return side == Side::right ? algebra : opposite(algebra);
}

ExactMatrix ModuleData::act(const ExactMatrix& m, const ExactMatrix& a) const {
  const int n = algebra.rank();
  if (m.rows() != rank || a.rows() != n || m.cols() != 1 || a.cols() != 1)
    throw Error("DimensionMismatch", "module action operands");
  const Fiber& f = action.fiber();
  ExactMatrix out(f, rank, 1);
  for (int i = 0; i < rank; ++i) {
    const Rat& mi = m.at(i, 0);
    if (mi == 0) continue;
    for (int j = 0; j < n; ++j) {
      const Rat& aj = a.at(j, 0);
      if (aj == 0) continue;
      Rat c = f.mul(mi, aj);
      int col = i * n + j;
      for (int k = 0; k < rank; ++k) {
        const Rat& v = action.at(k, col);
        if (v != 0) out.add_at(k, 0, f.mul(c, v));
      }
    }
  }
  return out;
}

ExactMatrix ModuleData::action_matrix(const ExactMatrix& a) const {
  const Fiber& f = action.fiber();
  ExactMatrix out(f, rank, rank);
  for (int i = 0; i < rank; ++i) {
    ExactMatrix e(f, rank, 1);
    e.set(i, 0, 1);
    out.set_column(i, act(e, a));
  }
  return out;
}

Certificate check_module(const ModuleData& m) {
  Certificate cert("module-axioms", "action is associative and unital over " +
                                        m.action.fiber().name());
  HopfAlgebra alg = m.stored_algebra();
  const int n = alg.rank();
  const Fiber& f = m.action.fiber();
  bool assoc = true, unital = true;
  std::string da, du;
  for (int i = 0; i < m.rank && assoc; ++i) {
    ExactMatrix e(f, m.rank, 1);
    e.set(i, 0, 1);
    for (int j = 0; j < n && assoc; ++j)
      for (int k = 0; k < n && assoc; ++k) {
        ExactMatrix lhs = m.act(m.act(e, alg.basis_element(j)), alg.basis_element(k));
        ExactMatrix rhs = m.act(e, alg.product(alg.basis_element(j), alg.basis_element(k)));
        if (!(lhs == rhs)) {
          assoc = false;
          da = "associativity fails on (m" + std::to_string(i) + ", a" + std::to_string(j) +
               ", a" + std::to_string(k) + ")";
        }
      }
    if (assoc && !(m.act(e, alg.unit()) == e)) {
      unital = false;
      du = "unit acts nontrivially on m" + std::to_string(i);
    }
  }
  cert.check("action-associativity", assoc, da);
  cert.check("action-unitality", unital, du);
  return cert;
}

ComoduleData ComoduleData::right_comodule(HopfAlgebra c, ExactMatrix coaction) {
  const int n = c.rank();
  if (coaction.rows() % n != 0 || coaction.cols() * n != coaction.rows())
    throw Error("DimensionMismatch", "coaction matrix must be (m n) x m");
  return ComoduleData{std::move(c), Side::right, coaction.cols(), std::move(coaction)};
}

ComoduleData ComoduleData::left_comodule(HopfAlgebra c, ExactMatrix coaction) {
  ComoduleData m = right_comodule(std::move(c), std::move(coaction));
  m.side = Side::left;
  return m;
}

HopfAlgebra ComoduleData::stored_coalgebra() const {
  return side == Side::right ? coalgebra : coopposite(coalgebra);
}

ExactMatrix ComoduleData::coact(const ExactMatrix& m) const {
  if (m.rows() != rank || m.cols() != 1)
    throw Error("DimensionMismatch", "coaction operand");
  return coaction * m;
}

Certificate check_comodule(const ComoduleData& m) {
  Certificate cert("comodule-axioms", "coaction is coassociative and counital over " +
                                          m.coaction.fiber().name());
  HopfAlgebra c = m.stored_coalgebra();
  const int n = c.rank();
  const Fiber& f = m.coaction.fiber();
  bool coassoc = true, counital = true;
  std::string dc, du;
  for (int i = 0; i < m.rank && coassoc && counital; ++i) {
    ExactMatrix e(f, m.rank, 1);
    e.set(i, 0, 1);
    ExactMatrix rho = m.coact(e);  // indices q*n + a
    // (rho (x) id) rho  vs  (id (x) Delta) rho inside M (x) C (x) C
    ExactMatrix lhs(f, m.rank * n * n, 1), rhs(f, m.rank * n * n, 1);
    for (int t = 0; t < rho.rows(); ++t) {
      const Rat& v = rho.at(t, 0);
      if (v == 0) continue;
      int q = t / n, a = t % n;
      ExactMatrix eq(f, m.rank, 1);
      eq.set(q, 0, 1);
      ExactMatrix rq = m.coact(eq);
      for (int t2 = 0; t2 < rq.rows(); ++t2) {
        const Rat& w = rq.at(t2, 0);
        if (w == 0) continue;
        int q2 = t2 / n, b = t2 % n;
        lhs.add_at((q2 * n + b) * n + a, 0, f.mul(v, w));
      }
      ExactMatrix da = c.comult_of(c.basis_element(a));
      for (int xy = 0; xy < n * n; ++xy) {
        const Rat& w = da.at(xy, 0);
        if (w != 0) rhs.add_at(q * n * n + xy, 0, f.mul(v, w));
      }
    }
    if (!(lhs == rhs)) {
      coassoc = false;
      dc = "coassociativity fails on m" + std::to_string(i);
    }
    // (id (x) counit) rho = id
    ExactMatrix back(f, m.rank, 1);
    for (int t = 0; t < rho.rows(); ++t) {
      const Rat& v = rho.at(t, 0);
      if (v == 0) continue;
      int q = t / n, a = t % n;
      Rat eps = c.counit().coeffs.at(a, 0);
      if (eps != 0) back.add_at(q, 0, f.mul(v, eps));
    }
    if (!(back == e)) {
      counital = false;
      du = "counit law fails on m" + std::to_string(i);
    }
  }
  cert.check("coassociativity", coassoc, dc);
  cert.check("counit-law", counital, du);
  return cert;
}

ModuleData regular_right_module(const HopfAlgebra& h) {
  return ModuleData::right_module(h, h.mult());
}

ModuleData regular_left_module(const HopfAlgebra& h) {
  // stored column i*n+j = a_j . m_i
  const int n = h.rank();
  ExactMatrix act(h.fiber(), n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      act.set_column(i * n + j, h.product(h.basis_element(j), h.basis_element(i)));
  return ModuleData::left_module(h, act);
}

ComoduleData regular_right_comodule(const HopfAlgebra& h) {
  return ComoduleData::right_comodule(h, h.comult());
}

ComoduleData regular_left_comodule(const HopfAlgebra& h) {
  // left coaction Delta stored with the comodule factor first
  const int n = h.rank();
  ExactMatrix co(h.fiber(), n * n, n);
  for (int i = 0; i < n; ++i) {
    ExactMatrix d = h.comult_of(h.basis_element(i));
    for (int ab = 0; ab < n * n; ++ab) {
      const Rat& v = d.at(ab, 0);
      if (v == 0) continue;
      int a = ab / n, b = ab % n;
      co.add_at(b * n + a, i, v);  // m-part b, coalgebra part a
    }
  }
  return ComoduleData::left_comodule(h, co);
}

ComoduleData trivial_comodule(const HopfAlgebra& h, int rank, Side side) {
  const int n = h.rank();
  ExactMatrix co(h.fiber(), rank * n, rank);
  for (int i = 0; i < rank; ++i)
    for (int a = 0; a < n; ++a) {
      const Rat& u = h.unit().at(a, 0);
      if (u != 0) co.set(i * n + a, i, u);
    }
  return side == Side::right ? ComoduleData::right_comodule(h, co)
                             : ComoduleData::left_comodule(h, co);
}

ComoduleData corestrict(const ComoduleData& m, const HopfAlgebra& y, const ExactMatrix& phi) {
  const int nx = m.coalgebra.rank(), ny = y.rank();
  if (phi.rows() != ny || phi.cols() != nx)
    throw Error("DimensionMismatch", "coalgebra map shape");
  ExactMatrix co(m.coaction.fiber(), m.rank * ny, m.rank);
  for (int i = 0; i < m.rank; ++i) {
    for (int t = 0; t < m.rank * nx; ++t) {
      const Rat& v = m.coaction.at(t, i);
      if (v == 0) continue;
      int q = t / nx, a = t % nx;
      for (int b = 0; b < ny; ++b) {
        const Rat& p = phi.at(b, a);
        if (p != 0) co.add_at(q * ny + b, i, m.coaction.fiber().mul(v, p));
      }
    }
  }
  return m.side == Side::right ? ComoduleData::right_comodule(y, co)
                               : ComoduleData::left_comodule(y, co);
}

Certificate check_hopf_module(const HopfModuleData& m) {
  Certificate cert("hopf-module-compatibility",
                   "coaction of the comodule part is linear over the module action through the "
                   "structure map");
  if (m.module_part.rank != m.comodule_part.rank)
    throw Error("DimensionMismatch", "module and comodule parts have different ranks");
  if (m.module_part.side != Side::right || m.comodule_part.side != Side::right)
    throw Error("DimensionMismatch", "hopf modules are right-right here");
  const HopfAlgebra& x = m.module_part.algebra;
  const HopfAlgebra& y = m.comodule_part.coalgebra;
  const int nx = x.rank(), ny = y.rank(), mr = m.module_part.rank;
  if (m.structure_map.rows() != ny || m.structure_map.cols() != nx)
    throw Error("DimensionMismatch", "structure map shape");
  const Fiber& f = m.module_part.action.fiber();

  Certificate mod = check_module(m.module_part);
  Certificate com = check_comodule(m.comodule_part);
  cert.check("module-part", mod.passed(),
             mod.passed() ? "" : mod.first_failure()->detail);
  cert.check("comodule-part", com.passed(),
             com.passed() ? "" : com.first_failure()->detail);

  bool compat = true;
  std::string detail;
  for (int i = 0; i < mr && compat; ++i) {
    ExactMatrix e(f, mr, 1);
    e.set(i, 0, 1);
    ExactMatrix rho_e = m.comodule_part.coact(e);
    for (int j = 0; j < nx && compat; ++j) {
      ExactMatrix lhs = m.comodule_part.coact(m.module_part.act(e, x.basis_element(j)));
      // rhs: sum over rho(e) terms (q, c) and comult of a_j terms (a1, a2):
      //   (m_q <| a1) (x) (c * phi(a2))
      ExactMatrix rhs(f, mr * ny, 1);
      ExactMatrix dj = x.comult_of(x.basis_element(j));
      for (int t = 0; t < mr * ny; ++t) {
        const Rat& v = rho_e.at(t, 0);
        if (v == 0) continue;
        int q = t / ny, c = t % ny;
        ExactMatrix eq(f, mr, 1);
        eq.set(q, 0, 1);
        for (int ab = 0; ab < nx * nx; ++ab) {
          const Rat& w = dj.at(ab, 0);
          if (w == 0) continue;
          int a1 = ab / nx, a2 = ab % nx;
          ExactMatrix ma = m.module_part.act(eq, x.basis_element(a1));
          ExactMatrix yc = y.product(y.basis_element(c), m.structure_map * x.basis_element(a2));
          Rat s = f.mul(v, w);
          for (int p = 0; p < mr; ++p) {
            const Rat& mp = ma.at(p, 0);
            if (mp == 0) continue;
            Rat smp = f.mul(s, mp);
            for (int d = 0; d < ny; ++d) {
              const Rat& yd = yc.at(d, 0);
              if (yd != 0) rhs.add_at(p * ny + d, 0, f.mul(smp, yd));
            }
          }
        }
      }
      if (!(lhs == rhs)) {
        compat = false;
        detail = "compatibility fails on basis pair (m" + std::to_string(i) + ", a" +
                 std::to_string(j) + ")";
      }
    }
  }
  cert.check("compatibility", compat, detail);
  return cert;
}

namespace {

// equalizer matrix of rho_M (x) id - id (x) lambda_N from M (x) N to
// M (x) C (x) N; column index i*mN + j, row index (q*nC + c)*mN + p
ExactMatrix cotensor_map(const ComoduleData& m, const ComoduleData& n) {
  if (m.side != Side::right || n.side != Side::left)
    throw Error("CoalgebraMismatch", "cotensor takes a right and a left comodule");
  if (!(m.coalgebra == n.coalgebra))
    throw Error("CoalgebraMismatch", "cotensor factors over different coalgebras");
  const int nc = m.coalgebra.rank();
  const int mm = m.rank, mn = n.rank;
  const Fiber& f = m.coaction.fiber();
  ExactMatrix t(f, mm * nc * mn, mm * mn);
  for (int i = 0; i < mm; ++i) {
    ExactMatrix ei(f, mm, 1);
    ei.set(i, 0, 1);
    ExactMatrix rho = m.coact(ei);
    for (int j = 0; j < mn; ++j) {
      int col = i * mn + j;
      for (int tq = 0; tq < mm * nc; ++tq) {
        const Rat& v = rho.at(tq, 0);
        if (v == 0) continue;
        int q = tq / nc, c = tq % nc;
        t.add_at((q * nc + c) * mn + j, col, v);
      }
      // lambda_N(n_j) stored swapped: entry (p*nc + c) means c (x) n_p
      for (int tp = 0; tp < mn * nc; ++tp) {
        const Rat& v = n.coaction.at(tp, j);
        if (v == 0) continue;
        int p = tp / nc, c = tp % nc;
        t.add_at((i * nc + c) * mn + p, col, f.neg(v));
      }
    }
  }
  return t;
}

}  // namespace

Lattice cotensor(const ComoduleData& m, const ComoduleData& n) {
  ExactMatrix t = cotensor_map(m, n);
  if (!t.fiber().is_integers()) throw Error("FiberMismatch", "cotensor lattice needs fiber Z");
  return kernel_lattice(t);
}

ExactMatrix cotensor_basis(const ComoduleData& m, const ComoduleData& n) {
  ExactMatrix t = cotensor_map(m, n);
  return t.fiber().is_integers() ? integer_kernel(t) : field_kernel(t);
}

namespace {

ExactMatrix coinvariants_map(const ComoduleData& m) {
  const int nc = m.coalgebra.rank();
  const Fiber& f = m.coaction.fiber();
  ExactMatrix t = m.coaction;
  for (int i = 0; i < m.rank; ++i)
    for (int a = 0; a < nc; ++a) {
      const Rat& u = m.coalgebra.unit().at(a, 0);
      if (u != 0) t.add_at(i * nc + a, i, f.neg(u));
    }
  return t;
}

}  // namespace

Lattice coinvariants(const ComoduleData& m) {
  ExactMatrix t = coinvariants_map(m);
  if (!t.fiber().is_integers())
    throw Error("FiberMismatch", "coinvariant lattice needs fiber Z");
  return kernel_lattice(t);
}

ExactMatrix coinvariants_basis(const ComoduleData& m) {
  ExactMatrix t = coinvariants_map(m);
  return t.fiber().is_integers() ? integer_kernel(t) : field_kernel(t);
}

QuotientPresentation tensor_over_algebra(const ModuleData& p, const ModuleData& m) {
  if (p.side != Side::right || m.side != Side::left)
    throw Error("AlgebraMismatch", "tensor_over_algebra takes a right and a left module");
  if (!(p.algebra == m.algebra))
    throw Error("AlgebraMismatch", "tensor factors over different algebras");
  if (!p.action.fiber().is_integers())
    throw Error("FiberMismatch", "tensor_over_algebra presents a Z-module");
  const HopfAlgebra& a = p.algebra;
  const int na = a.rank(), mp = p.rank, mm = m.rank;
  const Fiber& f = p.action.fiber();
  ExactMatrix rel(f, mp * mm, mp * mm * na);
  int col = 0;
  for (int i = 0; i < mp; ++i) {
    ExactMatrix ei(f, mp, 1);
    ei.set(i, 0, 1);
    for (int j = 0; j < mm; ++j) {
      ExactMatrix ej(f, mm, 1);
      ej.set(j, 0, 1);
      for (int k = 0; k < na; ++k, ++col) {
        ExactMatrix pa = p.act(ei, a.basis_element(k));
        ExactMatrix am = m.act(ej, a.basis_element(k));
        for (int q = 0; q < mp; ++q)
          if (pa.at(q, 0) != 0) rel.add_at(q * mm + j, col, pa.at(q, 0));
        for (int q = 0; q < mm; ++q)
          if (am.at(q, 0) != 0) rel.add_at(i * mm + q, col, f.neg(am.at(q, 0)));
      }
    }
  }
  return quotient(mp * mm, Lattice(mp * mm, rel));
}

Lattice comodule_hom(const ComoduleData& m, const ComoduleData& n) {
  if (m.side != Side::right || n.side != Side::right)
    throw Error("CoalgebraMismatch", "comodule_hom takes right comodules");
  if (!(m.coalgebra == n.coalgebra))
    throw Error("CoalgebraMismatch", "comodule_hom over different coalgebras");
  if (!m.coaction.fiber().is_integers())
    throw Error("FiberMismatch", "comodule_hom lattice needs fiber Z");
  const int nc = m.coalgebra.rank(), mm = m.rank, mn = n.rank;
  const Fiber& f = m.coaction.fiber();
  // unknowns g(q, j) flattened q*mm + j; equations: for each j the identity
  // rho_N(g(m_j)) = (g (x) id) rho_M(m_j) in N (x) C
  ExactMatrix sys(f, mm * mn * nc, mn * mm);
  for (int j = 0; j < mm; ++j) {
    ExactMatrix ej(f, mm, 1);
    ej.set(j, 0, 1);
    ExactMatrix rho_j = m.coact(ej);
    for (int q = 0; q < mn; ++q) {
      int var = q * mm + j;
      // lhs: rho_N applied to e_q scaled by g(q, j)
      for (int t = 0; t < mn * nc; ++t) {
        const Rat& v = n.coaction.at(t, q);
        if (v != 0) sys.add_at(j * mn * nc + t, var, v);
      }
    }
    for (int t = 0; t < mm * nc; ++t) {
      const Rat& v = rho_j.at(t, 0);
      if (v == 0) continue;
      int p = t / nc, c = t % nc;
      for (int q = 0; q < mn; ++q)
        sys.add_at(j * mn * nc + q * nc + c, q * mm + p, f.neg(v));
    }
  }
  return kernel_lattice(sys);
}

HopfModuleData m_tensor_c_hopf_module(const HopfAlgebra& b, const HopfAlgebra& c,
                                      const ExactMatrix& pi, const ModuleData& m) {
  // M (x) C with B acting diagonally (m (x) c) b = sum m b_1 (x) c pi(b_2)
  // and C coacting on the right factor.
  if (m.side != Side::right || !(m.algebra == b))
    throw Error("AlgebraMismatch", "m_tensor_c needs a right B-module");
  const int nb = b.rank(), nc = c.rank(), mr = m.rank;
  const Fiber& f = m.action.fiber();
  ExactMatrix act(f, mr * nc, mr * nc * nb);
  ExactMatrix coact(f, mr * nc * nc, mr * nc);
  for (int i = 0; i < mr; ++i) {
    ExactMatrix ei(f, mr, 1);
    ei.set(i, 0, 1);
    for (int ci = 0; ci < nc; ++ci) {
      int base = i * nc + ci;
      for (int j = 0; j < nb; ++j) {
        int col = base * nb + j;
        ExactMatrix dj = b.comult_of(b.basis_element(j));
        for (int ab = 0; ab < nb * nb; ++ab) {
          const Rat& w = dj.at(ab, 0);
          if (w == 0) continue;
          int b1 = ab / nb, b2 = ab % nb;
          ExactMatrix mb = m.act(ei, b.basis_element(b1));
          ExactMatrix cb = c.product(c.basis_element(ci), pi * b.basis_element(b2));
          for (int p = 0; p < mr; ++p) {
            if (mb.at(p, 0) == 0) continue;
            Rat s = f.mul(w, mb.at(p, 0));
            for (int d = 0; d < nc; ++d)
              if (cb.at(d, 0) != 0) act.add_at(p * nc + d, col, f.mul(s, cb.at(d, 0)));
          }
        }
      }
      ExactMatrix dc = c.comult_of(c.basis_element(ci));
      for (int xy = 0; xy < nc * nc; ++xy) {
        const Rat& w = dc.at(xy, 0);
        if (w == 0) continue;
        int c1 = xy / nc, c2 = xy % nc;
        coact.add_at((i * nc + c1) * nc + c2, base, w);
      }
    }
  }
  return HopfModuleData{ModuleData::right_module(b, act),
                        ComoduleData::right_comodule(c, coact), pi};
}

HopfModuleData c_tensor_b_hopf_module(const HopfAlgebra& b, const HopfAlgebra& c,
                                      const ExactMatrix& pi) {
  // C (x) B with B acting on the right factor and C coacting diagonally:
  // rho(c (x) b) = sum c_1 (x) b_1 (x) c_2 pi(b_2)
  const int nb = b.rank(), nc = c.rank();
  const Fiber& f = b.mult().fiber();
  const int mr = nc * nb;
  ExactMatrix act(f, mr, mr * nb);
  ExactMatrix coact(f, mr * nc, mr);
  for (int ci = 0; ci < nc; ++ci)
    for (int bi = 0; bi < nb; ++bi) {
      int base = ci * nb + bi;
      for (int j = 0; j < nb; ++j) {
        ExactMatrix prod = b.product(b.basis_element(bi), b.basis_element(j));
        for (int p = 0; p < nb; ++p)
          if (prod.at(p, 0) != 0) act.add_at(ci * nb + p, base * nb + j, prod.at(p, 0));
      }
      ExactMatrix dc = c.comult_of(c.basis_element(ci));
      ExactMatrix db = b.comult_of(b.basis_element(bi));
      for (int xy = 0; xy < nc * nc; ++xy) {
        const Rat& w = dc.at(xy, 0);
        if (w == 0) continue;
        int c1 = xy / nc, c2 = xy % nc;
        for (int ab = 0; ab < nb * nb; ++ab) {
          const Rat& v = db.at(ab, 0);
          if (v == 0) continue;
          int b1 = ab / nb, b2 = ab % nb;
          ExactMatrix cc = c.product(c.basis_element(c2), pi * b.basis_element(b2));
          Rat s = f.mul(w, v);
          for (int d = 0; d < nc; ++d)
            if (cc.at(d, 0) != 0)
              coact.add_at((c1 * nb + b1) * nc + d, base, f.mul(s, cc.at(d, 0)));
        }
      }
    }
  return HopfModuleData{ModuleData::right_module(b, act),
                        ComoduleData::right_comodule(c, coact), pi};
}

ComoduleData tensor_comodule_right_factor(int p_rank, const ComoduleData& m) {
  const int nc = m.coalgebra.rank(), mr = m.rank;
  const Fiber& f = m.coaction.fiber();
  ExactMatrix co(f, p_rank * mr * nc, p_rank * mr);
  for (int p = 0; p < p_rank; ++p)
    for (int i = 0; i < mr; ++i) {
      int col = p * mr + i;
      for (int t = 0; t < mr * nc; ++t) {
        const Rat& v = m.coaction.at(t, i);
        if (v == 0) continue;
        int q = t / nc, cc = t % nc;
        co.add_at((p * mr + q) * nc + cc, col, v);
      }
    }
  return m.side == Side::right ? ComoduleData::right_comodule(m.coalgebra, co)
                               : ComoduleData::left_comodule(m.coalgebra, co);
}

ModuleData tensor_module_left_factor(const ModuleData& p, int m_rank) {
  const int na = p.algebra.rank(), pr = p.rank;
  const Fiber& f = p.action.fiber();
  ExactMatrix act(f, pr * m_rank, pr * m_rank * na);
  for (int i = 0; i < pr; ++i)
    for (int j = 0; j < m_rank; ++j)
      for (int k = 0; k < na; ++k) {
        int col = (i * m_rank + j) * na + k;
        for (int q = 0; q < pr; ++q) {
          const Rat& v = p.action.at(q, i * na + k);
          if (v != 0) act.add_at(q * m_rank + j, col, v);
        }
      }
  ModuleData out{p.algebra, p.side, pr * m_rank, act};
  return out;
}

ComoduleData restrict_comodule(const ComoduleData& ambient, const Lattice& sub) {
  if (sub.ambient_rank() != ambient.rank)
    throw Error("DimensionMismatch", "sublattice vs comodule rank");
  const int nc = ambient.coalgebra.rank(), r = sub.rank();
  const Fiber& f = ambient.coaction.fiber();
  // solve for coordinates of each rho(v_k) in the sublattice basis, one
  // coalgebra slot at a time
  ExactMatrix targets(f, ambient.rank, r * nc);
  for (int k = 0; k < r; ++k) {
    ExactMatrix rho = ambient.coact(sub.basis().column(k));
    for (int t = 0; t < ambient.rank * nc; ++t) {
      const Rat& v = rho.at(t, 0);
      if (v != 0) targets.add_at(t / nc, k * nc + (t % nc), v);
    }
  }
  auto coords = solve_integer(sub.basis(), targets);
  if (!coords) throw Error("NotStable", "coaction does not preserve the sublattice");
  ExactMatrix co(f, r * nc, r);
  for (int k = 0; k < r; ++k)
    for (int q = 0; q < r; ++q)
      for (int c = 0; c < nc; ++c) co.set(q * nc + c, k, coords->at(q, k * nc + c));
  ComoduleData out{ambient.coalgebra, ambient.side, r, co};
  Certificate chk = check_comodule(out);
  if (!chk.passed()) throw Error("NotStable", "restricted coaction fails comodule axioms");
  return out;
}

ModuleData restrict_module(const ModuleData& ambient, const Lattice& sub) {
  if (sub.ambient_rank() != ambient.rank)
    throw Error("DimensionMismatch", "sublattice vs module rank");
  const int na = ambient.algebra.rank(), r = sub.rank();
  const Fiber& f = ambient.action.fiber();
  ExactMatrix targets(f, ambient.rank, r * na);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < na; ++j)
      targets.set_column(k * na + j,
                         ambient.act(sub.basis().column(k), ambient.algebra.basis_element(j)));
  auto coords = solve_integer(sub.basis(), targets);
  if (!coords) throw Error("NotStable", "action does not preserve the sublattice");
  ExactMatrix act(f, r, r * na);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < na; ++j)
      for (int q = 0; q < r; ++q) act.set(q, k * na + j, coords->at(q, k * na + j));
  ModuleData out{ambient.algebra, ambient.side, r, act};
  Certificate chk = check_module(out);
  if (!chk.passed()) throw Error("NotStable", "restricted action fails module axioms");
  return out;
}

ComoduleData comodule_on_quotient(const ComoduleData& ambient, const QuotientPresentation& qp) {
  if (qp.ambient_rank != ambient.rank)
    throw Error("DimensionMismatch", "quotient vs comodule rank");
  const int nc = ambient.coalgebra.rank(), r = qp.free_rank();
  const Fiber& f = ambient.coaction.fiber();
  ExactMatrix proj_c = kron(qp.projection, ExactMatrix::identity(f, nc));
  for (int k = 0; k < qp.sublattice.rank(); ++k) {
    if (!(proj_c * ambient.coact(qp.sublattice.basis().column(k))).is_zero())
      throw Error("NotWellDefined", "coaction does not kill the sublattice");
  }
  ExactMatrix co(f, r * nc, r);
  for (int k = 0; k < r; ++k) co.set_column(k, proj_c * ambient.coact(qp.section.column(k)));
  ComoduleData out{ambient.coalgebra, ambient.side, r, co};
  Certificate chk = check_comodule(out);
  if (!chk.passed()) throw Error("NotWellDefined", "descended coaction fails comodule axioms");
  return out;
}

ModuleData module_on_quotient(const ModuleData& ambient, const QuotientPresentation& qp) {
  if (qp.ambient_rank != ambient.rank)
    throw Error("DimensionMismatch", "quotient vs module rank");
  const int na = ambient.algebra.rank(), r = qp.free_rank();
  const Fiber& f = ambient.action.fiber();
  for (int k = 0; k < qp.sublattice.rank(); ++k)
    for (int j = 0; j < na; ++j)
      if (!(qp.projection * ambient.act(qp.sublattice.basis().column(k),
                                        ambient.algebra.basis_element(j)))
               .is_zero())
        throw Error("NotWellDefined", "action does not preserve the sublattice");
  ExactMatrix act(f, r, r * na);
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < na; ++j)
      act.set_column(k * na + j, qp.projection * ambient.act(qp.section.column(k),
                                                             ambient.algebra.basis_element(j)));
  ModuleData out{ambient.algebra, ambient.side, r, act};
  Certificate chk = check_module(out);
  if (!chk.passed()) throw Error("NotWellDefined", "descended action fails module axioms");
  return out;
}

Certificate twist_iso(const HopfAlgebra& b, const HopfAlgebra& c, const ExactMatrix& pi,
                      const ExactMatrix& s_inverse) {
  Certificate cert("twist-isomorphism",
                   "the twist between the standard Hopf module structures on C (x) B and "
                   "B (x) C composes to the identity both ways");
  const int nb = b.rank(), nc = c.rank();
  const Fiber& f = b.mult().fiber();
  if (!f.is_unit(Rat(integer_determinant(to_fiber(b.antipode(), Fiber::integers())))) &&
      f.is_integers())
    throw Error("AntipodeNotInvertible", "determinant of the antipode is not a unit");

  // t1: C (x) B -> B (x) C, c (x) b -> sum b_1 (x) c pi(b_2)
  ExactMatrix t1(f, nb * nc, nc * nb);
  // t2: B (x) C -> C (x) B, b (x) c -> sum c pi(S^-1(b_2)) (x) b_1
  ExactMatrix t2(f, nc * nb, nb * nc);
  for (int ci = 0; ci < nc; ++ci)
    for (int bi = 0; bi < nb; ++bi) {
      ExactMatrix db = b.comult_of(b.basis_element(bi));
      for (int ab = 0; ab < nb * nb; ++ab) {
        const Rat& v = db.at(ab, 0);
        if (v == 0) continue;
        int b1 = ab / nb, b2 = ab % nb;
        ExactMatrix cc = c.product(c.basis_element(ci), pi * b.basis_element(b2));
        for (int d = 0; d < nc; ++d)
          if (cc.at(d, 0) != 0)
            t1.add_at(b1 * nc + d, ci * nb + bi, f.mul(v, cc.at(d, 0)));
        ExactMatrix cs = c.product(c.basis_element(ci), pi * (s_inverse * b.basis_element(b2)));
        for (int d = 0; d < nc; ++d)
          if (cs.at(d, 0) != 0)
            t2.add_at(d * nb + b1, bi * nc + ci, f.mul(v, cs.at(d, 0)));
      }
    }
  cert.check("round-trip-on-C-tensor-B", (t2 * t1).is_identity());
  cert.check("round-trip-on-B-tensor-C", (t1 * t2).is_identity());

  // the twist is a morphism in the category of right B-modules and right
  // C-comodules between the two standard structures
  HopfModuleData cb = c_tensor_b_hopf_module(b, c, pi);
  HopfModuleData bc = m_tensor_c_hopf_module(b, c, pi, regular_right_module(b));
  bool module_map = true, comodule_map = true;
  for (int j = 0; j < nb && module_map; ++j) {
    ExactMatrix lhs = t1 * cb.module_part.action_matrix(b.basis_element(j));
    ExactMatrix rhs = bc.module_part.action_matrix(b.basis_element(j)) * t1;
    if (!(lhs == rhs)) module_map = false;
  }
  if (!((kron(t1, ExactMatrix::identity(f, nc)) * cb.comodule_part.coaction) ==
        bc.comodule_part.coaction * t1))
    comodule_map = false;
  cert.check("module-map", module_map);
  cert.check("comodule-map", comodule_map);
  return cert;
}

}  // namespace hopfz
