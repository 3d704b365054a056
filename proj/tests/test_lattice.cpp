#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopfz/lattice.hpp"

using namespace hopfz;

namespace {

const Fiber Z = Fiber::integers();

ExactMatrix zmat(const std::vector<std::vector<long long>>& rows) {
  return ExactMatrix::from_rows(Z, rows);
}

// Predicate for the column HNF convention used by hnf(): pivot rows strictly
// increasing, pivots positive, entries right of a pivot in its row zero,
// entries left of a pivot reduced into [0, pivot), zero columns trailing.
bool is_column_hnf(const ExactMatrix& h) {
  int prev_pivot_row = -1;
  bool seen_zero_col = false;
  for (int j = 0; j < h.cols(); ++j) {
    int pr = -1;
    for (int i = 0; i < h.rows(); ++i)
      if (h.at(i, j) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) {
      seen_zero_col = true;
      continue;
    }
    if (seen_zero_col) return false;
    if (pr <= prev_pivot_row) return false;
    prev_pivot_row = pr;
    Rat pivot = h.at(pr, j);
    if (pivot <= 0) return false;
    for (int k = j + 1; k < h.cols(); ++k)
      if (h.at(pr, k) != 0) return false;
    for (int k = 0; k < j; ++k)
      if (h.at(pr, k) < 0 || h.at(pr, k) >= pivot) return false;
  }
  return true;
}

// Brute-force oracle: search products of elementary unimodular column
// operations for the (unique) matrix in HNF shape with the same column span.
std::optional<ExactMatrix> brute_force_hnf_2x2(const ExactMatrix& m) {
  std::vector<ExactMatrix> frontier = {m};
  std::vector<ExactMatrix> seen = {m};
  auto push = [&](const ExactMatrix& x) {
    for (const auto& s : seen)
      if (s == x) return;
    seen.push_back(x);
    frontier.push_back(x);
  };
  for (size_t step = 0; step < seen.size() && seen.size() < 20000; ++step) {
    ExactMatrix cur = seen[step];
    if (is_column_hnf(cur)) return cur;
    // elementary ops: swap columns, negate a column, add +-1 multiple
    ExactMatrix sw = cur.select_columns({1, 0});
    push(sw);
    for (int j = 0; j < 2; ++j) {
      ExactMatrix neg = cur;
      for (int i = 0; i < 2; ++i) neg.set(i, j, -cur.at(i, j));
      push(neg);
      for (int k = 0; k < 2; ++k) {
        if (k == j) continue;
        for (int s : {-1, 1}) {
          ExactMatrix add = cur;
          for (int i = 0; i < 2; ++i) add.set(i, j, cur.at(i, j) + Rat(s) * cur.at(i, k));
          push(add);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("hnf matches the brute-force oracle on 2x2 instances") {
  std::vector<ExactMatrix> cases;
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b)
      for (long long c = -3; c <= 3; ++c)
        for (long long d = -3; d <= 3; ++d)
          if ((a | b | c | d) != 0 && (a + b + c + d) % 3 == 0)  // thin the grid
            cases.push_back(zmat({{a, b}, {c, d}}));
  cases.push_back(zmat({{2, 1}, {0, 1}}));
  for (const auto& m : cases) {
    ExactMatrix h = hnf(m);
    CHECK(is_column_hnf(h));
    auto oracle = brute_force_hnf_2x2(m);
    REQUIRE(oracle.has_value());
    CHECK(h == *oracle);
  }
}

TEST_CASE("hnf reference example") {
  ExactMatrix h = hnf(zmat({{2, 1}, {0, 1}}));
  CHECK(h == zmat({{1, 0}, {1, 2}}));
}

TEST_CASE("hnf fixes identity and zero matrices") {
  CHECK(hnf(ExactMatrix::identity(Z, 4)) == ExactMatrix::identity(Z, 4));
  ExactMatrix zero(Z, 3, 3);
  CHECK(hnf(zero) == zero);
}

TEST_CASE("hnf transform is unimodular and reproduces h") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    ExactMatrix m(Z, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.set(i, j, Rat(static_cast<long long>(rng() % 11) - 5));
    HnfResult res = hnf_with_transform(m);
    CHECK(is_unimodular(res.transform));
    CHECK(m * res.transform == res.h);
    CHECK(is_column_hnf(res.h));
    // reducing again is a fixed point
    CHECK(hnf(res.h) == res.h);
  }
}

TEST_CASE("snf diag examples") {
  SnfResult s1 = snf(zmat({{2, 0}, {0, 3}}));
  CHECK(s1.divisors == std::vector<Int>{1, 6});
  SnfResult s2 = snf(zmat({{4, 0}, {0, 6}}));
  CHECK(s2.divisors == std::vector<Int>{2, 12});
  SnfResult s3 = snf(zmat({{0}}));
  CHECK(s3.divisors == std::vector<Int>{0});
}

TEST_CASE("snf transforms are unimodular and diagonalize with a divisor chain") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    ExactMatrix m(Z, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.set(i, j, Rat(static_cast<long long>(rng() % 13) - 6));
    SnfResult s = snf(m);
    CHECK(is_unimodular(s.left));
    CHECK(is_unimodular(s.right));
    ExactMatrix d = s.left * m * s.right;
    for (int i = 0; i < d.rows(); ++i)
      for (int j = 0; j < d.cols(); ++j) {
        if (i == j && i < static_cast<int>(s.divisors.size()))
          CHECK(d.at(i, j) == Rat(s.divisors[i]));
        else
          CHECK(d.at(i, j) == 0);
      }
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      if (s.divisors[i] == 0)
        CHECK(s.divisors[i + 1] == 0);
      else
        CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    }
  }
}

TEST_CASE("kernel examples") {
  ExactMatrix k = integer_kernel(zmat({{2, -3}}));
  CHECK(k == zmat({{3}, {2}}));
  CHECK(integer_kernel(ExactMatrix::identity(Z, 3)).cols() == 0);
  Fiber f2 = Fiber::prime(2);
  ExactMatrix two(f2, 1, 1);
  two.set(0, 0, 2);
  CHECK(two.at(0, 0) == 0);  // 2 = 0 in F_2
  ExactMatrix k2 = field_kernel(two);
  CHECK(k2.cols() == 1);
  CHECK(k2.at(0, 0) == 1);
}

TEST_CASE("integer kernels are saturated") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + static_cast<int>(rng() % 3), c = 2 + static_cast<int>(rng() % 3);
    ExactMatrix m(Z, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.set(i, j, Rat(static_cast<long long>(rng() % 9) - 4));
    Lattice ker = kernel_lattice(m);
    CHECK(saturate(ker) == ker);
    for (int j = 0; j < ker.basis().cols(); ++j) CHECK((m * ker.basis().column(j)).is_zero());
  }
}

TEST_CASE("saturate examples and brute-force oracle") {
  Lattice l1(2, zmat({{2}, {0}}));
  CHECK(saturate(l1) == Lattice(2, zmat({{1}, {0}})));
  Lattice l2(2, zmat({{1}, {1}}));
  CHECK(saturate(l2) == l2);

  // span{(2,4),(0,6)}: oracle enumerates small vectors v with k v in L
  Lattice l3(2, zmat({{2, 0}, {4, 6}}));
  Lattice sat = saturate(l3);
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y) {
      ExactMatrix v = ExactMatrix::column_vector(Z, {x, y});
      bool multiple_in_l3 = false;
      for (long long k = 1; k <= 12 && !multiple_in_l3; ++k) {
        ExactMatrix kv = ExactMatrix::column_vector(Z, {k * x, k * y});
        if (l3.contains(kv)) multiple_in_l3 = true;
      }
      CHECK(sat.contains(v) == multiple_in_l3);
    }
}

TEST_CASE("saturate is idempotent with index equal to the product of torsion invariants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int g = 1 + static_cast<int>(rng() % n);
    ExactMatrix gens(Z, n, g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < g; ++j) gens.set(i, j, Rat(static_cast<long long>(rng() % 9) - 4));
    Lattice l(n, gens);
    Lattice sat = saturate(l);
    CHECK(saturate(sat) == sat);
    CHECK(sat.contains(l));
    CHECK(sat.rank() == l.rank());
    QuotientPresentation q = quotient(n, l);
    Int index = 1;
    for (const Int& t : q.torsion) index *= t;
    // index of l in its saturation: compare determinants of the bases on the
    // common row support when full-dimensional in the saturation
    if (l.rank() > 0) {
      auto coords = solve_integer(sat.basis(), l.basis());
      REQUIRE(coords.has_value());
      CHECK(abs(integer_determinant(*coords)) == index);
    }
  }
}

TEST_CASE("solve_integer examples") {
  auto x1 = solve_integer(zmat({{2}}), zmat({{4}}));
  REQUIRE(x1.has_value());
  CHECK(*x1 == zmat({{2}}));
  CHECK(!solve_integer(zmat({{2}}), zmat({{3}})).has_value());
  auto x3 = solve_integer(zmat({{1, 2}, {3, 4}}), zmat({{1}, {1}}));
  REQUIRE(x3.has_value());
  CHECK(*x3 == zmat({{-1}, {1}}));
}

TEST_CASE("solve_integer agrees with membership on random instances") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    ExactMatrix m(Z, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.set(i, j, Rat(static_cast<long long>(rng() % 7) - 3));
    ExactMatrix rhs(Z, 4, 1);
    for (int i = 0; i < 4; ++i) rhs.set(i, 0, Rat(static_cast<long long>(rng() % 7) - 3));
    Lattice col(4, m);
    auto x = solve_integer(m, rhs);
    CHECK(x.has_value() == col.contains(rhs));
    if (x) CHECK(m * *x == rhs);
  }
}

TEST_CASE("quotient examples") {
  QuotientPresentation q1 = quotient(2, Lattice(2, zmat({{1}, {0}})));
  CHECK(q1.free_rank() == 1);
  CHECK(q1.torsion.empty());
  CHECK((q1.projection * q1.section).is_identity());

  QuotientPresentation q2 = quotient(1, Lattice(1, zmat({{2}})));
  CHECK(q2.free_rank() == 0);
  CHECK(q2.torsion == std::vector<Int>{2});
}

TEST_CASE("membership examples") {
  Lattice l1(2, zmat({{1}, {0}}));
  CHECK(l1.contains(ExactMatrix::column_vector(Z, {2, 0})));
  Lattice l2(2, zmat({{2}, {0}}));
  CHECK(!l2.contains(ExactMatrix::column_vector(Z, {1, 0})));
  Lattice l3(2, zmat({{1}, {1}}));
  CHECK(l3.contains(ExactMatrix::column_vector(Z, {3, 3})));
}

TEST_CASE("rank over Q equals rank over F_p away from torsion primes") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    ExactMatrix gens(Z, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gens.set(i, j, Rat(static_cast<long long>(rng() % 9) - 4));
    Lattice l(n, gens);
    QuotientPresentation q = quotient(n, l);
    int rank_q = field_rank(to_fiber(l.basis(), Fiber::rationals()));
    for (Int p : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
      bool divides_torsion = false;
      for (const Int& t : q.torsion)
        if (t % p == 0) divides_torsion = true;
      if (divides_torsion) continue;
      CHECK(field_rank(to_fiber(l.basis(), Fiber::prime(p))) == rank_q);
    }
  }
}

TEST_CASE("lattice intersection and sum") {
  Lattice a(2, zmat({{2, 0}, {0, 1}}));
  Lattice b(2, zmat({{3, 0}, {0, 1}}));
  Lattice both = lattice_intersect(a, b);
  CHECK(both.contains(ExactMatrix::column_vector(Z, {6, 0})));
  CHECK(!both.contains(ExactMatrix::column_vector(Z, {2, 0})));
  CHECK(!both.contains(ExactMatrix::column_vector(Z, {3, 0})));
  CHECK(both.contains(ExactMatrix::column_vector(Z, {0, 1})));
  Lattice s = lattice_sum(a, b);
  CHECK(s.contains(ExactMatrix::column_vector(Z, {1, 0})));
}

TEST_CASE("field linear algebra basics") {
  Fiber q = Fiber::rationals();
  ExactMatrix m = ExactMatrix::from_rows(q, {{1, 2}, {3, 4}});
  CHECK(field_rank(m) == 2);
  CHECK(field_determinant(m) == Rat(-2));
  auto inv = field_inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());

  Fiber f5 = Fiber::prime(5);
  ExactMatrix m5 = ExactMatrix::from_rows(f5, {{1, 2}, {3, 4}});
  auto inv5 = field_inverse(m5);
  REQUIRE(inv5.has_value());
  CHECK((m5 * *inv5).is_identity());

  // subspace comparison through the canonical column space
  ExactMatrix a = ExactMatrix::from_rows(q, {{1, 0}, {0, 1}, {1, 1}});
  ExactMatrix b = ExactMatrix::from_rows(q, {{1, 2}, {1, 3}, {2, 5}});
  CHECK(field_column_space(a) == field_column_space(b));
}
