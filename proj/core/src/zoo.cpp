#include "hopfz/zoo.hpp"

#include <algorithm>

namespace hopfz {

namespace {

const Fiber Z = Fiber::integers();

GroupTable from_table(std::string name, std::vector<std::vector<int>> table) {
  GroupTable g;
  g.name = std::move(name);
  g.order = static_cast<int>(table.size());
  g.table = std::move(table);
  g.identity = 0;
  g.inverse.assign(g.order, -1);
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j)
      if (g.table[i][j] == g.identity) g.inverse[i] = j;
  validate_group(g);
  return g;
}

GroupTable cyclic(const std::string& name, int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_table(name, t);
}

}  // namespace

void validate_group(const GroupTable& g) {
  const int n = g.order;
  if (n <= 0 || static_cast<int>(g.table.size()) != n)
    throw Error("InvalidTable", "empty or ragged group table");
  for (const auto& row : g.table) {
    if (static_cast<int>(row.size()) != n) throw Error("InvalidTable", "ragged group table");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("InvalidTable", "index out of range");
  }
  for (int i = 0; i < n; ++i)
    if (g.table[g.identity][i] != i || g.table[i][g.identity] != i)
      throw Error("InvalidTable", "identity law fails");
  for (int i = 0; i < n; ++i) {
    if (g.inverse[i] < 0 || g.table[i][g.inverse[i]] != g.identity ||
        g.table[g.inverse[i]][i] != g.identity)
      throw Error("InvalidTable", "inverse law fails");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw Error("InvalidTable", "associativity fails");
}

GroupTable group_c2() { return cyclic("C2", 2); }
GroupTable group_c3() { return cyclic("C3", 3); }
GroupTable group_c4() { return cyclic("C4", 4); }

GroupTable group_c2xc2() {
  // elements (0,0), (1,0), (0,1), (1,1); componentwise addition mod 2
  auto idx = [](int a, int b) { return a + 2 * b; };
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) t[idx(a, b)][idx(c, d)] = idx((a + c) % 2, (b + d) % 2);
  return from_table("C2xC2", t);
}

GroupTable group_s3() {
  // e, r, r2, s, rs, r2s with s r = r^-1 s; element r^a s^b, index a + 3 b
  auto idx = [](int a, int b) { return a + 3 * b; };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 2; ++d) {
          // (r^a s^b)(r^c s^d) = r^(a + c * (-1)^b) s^(b+d)
          int rexp = ((a + (b ? -c : c)) % 3 + 3) % 3;
          t[idx(a, b)][idx(c, d)] = idx(rexp, (b + d) % 2);
        }
  return from_table("S3", t);
}

GroupTable group_d4() {
  // e, r, r2, r3, s, rs, r2s, r3s with s r = r^-1 s; element r^a s^b
  auto idx = [](int a, int b) { return a + 4 * b; };
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 2; ++d) {
          int rexp = ((a + (b ? -c : c)) % 4 + 4) % 4;
          t[idx(a, b)][idx(c, d)] = idx(rexp, (b + d) % 2);
        }
  return from_table("D4", t);
}

GroupTable group_q8() {
  // 1, -1, i, -i, j, -j, k, -k
  // encode q = s * u with s in {+1,-1}, u in {1, i, j, k}
  auto enc = [](int sign, int u) {
    static const int base[4] = {0, 2, 4, 6};
    return base[u] + (sign < 0 ? 1 : 0);
  };
  auto dec_sign = [](int q) { return q % 2 == 0 ? 1 : -1; };
  auto dec_unit = [](int q) { return q / 2; };
  // unit multiplication table for {1, i, j, k} with result sign
  static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int usign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int p = 0; p < 8; ++p)
    for (int q = 0; q < 8; ++q) {
      int u1 = dec_unit(p), u2 = dec_unit(q);
      int s = dec_sign(p) * dec_sign(q) * usign[u1][u2];
      t[p][q] = enc(s, umul[u1][u2]);
    }
  return from_table("Q8", t);
}

HopfAlgebra group_algebra(const GroupTable& g) {
  validate_group(g);
  const int n = g.order;
  ExactMatrix mult(Z, n, n * n);
  ExactMatrix comult(Z, n * n, n);
  ExactMatrix unit(Z, n, 1);
  ExactMatrix counit(Z, n, 1);
  ExactMatrix s(Z, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mult.set(g.table[i][j], i * n + j, 1);
    comult.set(i * n + i, i, 1);
    counit.set(i, 0, 1);
    s.set(g.inverse[i], i, 1);
  }
  unit.set(g.identity, 0, 1);
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return HopfAlgebra(Z, mult, unit, comult, LinearFunctional{counit}, s, names);
}

HopfAlgebra function_hopf(const GroupTable& g) {
  validate_group(g);
  const int n = g.order;
  ExactMatrix mult(Z, n, n * n);
  ExactMatrix comult(Z, n * n, n);
  ExactMatrix unit(Z, n, 1);
  ExactMatrix counit(Z, n, 1);
  ExactMatrix s(Z, n, n);
  for (int i = 0; i < n; ++i) {
    mult.set(i, i * n + i, 1);
    unit.set(i, 0, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.table[a][b] == i) comult.set(a * n + b, i, 1);
    s.set(g.inverse[i], i, 1);
  }
  counit.set(g.identity, 0, 1);
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("d" + std::to_string(i));
  return HopfAlgebra(Z, mult, unit, comult, LinearFunctional{counit}, s, names);
}

HopfAlgebra sweedler_over_Z() {
  // basis 1, g, x, gx
  const int n = 4;
  ExactMatrix mult(Z, n, n * n);
  auto set_prod = [&](int i, int j, std::vector<std::pair<int, long long>> terms) {
    for (auto [k, c] : terms) mult.set(k, i * n + j, Rat(c));
  };
  // left multiplication by 1
  for (int j = 0; j < n; ++j) set_prod(0, j, {{j, 1}});
  set_prod(1, 0, {{1, 1}});
  set_prod(1, 1, {{0, 1}});   // g g = 1
  set_prod(1, 2, {{3, 1}});   // g x = gx
  set_prod(1, 3, {{2, 1}});   // g gx = x
  set_prod(2, 0, {{2, 1}});
  set_prod(2, 1, {{3, -1}});  // x g = -gx
  set_prod(2, 2, {});         // x x = 0
  set_prod(2, 3, {});         // x gx = 0
  set_prod(3, 0, {{3, 1}});
  set_prod(3, 1, {{2, -1}});  // gx g = -x
  set_prod(3, 2, {});         // gx x = 0
  set_prod(3, 3, {});         // gx gx = 0
  ExactMatrix unit(Z, n, 1);
  unit.set(0, 0, 1);
  ExactMatrix comult(Z, n * n, n);
  auto set_comult = [&](int i, std::vector<std::pair<std::pair<int, int>, long long>> terms) {
    for (auto [ab, c] : terms) comult.set(ab.first * n + ab.second, i, Rat(c));
  };
  set_comult(0, {{{0, 0}, 1}});                 // 1 -> 1 (x) 1
  set_comult(1, {{{1, 1}, 1}});                 // g -> g (x) g
  set_comult(2, {{{2, 0}, 1}, {{1, 2}, 1}});    // x -> x (x) 1 + g (x) x
  set_comult(3, {{{3, 1}, 1}, {{0, 3}, 1}});    // gx -> gx (x) g + 1 (x) gx
  ExactMatrix counit(Z, n, 1);
  counit.set(0, 0, 1);
  counit.set(1, 0, 1);
  ExactMatrix s(Z, n, n);
  s.set(0, 0, 1);   // S(1) = 1
  s.set(1, 1, 1);   // S(g) = g
  s.set(3, 2, -1);  // S(x) = -gx
  s.set(2, 3, 1);   // S(gx) = x
  return HopfAlgebra(Z, mult, unit, comult, LinearFunctional{counit}, s,
                     {"1", "g", "x", "gx"});
}

HopfAlgebra trivial_hopf() {
  ExactMatrix one = ExactMatrix::identity(Z, 1);
  return HopfAlgebra(Z, one, one, one, LinearFunctional{one}, one, {"1"});
}

HopfInclusion subgroup_inclusion(const GroupTable& g, const std::vector<int>& elements,
                                 const std::string& name) {
  std::vector<int> h = elements;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  auto pos = [&](int e) {
    auto it = std::lower_bound(h.begin(), h.end(), e);
    return (it != h.end() && *it == e) ? static_cast<int>(it - h.begin()) : -1;
  };
  if (h.empty() || pos(g.identity) < 0) throw Error("NotASubgroup", "missing identity");
  const int m = static_cast<int>(h.size());
  GroupTable sub;
  sub.name = name.empty() ? g.name + "-subgroup" : name;
  sub.order = m;
  sub.identity = pos(g.identity);
  sub.table.assign(m, std::vector<int>(m));
  sub.inverse.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int p = pos(g.table[h[i]][h[j]]);
      if (p < 0) throw Error("NotASubgroup", "subset not closed under multiplication");
      sub.table[i][j] = p;
    }
    sub.inverse[i] = pos(g.inverse[h[i]]);
    if (sub.inverse[i] < 0) throw Error("NotASubgroup", "subset not closed under inversion");
  }
  validate_group(sub);
  ExactMatrix f(Z, g.order, m);
  for (int i = 0; i < m; ++i) f.set(h[i], i, 1);
  HopfInclusion inc{group_algebra(sub), group_algebra(g), f,
                    name.empty() ? ("Z[" + sub.name + "] in Z[" + g.name + "]") : name,
                    std::nullopt, std::nullopt};
  return inc;
}

std::vector<std::vector<int>> all_subgroups(const GroupTable& g) {
  const int n = g.order;
  std::vector<std::vector<int>> out;
  // subsets containing the identity, tested for closure; fine at order <= 8
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != g.identity) others.push_back(i);
  const int m = static_cast<int>(others.size());
  for (long long mask = 0; mask < (1LL << m); ++mask) {
    std::vector<int> subset = {g.identity};
    for (int b = 0; b < m; ++b)
      if (mask & (1LL << b)) subset.push_back(others[b]);
    std::sort(subset.begin(), subset.end());
    bool closed = true;
    for (int a : subset) {
      for (int b : subset) {
        if (!std::binary_search(subset.begin(), subset.end(), g.table[a][b])) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(subset);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_normal_subgroup(const GroupTable& g, const std::vector<int>& elements) {
  std::vector<int> h = elements;
  std::sort(h.begin(), h.end());
  for (int x = 0; x < g.order; ++x)
    for (int a : h)
      if (!std::binary_search(h.begin(), h.end(), g.table[g.table[x][a]][g.inverse[x]]))
        return false;
  return true;
}

GroupTable quotient_group(const GroupTable& g, const std::vector<int>& normal_subgroup) {
  if (!is_normal_subgroup(g, normal_subgroup))
    throw Error("NotNormal", "quotient of a non-normal subgroup");
  std::vector<int> h = normal_subgroup;
  std::sort(h.begin(), h.end());
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;  // cosets ordered by smallest member
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int a : h) coset_of[g.table[x][a]] = c;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = coset_of[g.table[reps[i]][reps[j]]];
  GroupTable q = from_table(g.name + "-quotient", t);
  return q;
}

namespace {

const std::vector<std::pair<std::string, GroupTable (*)()>>& group_registry() {
  static const std::vector<std::pair<std::string, GroupTable (*)()>> reg = {
      {"C2", group_c2}, {"C3", group_c3},     {"C4", group_c4}, {"C2xC2", group_c2xc2},
      {"S3", group_s3}, {"D4", group_d4},     {"Q8", group_q8},
  };
  return reg;
}

}  // namespace

std::vector<std::string> builtin_algebra_names() {
  std::vector<std::string> names;
  for (const auto& [n, fn] : group_registry()) {
    names.push_back(n);
    names.push_back("dual-" + n);
    names.push_back("fn-" + n);
  }
  names.push_back("sweedler");
  names.push_back("dual-sweedler");
  names.push_back("trivial");
  return names;
}

HopfAlgebra builtin_algebra(const std::string& name) {
  if (name == "sweedler") return sweedler_over_Z();
  if (name == "dual-sweedler") return dual(sweedler_over_Z());
  if (name == "trivial") return trivial_hopf();
  for (const auto& [n, fn] : group_registry()) {
    if (name == n) return group_algebra(fn());
    if (name == "dual-" + n) return dual(group_algebra(fn()));
    if (name == "fn-" + n) return function_hopf(fn());
  }
  throw Error("UnknownBuiltin", "no builtin algebra named '" + name + "'");
}

std::vector<std::string> builtin_inclusion_names() {
  return {"A3-in-S3",    "C2-in-S3",   "C2-in-C4",      "C2-in-C2xC2", "center-in-Q8",
          "C4-in-D4",    "center-in-D4", "g-in-sweedler", "trivial-in-S3", "S3-in-S3"};
}

HopfInclusion builtin_inclusion(const std::string& name) {
  if (name == "A3-in-S3") return subgroup_inclusion(group_s3(), {0, 1, 2}, name);
  if (name == "C2-in-S3") return subgroup_inclusion(group_s3(), {0, 3}, name);
  if (name == "C2-in-C4") return subgroup_inclusion(group_c4(), {0, 2}, name);
  if (name == "C2-in-C2xC2") return subgroup_inclusion(group_c2xc2(), {0, 1}, name);
  if (name == "center-in-Q8") return subgroup_inclusion(group_q8(), {0, 1}, name);
  if (name == "C4-in-D4") return subgroup_inclusion(group_d4(), {0, 1, 2, 3}, name);
  if (name == "center-in-D4") return subgroup_inclusion(group_d4(), {0, 2}, name);
  if (name == "trivial-in-S3") return subgroup_inclusion(group_s3(), {0}, name);
  if (name == "S3-in-S3") return subgroup_inclusion(group_s3(), {0, 1, 2, 3, 4, 5}, name);
  if (name == "g-in-sweedler") {
    HopfAlgebra b = sweedler_over_Z();
    ExactMatrix f(Fiber::integers(), 4, 2);
    f.set(0, 0, 1);  // 1 -> 1
    f.set(1, 1, 1);  // g -> g
    return HopfInclusion{group_algebra(group_c2()), b, f, name, std::nullopt, std::nullopt};
  }
  throw Error("UnknownBuiltin", "no builtin inclusion named '" + name + "'");
}

}  // namespace hopfz
