#include "hopfz/io.hpp"

#include <fstream>
#include <sstream>

namespace hopfz {

namespace {

std::string fiber_tag(const Fiber& f) {
  switch (f.kind()) {
    case Fiber::Kind::integers:
      return "integers";
    case Fiber::Kind::rationals:
      return "rationals";
    case Fiber::Kind::prime:
      return "prime:" + f.characteristic().str();
  }
  return "?";
}

Fiber fiber_from_tag(const std::string& tag) {
  if (tag == "integers") return Fiber::integers();
  if (tag == "rationals") return Fiber::rationals();
  if (tag.rfind("prime:", 0) == 0) return Fiber::prime(Int(tag.substr(6)));
  throw Error("Syntax", "unknown base '" + tag + "'");
}

Json scalar_to_json(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return v.str();
}

Rat scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<int64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rat(Int(s));
      return Rat(Int(s.substr(0, slash))) / Rat(Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw Error("Syntax", "bad integer literal '" + s + "' in " + where);
    }
  }
  throw Error("Syntax", "expected an integer or decimal string in " + where);
}

const Json& field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error("Syntax", "missing field '" + key + "'");
  return *it;
}

int int_field(const Json& j, const std::string& key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw Error("Syntax", "field '" + key + "' must be an integer");
  return v.get<int>();
}

// solve for the unique two-sided unit of the algebra given by the mult tensor
ExactMatrix solve_unit(const Fiber& f, int n, const ExactMatrix& mult) {
  // u with sum_i u_i (e_i e_j) = e_j = sum_i u_i (e_j e_i) for all j
  ExactMatrix sys(f, 2 * n * n, n);
  ExactMatrix rhs(f, 2 * n * n, 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Rat& l = mult.at(k, i * n + j);
        if (l != 0) sys.add_at(j * n + k, i, l);
        const Rat& r = mult.at(k, j * n + i);
        if (r != 0) sys.add_at(n * n + j * n + k, i, r);
      }
  for (int j = 0; j < n; ++j) {
    rhs.set(j * n + j, 0, 1);
    rhs.set(n * n + j * n + j, 0, 1);
  }
  std::optional<ExactMatrix> u =
      f.is_integers() ? solve_integer(sys, rhs) : field_solve(sys, rhs);
  if (!u) throw Error("AxiomFailure", "unitality: the multiplication has no two-sided unit");
  return *u;
}

}  // namespace

Json algebra_to_json(const HopfAlgebra& h) {
  const int n = h.rank();
  Json j;
  j["format_version"] = 1;
  j["kind"] = "hopf_algebra";
  j["base"] = fiber_tag(h.fiber());
  j["rank"] = n;
  if (!h.basis_names().empty()) j["basis_names"] = h.basis_names();
  Json mult = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < n; ++jj) {
      Json vec = Json::array();
      for (int k = 0; k < n; ++k) vec.push_back(scalar_to_json(h.mult().at(k, i * n + jj)));
      row.push_back(vec);
    }
    mult.push_back(row);
  }
  j["mult"] = mult;
  Json comult = Json::array();
  for (int i = 0; i < n; ++i) {
    Json m = Json::array();
    for (int a = 0; a < n; ++a) {
      Json row = Json::array();
      for (int b = 0; b < n; ++b) row.push_back(scalar_to_json(h.comult().at(a * n + b, i)));
      m.push_back(row);
    }
    comult.push_back(m);
  }
  j["comult"] = comult;
  Json counit = Json::array();
  for (int i = 0; i < n; ++i) counit.push_back(scalar_to_json(h.counit().coeffs.at(i, 0)));
  j["counit"] = counit;
  if (h.has_antipode()) {
    Json s = Json::array();
    for (int i = 0; i < n; ++i) {
      Json row = Json::array();
      for (int jj = 0; jj < n; ++jj) row.push_back(scalar_to_json(h.antipode().at(i, jj)));
      s.push_back(row);
    }
    j["antipode"] = s;
  }
  return j;
}

HopfAlgebra algebra_from_json(const Json& j) {
  if (field(j, "kind") != "hopf_algebra") throw Error("Syntax", "kind must be hopf_algebra");
  Fiber f = fiber_from_tag(field(j, "base").get<std::string>());
  const int n = int_field(j, "rank");
  if (n <= 0) throw Error("Dimension", "rank must be positive");

  const Json& jm = field(j, "mult");
  if (!jm.is_array() || static_cast<int>(jm.size()) != n)
    throw Error("Dimension", "mult must be an n x n array of vectors");
  ExactMatrix mult(f, n, n * n);
  for (int i = 0; i < n; ++i) {
    if (!jm[i].is_array() || static_cast<int>(jm[i].size()) != n)
      throw Error("Dimension", "mult row " + std::to_string(i));
    for (int jj = 0; jj < n; ++jj) {
      const Json& vec = jm[i][jj];
      if (!vec.is_array() || static_cast<int>(vec.size()) != n)
        throw Error("Dimension", "mult[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
      for (int k = 0; k < n; ++k)
        mult.set(k, i * n + jj, scalar_from_json(vec[k], "mult"));
    }
  }
  const Json& jd = field(j, "comult");
  if (!jd.is_array() || static_cast<int>(jd.size()) != n)
    throw Error("Dimension", "comult must be an n array of n x n matrices");
  ExactMatrix comult(f, n * n, n);
  for (int i = 0; i < n; ++i) {
    const Json& m = jd[i];
    if (!m.is_array() || static_cast<int>(m.size()) != n)
      throw Error("Dimension", "comult[" + std::to_string(i) + "]");
    for (int a = 0; a < n; ++a) {
      if (!m[a].is_array() || static_cast<int>(m[a].size()) != n)
        throw Error("Dimension", "comult[" + std::to_string(i) + "][" + std::to_string(a) + "]");
      for (int b = 0; b < n; ++b)
        comult.set(a * n + b, i, scalar_from_json(m[a][b], "comult"));
    }
  }
  const Json& jc = field(j, "counit");
  if (!jc.is_array() || static_cast<int>(jc.size()) != n)
    throw Error("Dimension", "counit must have length rank");
  ExactMatrix counit(f, n, 1);
  for (int i = 0; i < n; ++i) counit.set(i, 0, scalar_from_json(jc[i], "counit"));

  std::optional<ExactMatrix> antipode;
  if (j.contains("antipode")) {
    const Json& js = j["antipode"];
    if (!js.is_array() || static_cast<int>(js.size()) != n)
      throw Error("Dimension", "antipode must be n x n");
    ExactMatrix s(f, n, n);
    for (int i = 0; i < n; ++i) {
      if (!js[i].is_array() || static_cast<int>(js[i].size()) != n)
        throw Error("Dimension", "antipode row " + std::to_string(i));
      for (int jj = 0; jj < n; ++jj) s.set(i, jj, scalar_from_json(js[i][jj], "antipode"));
    }
    antipode = s;
  }
  std::vector<std::string> names;
  if (j.contains("basis_names")) {
    for (const auto& nm : j["basis_names"]) names.push_back(nm.get<std::string>());
    if (static_cast<int>(names.size()) != n)
      throw Error("Dimension", "basis_names must have length rank");
  }
  ExactMatrix unit = solve_unit(f, n, mult);
  return HopfAlgebra(f, mult, unit, comult, LinearFunctional{counit}, antipode, names);
}

Json inclusion_to_json(const HopfInclusion& inc) {
  Json j;
  j["format_version"] = 1;
  j["kind"] = "hopf_inclusion";
  if (!inc.name.empty()) j["name"] = inc.name;
  j["sub"] = algebra_to_json(inc.sub);
  j["ambient"] = algebra_to_json(inc.amb);
  Json emb = Json::array();
  for (int i = 0; i < inc.embedding.rows(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < inc.embedding.cols(); ++jj)
      row.push_back(scalar_to_json(inc.embedding.at(i, jj)));
    emb.push_back(row);
  }
  j["embedding"] = emb;
  return j;
}

HopfInclusion inclusion_from_json(const Json& j) {
  if (field(j, "kind") != "hopf_inclusion") throw Error("Syntax", "kind must be hopf_inclusion");
  HopfAlgebra sub = algebra_from_json(field(j, "sub"));
  HopfAlgebra amb = algebra_from_json(field(j, "ambient"));
  const Json& je = field(j, "embedding");
  if (!je.is_array() || static_cast<int>(je.size()) != amb.rank())
    throw Error("Dimension", "embedding must be (rank ambient) x (rank sub)");
  ExactMatrix emb(sub.fiber(), amb.rank(), sub.rank());
  for (int i = 0; i < amb.rank(); ++i) {
    if (!je[i].is_array() || static_cast<int>(je[i].size()) != sub.rank())
      throw Error("Dimension", "embedding row " + std::to_string(i));
    for (int jj = 0; jj < sub.rank(); ++jj)
      emb.set(i, jj, scalar_from_json(je[i][jj], "embedding"));
  }
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
  return HopfInclusion{std::move(sub), std::move(amb), std::move(emb), name, std::nullopt,
                       std::nullopt};
}

namespace {

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("Syntax", "not valid JSON");
  return j;
}

HopfAlgebra validate_algebra(HopfAlgebra h) {
  HopfAlgebra out = with_antipode(h);  // solves when absent, verifies when present
  return out;
}

}  // namespace

HopfAlgebra parse_algebra_document(const std::string& text) {
  return validate_algebra(algebra_from_json(parse_json(text)));
}

HopfInclusion parse_inclusion_document(const std::string& text) {
  Json j = parse_json(text);
  HopfInclusion inc = inclusion_from_json(j);
  inc.sub = validate_algebra(inc.sub);
  inc.amb = validate_algebra(inc.amb);
  Certificate cert = check_inclusion(inc);
  if (!cert.passed())
    throw Error("AxiomFailure", "inclusion: " + cert.first_failure()->name +
                                    (cert.first_failure()->detail.empty()
                                         ? ""
                                         : " (" + cert.first_failure()->detail + ")"));
  return inc;
}

std::string emit_algebra_document(const HopfAlgebra& h) {
  return algebra_to_json(h).dump(2) + "\n";
}

std::string emit_inclusion_document(const HopfInclusion& inc) {
  return inclusion_to_json(inc).dump(2) + "\n";
}

ParsedInput load_input(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) {
    const std::string name = spec.substr(8);
    for (const std::string& a : builtin_algebra_names())
      if (a == name) return builtin_algebra(name);
    for (const std::string& i : builtin_inclusion_names())
      if (i == name) return builtin_inclusion(name);
    throw Error("UnknownBuiltin", "no builtin named '" + name + "'");
  }
  Json j = parse_json(read_text_file(spec));
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "hopf_algebra") return parse_algebra_document(read_text_file(spec));
  if (kind == "hopf_inclusion") return parse_inclusion_document(read_text_file(spec));
  throw Error("Syntax", "unknown document kind '" + kind + "'");
}

HopfAlgebra load_algebra(const std::string& spec) {
  ParsedInput in = load_input(spec);
  if (auto* h = std::get_if<HopfAlgebra>(&in)) return *h;
  throw Error("Syntax", "'" + spec + "' is an inclusion, expected an algebra");
}

HopfInclusion load_inclusion(const std::string& spec) {
  ParsedInput in = load_input(spec);
  if (auto* i = std::get_if<HopfInclusion>(&in)) return *i;
  throw Error("Syntax", "'" + spec + "' is an algebra, expected an inclusion");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("Syntax", "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // newline normalization
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      if (i + 1 < text.size() && text[i + 1] == '\n') continue;
      out.push_back('\n');
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("Syntax", "cannot write '" + path + "'");
  out << content;
}

}  // namespace hopfz
