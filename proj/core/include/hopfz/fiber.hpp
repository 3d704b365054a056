#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error with a machine-readable kind tag ("DimensionMismatch", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

bool is_prime(const Int& n);

/// Distinct prime factors of |n|, ascending. Factors of 0 and ±1 are empty.
std::vector<Int> prime_factors(const Int& n);

/// Base fiber of an integer structure: Z itself, its fraction field Q, or a
/// residue field F_p. All arithmetic is exact; scalars live in canonical form
/// (Z: integer, Q: reduced fraction, F_p: representative in [0, p)).
class Fiber {
 public:
  enum class Kind { integers, rationals, prime };

  static Fiber integers() { return Fiber(Kind::integers, 0); }
  static Fiber rationals() { return Fiber(Kind::rationals, 0); }
  static Fiber prime(const Int& p);

  Kind kind() const { return kind_; }
  const Int& characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::integers; }
  bool is_integers() const { return kind_ == Kind::integers; }
  std::string name() const;

  bool operator==(const Fiber&) const = default;

  Rat canon(const Rat& v) const;
  Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }
  Rat neg(const Rat& a) const { return canon(-a); }
  /// Multiplicative inverse; fields only, v != 0.
  Rat inv(const Rat& v) const;
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  /// Units: ±1 over Z, any nonzero scalar over a field.
  bool is_unit(const Rat& v) const;

 private:
  Fiber(Kind k, Int p) : kind_(k), p_(std::move(p)) {}

  Kind kind_;
  Int p_;
};

}  // namespace hopfz
