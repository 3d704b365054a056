#include "hopfz/fiber.hpp"

namespace hopfz {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> prime_factors(const Int& n) {
  std::vector<Int> out;
  Int m = abs(n);
  if (m < 2) return out;
  for (Int d = 2; d * d <= m; d = (d == 2 ? Int(3) : d + 2)) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Fiber Fiber::prime(const Int& p) {
  if (!is_prime(p)) throw Error("InvalidFiber", "characteristic " + p.str() + " is not prime");
  return Fiber(Kind::prime, p);
}

std::string Fiber::name() const {
  switch (kind_) {
    case Kind::integers:
      return "Z";
    case Kind::rationals:
      return "Q";
    case Kind::prime:
      return "F" + p_.str();
  }
  return "?";
}

Rat Fiber::canon(const Rat& v) const {
  switch (kind_) {
    case Kind::rationals:
      return v;  // cpp_rational keeps fractions reduced with positive denominator
    case Kind::integers:
      if (denominator(v) != 1) throw Error("NotAnInteger", "scalar " + v.str() + " over Z");
      return v;
    case Kind::prime: {
      if (denominator(v) != 1) throw Error("NotAnInteger", "scalar " + v.str() + " over " + name());
      Int r = numerator(v) % p_;
      if (r < 0) r += p_;
      return Rat(r);
    }
  }
  return v;
}

Rat Fiber::inv(const Rat& v) const {
  if (v == 0) throw Error("DivisionByZero", "inverse of zero over " + name());
  switch (kind_) {
    case Kind::rationals:
      return Rat(denominator(v)) / Rat(numerator(v));
    case Kind::prime: {
      // extended euclid on (a, p)
      Int a = numerator(canon(v)), b = p_;
      Int x0 = 1, x1 = 0;
      while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
      }
      return canon(Rat(x0));
    }
    case Kind::integers:
      if (v == 1 || v == -1) return v;
      throw Error("NotAUnit", "inverse of " + v.str() + " over Z");
  }
  throw Error("InvalidFiber", "bad kind");
}

bool Fiber::is_unit(const Rat& v) const {
  if (kind_ == Kind::integers) return v == 1 || v == -1;
  return canon(v) != 0;
}

}  // namespace hopfz
