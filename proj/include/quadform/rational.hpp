#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadform {

// Arbitrary-precision integers and rationals.  mpq_class keeps values
// canonicalized (lowest terms, positive denominator), which the rest of
// the library relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat to_rat(const Int& n) { return Rat(n); }

// mpq_class(num, den) does not canonicalize; this always does.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Representative of q mod 1 in [0, 1).
inline Rat mod1(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Rat r = q - Rat(fl);
  return r;
}

// Nonnegative representative of n mod m (m > 0).
inline Int mod_pos(const Int& n, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string rat_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// The field with two elements.
struct F2 {
  std::uint8_t v{0};
  constexpr F2() = default;
  constexpr F2(int x) : v(static_cast<std::uint8_t>(x & 1)) {}
  explicit F2(const Int& x) : v(static_cast<std::uint8_t>(mpz_odd_p(x.get_mpz_t()) ? 1 : 0)) {}
  friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
  friend constexpr F2 operator-(F2 a, F2 b) { return F2(a.v ^ b.v); }
  friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
  friend constexpr F2 operator/(F2 a, F2 b) {
    return b.v ? a : throw std::domain_error("division by zero in F2");
  }
  constexpr F2 operator-() const { return *this; }
  F2& operator+=(F2 o) { v ^= o.v; return *this; }
  F2& operator-=(F2 o) { v ^= o.v; return *this; }
  F2& operator*=(F2 o) { v &= o.v; return *this; }
  friend constexpr bool operator==(F2 a, F2 b) { return a.v == b.v; }
  friend constexpr bool operator!=(F2 a, F2 b) { return a.v != b.v; }
};

}  // namespace quadform
