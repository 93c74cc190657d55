#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dgrep {

/// Ground field selector: p == 0 is Q, otherwise F_p.
struct Field {
  std::uint32_t p = 0;

  static Field rational() { return {}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  /// True when n is invertible in the field (always for Q).
  bool inverts(std::uint64_t n) const { return p == 0 || n % p != 0; }
  std::string str() const;

  friend bool operator==(Field, Field) = default;
};

/// An exact scalar: a canonical arbitrary-precision rational, or a residue mod p.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v, Field f = {});  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& q, Field f = {});

  static Scalar parse(std::string_view text, Field f = {});

  Field field() const { return {p_}; }
  bool is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  /// Rational value; for F_p the representative in [0, p).
  mpq_class value() const;
  std::string str() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// a -= b * c, the elimination kernel.
  void sub_mul(const Scalar& b, const Scalar& c);

private:
  void check_same(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dgrep
