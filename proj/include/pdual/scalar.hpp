// Exact scalar fields: arbitrary-precision rationals and prime fields with a
// runtime modulus, both usable as Eigen scalar types.
#ifndef PDUAL_SCALAR_HPP
#define PDUAL_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "pdual/error.hpp"

namespace pdual {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// The base field of every algebra: characteristic 0 means the rationals.
struct Field {
  std::uint64_t characteristic = 0;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Residue modulo a prime chosen at runtime.
///
/// A default- or int-constructed value carries no modulus yet; Eigen creates
/// such literals for its zeros and ones. The modulus is adopted from the other
/// operand on first contact, so unbound literals mix freely with bound values.
class Zp {
 public:
  Zp() = default;
  Zp(int literal) : value_(literal) {}  // NOLINT(google-explicit-constructor)
  Zp(std::int64_t value, std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  bool bound() const { return modulus_ != 0; }
  /// Canonical residue in [0, p) when bound, the raw literal otherwise.
  std::int64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Zp inverse() const;
  Zp operator-() const;
  Zp& operator+=(const Zp& other);
  Zp& operator-=(const Zp& other);
  Zp& operator*=(const Zp& other);
  Zp& operator/=(const Zp& other) { return *this *= other.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b);
  friend bool operator!=(const Zp& a, const Zp& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Zp& x);

 private:
  static std::uint64_t join(const Zp& a, const Zp& b);
  std::int64_t reduced(std::uint64_t p) const;

  std::int64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Zp& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return Rational(1) / x; }
inline Zp inverse(const Zp& x) { return x.inverse(); }

/// Parses "n", "-n", "n/d" (ASCII or U+2212 minus) into a rational.
Rational parse_rational(std::string_view text);

/// Per-scalar-type glue between a runtime Field and the static scalar type.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool supports(const Field& f) { return f.is_rational(); }
  static Rational from_rational(const Field&, const Rational& r) { return r; }
  static std::string to_string(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<Zp> {
  static bool supports(const Field& f) { return !f.is_rational(); }
  static Zp from_rational(const Field& f, const Rational& r);
  static std::string to_string(const Zp& x) { return std::to_string(x.value()); }
};

template <class S>
S scalar(const Field& f, const Rational& r) {
  return ScalarTraits<S>::from_rational(f, r);
}

template <class S>
S scalar(const Field& f, long n) {
  return ScalarTraits<S>::from_rational(f, Rational(n));
}

template <class S>
std::string to_string(const S& x) {
  return ScalarTraits<S>::to_string(x);
}

}  // namespace pdual

namespace Eigen {

template <>
struct NumTraits<pdual::Zp> : GenericNumTraits<pdual::Zp> {
  using Real = pdual::Zp;
  using NonInteger = pdual::Zp;
  using Literal = pdual::Zp;
  using Nested = pdual::Zp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // PDUAL_SCALAR_HPP
