#pragma once

// Coefficient domains: arbitrary-precision integers, rationals (GMP) and the
// two-element field. The domain of a polynomial is its template argument, so
// it is fixed when the ring is constructed; conversions are explicit through
// coeff_cast.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "isogr/errors.hpp"

namespace isogr {

enum class CoefficientDomain { Integer, IntegerMod2, Rational };

/// Element of Z/(2); always stored as the canonical representative 0 or 1.
class Gf2 {
 public:
  constexpr Gf2() = default;
  constexpr Gf2(int v) : v_(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

  constexpr int value() const { return v_; }

  friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.v_ ^ b.v_); }
  friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return Gf2(a.v_ ^ b.v_); }
  friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.v_ & b.v_); }
  friend Gf2 operator/(Gf2 a, Gf2 b) {
    if (b.v_ == 0) throw DomainError("division by zero in Z/(2)");
    return a;
  }
  constexpr Gf2 operator-() const { return *this; }
  Gf2& operator+=(Gf2 o) { return *this = *this + o; }
  Gf2& operator-=(Gf2 o) { return *this = *this - o; }
  Gf2& operator*=(Gf2 o) { return *this = *this * o; }
  Gf2& operator/=(Gf2 o) { return *this = *this / o; }
  friend constexpr bool operator==(Gf2 a, Gf2 b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Gf2 a) { return os << a.value(); }

 private:
  std::uint8_t v_ = 0;
};

template <class C>
struct coeff_traits;

template <>
struct coeff_traits<mpz_class> {
  static constexpr CoefficientDomain domain = CoefficientDomain::Integer;
  static constexpr bool is_field = false;
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static bool is_negative(const mpz_class& a) { return sgn(a) < 0; }
  static bool is_one(const mpz_class& a) { return a == 1; }
  static std::string to_string(const mpz_class& a) { return a.get_str(); }
  static mpz_class parse(std::string_view s) {
    mpz_class r;
    if (s.empty() || r.set_str(std::string(s), 10) != 0) {
      throw StructuralError("invalid integer literal '" + std::string(s) + "'");
    }
    return r;
  }
};

template <>
struct coeff_traits<mpq_class> {
  static constexpr CoefficientDomain domain = CoefficientDomain::Rational;
  static constexpr bool is_field = true;
  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
  static bool is_negative(const mpq_class& a) { return sgn(a) < 0; }
  static bool is_one(const mpq_class& a) { return a == 1; }
  static std::string to_string(const mpq_class& a) { return a.get_str(); }
  static mpq_class parse(std::string_view s) {
    mpq_class r;
    if (s.empty() || r.set_str(std::string(s), 10) != 0 || r.get_den() == 0) {
      throw StructuralError("invalid rational literal '" + std::string(s) + "'");
    }
    r.canonicalize();
    return r;
  }
};

template <>
struct coeff_traits<Gf2> {
  static constexpr CoefficientDomain domain = CoefficientDomain::IntegerMod2;
  static constexpr bool is_field = true;
  static bool is_zero(Gf2 a) { return a.value() == 0; }
  static bool is_negative(Gf2) { return false; }
  static bool is_one(Gf2 a) { return a.value() == 1; }
  static std::string to_string(Gf2 a) { return a.value() ? "1" : "0"; }
  static Gf2 parse(std::string_view s) {
    mpz_class z = coeff_traits<mpz_class>::parse(s);
    return Gf2(static_cast<int>(mpz_class(z % 2).get_si()));
  }
};

/// Explicit cross-domain maps: Z -> Q (embedding), Z -> Z/(2) (reduction),
/// Q -> Z (only for integral values), identity otherwise.
template <class To, class From>
To coeff_cast(const From& a) {
  if constexpr (std::is_same_v<To, From>) {
    return a;
  } else if constexpr (std::is_same_v<To, mpq_class> && std::is_same_v<From, mpz_class>) {
    return mpq_class(a);
  } else if constexpr (std::is_same_v<To, Gf2> && std::is_same_v<From, mpz_class>) {
    return Gf2(mpz_odd_p(a.get_mpz_t()) ? 1 : 0);
  } else if constexpr (std::is_same_v<To, mpz_class> && std::is_same_v<From, mpq_class>) {
    if (a.get_den() != 1) throw DomainError("non-integral rational " + a.get_str() + " cast to integer");
    return a.get_num();
  } else if constexpr (std::is_same_v<To, Gf2> && std::is_same_v<From, mpq_class>) {
    if (a.get_den() != 1) throw DomainError("non-integral rational " + a.get_str() + " reduced mod 2");
    return coeff_cast<Gf2>(mpz_class(a.get_num()));
  } else if constexpr (std::is_same_v<To, mpz_class> && std::is_same_v<From, Gf2>) {
    return mpz_class(a.value());
  } else if constexpr (std::is_same_v<To, mpq_class> && std::is_same_v<From, Gf2>) {
    return mpq_class(a.value());
  } else {
    static_assert(sizeof(To) == 0, "unsupported coefficient conversion");
  }
}

template <class C>
bool is_zero(const C& a) {
  return coeff_traits<C>::is_zero(a);
}

}  // namespace isogr
