#pragma once

// Exact scalar fields. A field is a small stateless-ish policy object that
// owns the arithmetic; elements are plain values (`value_type`). Every
// algorithm in the library is templated on the field policy, and
// `with_field` dispatches a runtime characteristic to the right policy.

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <tuple>
#include <utility>

#include "wsa/errors.hpp"

namespace wsa {

using Rational = mpq_class;

/// Parse "7", "-3", "2/3" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::InvalidScalar, "cannot parse '" + text + "' as an integer or num/den");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidScalar, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(Rational q) {
  q.canonicalize();
  return q.get_str(10);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Characteristic 0 selects the rationals; a prime p selects F_p.
struct FieldSpec {
  std::uint32_t characteristic = 101;

  static FieldSpec make(std::int64_t characteristic) {
    if (characteristic < 0 || characteristic > 0xFFFFFFFFLL ||
        (characteristic != 0 && !is_prime(static_cast<std::uint64_t>(characteristic)))) {
      throw Error(ErrorKind::InvalidScalar,
                  "field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    }
    return FieldSpec{static_cast<std::uint32_t>(characteristic)};
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  PrimeField() = default;
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidScalar, "not a prime: " + std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw Error(ErrorKind::InvalidScalar, "inverse of zero in F_" + std::to_string(p_));
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
      std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (t < 0) t += p_;
    return static_cast<value_type>(t);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type from_rational(const Rational& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) num += p_;
    if (den == 0)
      throw Error(ErrorKind::InvalidScalar,
                  "denominator of " + q.get_str() + " vanishes in F_" + std::to_string(p_));
    return div(static_cast<value_type>(num.get_ui()), static_cast<value_type>(den.get_ui()));
  }
  std::string to_string(value_type a) const { return std::to_string(a); }

 private:
  std::uint32_t p_ = 2;
};

class RationalField {
 public:
  using value_type = Rational;

  std::uint32_t characteristic() const { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::InvalidScalar, "inverse of zero in Q");
    value_type r = 1 / a;
    r.canonicalize();
    return r;
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }

  value_type from_int(std::int64_t n) const { return value_type(static_cast<long>(n)); }
  value_type from_rational(const Rational& q) const { return q; }
  std::string to_string(const value_type& a) const { return a.get_str(10); }
};

/// Run `fn(field)` with the policy matching `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.characteristic == 0) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField{spec.characteristic});
}

}  // namespace wsa
