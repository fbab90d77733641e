#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "tder/error.hpp"

namespace tder {

bool is_prime(std::uint64_t p);

// Element of GF(p). Carries its modulus so mixed-field arithmetic is caught.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint32_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    check(a, b);
    std::uint32_t s = a.v_ + b.v_;
    return raw(s >= a.p_ ? s - a.p_ : s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    check(a, b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  friend Fp operator*(Fp a, Fp b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  Fp pow(std::uint64_t e) const {
    std::uint64_t base = v_, acc = 1 % p_;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return raw(static_cast<std::uint32_t>(acc), p_);
  }
  Fp inverse() const {
    if (v_ == 0) throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
    return pow(p_ - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static void check(Fp a, Fp b) {
    if (a.p_ != b.p_) throw DomainError("mixed prime fields");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

class PrimeField {
 public:
  using Scalar = Fp;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw SpecError("GF(" + std::to_string(p) + "): modulus is not prime");
  }

  Scalar zero() const { return Fp(0, p_); }
  Scalar one() const { return Fp(1, p_); }
  Scalar from_int(std::int64_t v) const { return Fp(v, p_); }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Scalar = mpq_class;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept ExactField = requires(const F f, const typename F::Scalar x, std::int64_t n) {
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { f.from_int(n) } -> std::same_as<typename F::Scalar>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.name() } -> std::convertible_to<std::string>;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

inline Fp inverse(const Fp& x) { return x.inverse(); }
inline mpq_class inverse(const mpq_class& x) {
  if (sgn(x) == 0) throw DomainError("division by zero in Q");
  return 1 / x;
}

inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }
inline std::string to_string(const mpq_class& x) { return x.get_str(); }

using AnyField = std::variant<PrimeField, RationalField>;

// Accepts "GF(p)", "Fp", "p" for prime p, and "Q" / "QQ" / "rational".
AnyField parse_field(std::string_view text);
std::string field_name(const AnyField& f);
std::uint32_t field_characteristic(const AnyField& f);

// Parses an integer or (over Q) a fraction "p/q" into a field scalar.
Fp parse_scalar(const PrimeField& f, std::string_view text);
mpq_class parse_scalar(const RationalField& f, std::string_view text);

}  // namespace tder
