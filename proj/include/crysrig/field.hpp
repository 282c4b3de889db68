#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>

namespace crysrig {

// Prime field F_p with the Mersenne prime p = 2^61 - 1.
class ModP {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;
  static constexpr bool kHasSqrt3 = false;
  static constexpr double kLog2Size = 61.0;

  constexpr ModP() = default;

  static constexpr ModP from_int(std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(kModulus);
    if (m < 0) m += static_cast<std::int64_t>(kModulus);
    return ModP(static_cast<std::uint64_t>(m), raw_tag{});
  }
  static constexpr ModP zero() { return ModP(); }
  static constexpr ModP one() { return from_int(1); }

  template <class Rng>
  static ModP random(Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, kModulus - 1);
    return ModP(dist(rng), raw_tag{});
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= kModulus) s -= kModulus;
    return ModP(s, raw_tag{});
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return ModP(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kModulus - b.v_, raw_tag{});
  }
  friend constexpr ModP operator-(ModP a) { return ModP() - a; }
  friend constexpr ModP operator*(ModP a, ModP b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(prod) & kModulus;
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kModulus) s -= kModulus;
    return ModP(s, raw_tag{});
  }
  friend constexpr ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend constexpr bool operator==(ModP, ModP) = default;

  constexpr ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = one();
    while (e != 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  constexpr ModP inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(kModulus - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v_; }

 private:
  struct raw_tag {};
  constexpr ModP(std::uint64_t v, raw_tag) : v_(v) {}
  std::uint64_t v_ = 0;
};

// F_p(sqrt 3) as pairs a + b*sqrt(3). Since p = 3 (mod 4) and p = 1 (mod 3),
// 3 is a quadratic non-residue and this is the field with p^2 elements.
class ModPSqrt3 {
 public:
  static constexpr bool kHasSqrt3 = true;
  static constexpr double kLog2Size = 122.0;

  constexpr ModPSqrt3() = default;
  constexpr ModPSqrt3(ModP a, ModP b) : a_(a), b_(b) {}

  static constexpr ModPSqrt3 from_int(std::int64_t v) { return {ModP::from_int(v), ModP()}; }
  static constexpr ModPSqrt3 zero() { return {}; }
  static constexpr ModPSqrt3 one() { return from_int(1); }
  static constexpr ModPSqrt3 sqrt3() { return {ModP(), ModP::one()}; }

  template <class Rng>
  static ModPSqrt3 random(Rng& rng) {
    ModP a = ModP::random(rng);
    return {a, ModP::random(rng)};
  }

  constexpr ModP real_part() const { return a_; }
  constexpr ModP sqrt3_part() const { return b_; }
  constexpr bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend constexpr ModPSqrt3 operator+(ModPSqrt3 x, ModPSqrt3 y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend constexpr ModPSqrt3 operator-(ModPSqrt3 x, ModPSqrt3 y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend constexpr ModPSqrt3 operator-(ModPSqrt3 x) { return {-x.a_, -x.b_}; }
  friend constexpr ModPSqrt3 operator*(ModPSqrt3 x, ModPSqrt3 y) {
    return {x.a_ * y.a_ + ModP::from_int(3) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend constexpr ModPSqrt3 operator/(ModPSqrt3 x, ModPSqrt3 y) { return x * y.inverse(); }
  ModPSqrt3& operator+=(ModPSqrt3 o) { return *this = *this + o; }
  ModPSqrt3& operator-=(ModPSqrt3 o) { return *this = *this - o; }
  ModPSqrt3& operator*=(ModPSqrt3 o) { return *this = *this * o; }
  friend constexpr bool operator==(ModPSqrt3, ModPSqrt3) = default;

  constexpr ModPSqrt3 inverse() const {
    // (a + b s)^-1 = (a - b s) / (a^2 - 3 b^2); the norm vanishes only at zero.
    ModP norm = a_ * a_ - ModP::from_int(3) * b_ * b_;
    if (norm.is_zero()) throw std::domain_error("inverse of zero in F_p(sqrt3)");
    ModP inv = norm.inverse();
    return {a_ * inv, -b_ * inv};
  }

  friend std::ostream& operator<<(std::ostream& os, ModPSqrt3 x) {
    return os << x.a_ << "+" << x.b_ << "*sqrt3";
  }

 private:
  ModP a_;
  ModP b_;
};

// Double precision with the same interface, so the system builders can be
// instantiated for floating-point realizations.
class Real {
 public:
  static constexpr bool kHasSqrt3 = true;

  constexpr Real() = default;
  constexpr Real(double v) : v_(v) {}  // NOLINT: implicit by intent for arithmetic

  static constexpr Real from_int(std::int64_t v) { return Real(static_cast<double>(v)); }
  static constexpr Real zero() { return Real(); }
  static constexpr Real one() { return Real(1.0); }
  static Real sqrt3() { return Real(std::sqrt(3.0)); }

  template <class Rng>
  static Real random(Rng& rng) {
    return Real(std::uniform_real_distribution<double>(-1.0, 1.0)(rng));
  }

  constexpr double value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0.0; }

  friend constexpr Real operator+(Real a, Real b) { return a.v_ + b.v_; }
  friend constexpr Real operator-(Real a, Real b) { return a.v_ - b.v_; }
  friend constexpr Real operator-(Real a) { return -a.v_; }
  friend constexpr Real operator*(Real a, Real b) { return a.v_ * b.v_; }
  friend constexpr Real operator/(Real a, Real b) { return a.v_ / b.v_; }
  Real& operator+=(Real o) { return *this = *this + o; }
  Real& operator-=(Real o) { return *this = *this - o; }
  Real& operator*=(Real o) { return *this = *this * o; }
  friend constexpr bool operator==(Real, Real) = default;
  constexpr Real inverse() const { return 1.0 / v_; }

  friend std::ostream& operator<<(std::ostream& os, Real a) { return os << a.v_; }

 private:
  double v_ = 0.0;
};

}  // namespace crysrig
