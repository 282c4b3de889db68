#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "crysrig/field.hpp"
#include "crysrig/group.hpp"

namespace crysrig {

template <class F>
struct Vec2 {
  F x{};
  F y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const F& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

// Counterclockwise quarter turn: (x, y) -> (-y, x).
template <class F>
Vec2<F> perp(const Vec2<F>& v) {
  return {-v.y, v.x};
}

template <class F>
F dot(const Vec2<F>& a, const Vec2<F>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class F>
struct Mat2 {
  F a{}, b{}, c{}, d{};  // [[a, b], [c, d]]

  static Mat2 identity() { return {F::one(), F::zero(), F::zero(), F::one()}; }
  Vec2<F> operator*(const Vec2<F>& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 transpose() const { return {a, c, b, d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// R_k^r, the counterclockwise rotation by 2*pi*r/k, with entries in F.
// Orders 3 and 6 need sqrt(3) in F.
template <class F>
Mat2<F> rotation_power(int k, int r) {
  r = ((r % k) + k) % k;
  Mat2<F> gen;
  const F one = F::one(), zero = F::zero();
  switch (k) {
    case 2: gen = {-one, zero, zero, -one}; break;
    case 4: gen = {zero, -one, one, zero}; break;
    case 3:
    case 6: {
      if constexpr (!F::kHasSqrt3) {
        throw std::invalid_argument("rotation of order " + std::to_string(k) + " needs sqrt(3) in the field");
      } else {
        const F half = F::from_int(2).inverse();
        const F s = F::sqrt3() * half;
        const F c = k == 3 ? -half : half;
        gen = {c, -s, s, c};
      }
      break;
    }
    default: throw std::invalid_argument("unsupported rotation order " + std::to_string(k));
  }
  Mat2<F> out = Mat2<F>::identity();
  for (int i = 0; i < r; ++i) out = out * gen;
  return out;
}

// A realization with the rotation center pinned at the origin:
// Phi(t, r) p = R^r p + t.x v1 + t.y v2. For k = 3, 4, 6 the representation
// is determined by v1 and v2 = R v1; for cone graphs v1 = v2 = 0.
template <class F>
struct Realization {
  std::vector<Vec2<F>> points;
  Vec2<F> v1{};
  Vec2<F> v2{};
};

template <class F>
Vec2<F> translation_image(const Realization<F>& rz, IVec2 t) {
  return F::from_int(t.x) * rz.v1 + F::from_int(t.y) * rz.v2;
}

template <class F>
Vec2<F> apply(const GroupContext& ctx, const GroupElement& g, const Realization<F>& rz, const Vec2<F>& p) {
  return rotation_power<F>(ctx.k(), g.r) * p + translation_image(rz, g.t);
}

}  // namespace crysrig
