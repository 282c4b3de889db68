#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crysrig {

struct IVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr bool is_zero() const { return x == 0 && y == 0; }
  friend constexpr IVec2 operator+(IVec2 a, IVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr IVec2 operator-(IVec2 a, IVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr IVec2 operator-(IVec2 a) { return {-a.x, -a.y}; }
  friend constexpr IVec2 operator*(std::int64_t s, IVec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(IVec2, IVec2) = default;
  friend constexpr auto operator<=>(IVec2, IVec2) = default;
  friend std::ostream& operator<<(std::ostream& os, IVec2 v) {
    return os << "(" << v.x << "," << v.y << ")";
  }
};

// Integer 2x2 matrix [[a, b], [c, d]] acting on lattice coordinates.
struct IMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  constexpr IVec2 operator*(IVec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  constexpr IMat2 operator*(const IMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  constexpr std::int64_t det() const { return a * d - b * c; }
  friend constexpr bool operator==(const IMat2&, const IMat2&) = default;
};

enum class GroupKind { crystallographic, cone };

// The group Gamma_k = Z^2 x| Z/kZ (or the cone group Z/kZ, whose elements
// carry a zero translation part).
class GroupContext {
 public:
  static GroupContext crystallographic(int k) { return GroupContext(GroupKind::crystallographic, k); }
  static GroupContext cone(int k) { return GroupContext(GroupKind::cone, k); }

  int k() const { return k_; }
  GroupKind kind() const { return kind_; }
  bool is_cone() const { return kind_ == GroupKind::cone; }

  // Generator action on Z^2.
  const IMat2& action() const { return powers_[1 % k_]; }
  const IMat2& action_power(int r) const { return powers_[reduce(r)]; }
  IVec2 act(int r, IVec2 v) const { return action_power(r) * v; }
  int reduce(int r) const { return ((r % k_) + k_) % k_; }

  // rep(Lambda(Gamma_k)): dimension of the translation representation space
  // once the rotation center is pinned.
  int full_rep() const {
    if (is_cone()) return 0;
    return k_ == 2 ? 4 : 2;
  }

  // Same group presented with the inverse generator action. Used only to
  // inject a deliberate mismatch with the counterclockwise rotation R_k in
  // self-test fault runs.
  GroupContext with_reversed_action() const {
    GroupContext out = *this;
    out.set_generator(powers_[reduce(-1)]);
    return out;
  }

  std::string name() const { return (is_cone() ? "cone " : "gamma ") + std::to_string(k_); }

  friend bool operator==(const GroupContext& a, const GroupContext& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_ && a.action() == b.action();
  }

 private:
  GroupContext(GroupKind kind, int k) : kind_(kind), k_(k) {
    switch (k) {
      case 2: set_generator({-1, 0, 0, -1}); break;
      case 3: set_generator({0, -1, 1, -1}); break;
      case 4: set_generator({0, -1, 1, 0}); break;
      case 6: set_generator({0, -1, 1, 1}); break;
      default: throw std::invalid_argument("group order must be 2, 3, 4 or 6, got " + std::to_string(k));
    }
  }

  void set_generator(IMat2 m) {
    powers_[0] = IMat2{};
    for (int i = 1; i < k_; ++i) powers_[i] = powers_[i - 1] * m;
  }

  GroupKind kind_;
  int k_;
  std::array<IMat2, 6> powers_{};
};

struct GroupElement {
  IVec2 t;
  int r = 0;

  static constexpr GroupElement identity() { return {}; }
  static constexpr GroupElement translation(std::int64_t x, std::int64_t y) { return {{x, y}, 0}; }
  static constexpr GroupElement rotation(int r) { return {{0, 0}, r}; }

  constexpr bool is_translation() const { return r == 0; }
  constexpr bool is_identity() const { return r == 0 && t.is_zero(); }
  friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
  friend constexpr auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    return os << "(" << g.t << "," << g.r << ")";
  }
};

inline bool is_valid(const GroupElement& g, const GroupContext& ctx) {
  if (g.r < 0 || g.r >= ctx.k()) return false;
  return !ctx.is_cone() || g.t.is_zero();
}

inline GroupElement compose(const GroupElement& a, const GroupElement& b, const GroupContext& ctx) {
  return {a.t + ctx.act(a.r, b.t), ctx.reduce(a.r + b.r)};
}

inline GroupElement inverse(const GroupElement& a, const GroupContext& ctx) {
  return {-ctx.act(-a.r, a.t), ctx.reduce(-a.r)};
}

inline GroupElement power(const GroupElement& a, std::int64_t e, const GroupContext& ctx) {
  GroupElement base = e < 0 ? inverse(a, ctx) : a;
  GroupElement acc;
  for (std::int64_t i = 0, n = e < 0 ? -e : e; i < n; ++i) acc = compose(acc, base, ctx);
  return acc;
}

// g x g^-1
inline GroupElement conjugate(const GroupElement& g, const GroupElement& x, const GroupContext& ctx) {
  return compose(compose(g, x, ctx), inverse(g, ctx), ctx);
}

// ---------------------------------------------------------------------------
// Lattices in Z^2
// ---------------------------------------------------------------------------

// Integer sublattice of Z^2 in row-style Hermite normal form: rank 2 is
// {(a, b), (0, c)} with a, c > 0 and 0 <= b < c; rank 1 is a single row whose
// first nonzero entry is positive.
class Lattice {
 public:
  Lattice() = default;

  static Lattice span(std::span<const IVec2> vectors) {
    std::optional<IVec2> top;
    std::int64_t gy = 0;
    for (IVec2 v : vectors) {
      if (v.x == 0) {
        gy = std::gcd(gy, v.y);
        continue;
      }
      if (!top) {
        top = v;
        continue;
      }
      IVec2 a = *top, b = v;
      while (b.x != 0) {
        std::int64_t q = a.x / b.x;
        a = a - q * b;
        std::swap(a, b);
      }
      top = a;
      gy = std::gcd(gy, b.y);
    }
    Lattice out;
    if (top && top->x < 0) top = -*top;
    gy = std::abs(gy);
    if (top && gy > 0) {
      std::int64_t b = top->y % gy;
      if (b < 0) b += gy;
      out.rows_ = {IVec2{top->x, b}, IVec2{0, gy}};
      out.rank_ = 2;
    } else if (top) {
      out.rows_[0] = *top;
      out.rank_ = 1;
    } else if (gy > 0) {
      out.rows_[0] = {0, gy};
      out.rank_ = 1;
    }
    return out;
  }
  static Lattice span(std::initializer_list<IVec2> vectors) {
    return span(std::span<const IVec2>(vectors.begin(), vectors.size()));
  }
  static Lattice full() { return span({IVec2{1, 0}, IVec2{0, 1}}); }

  int rank() const { return rank_; }
  bool is_trivial() const { return rank_ == 0; }
  std::span<const IVec2> basis() const { return {rows_.data(), static_cast<std::size_t>(rank_)}; }

  bool contains(IVec2 v) const {
    switch (rank_) {
      case 0:
        return v.is_zero();
      case 1: {
        IVec2 b = rows_[0];
        if (b.x != 0) return v.x % b.x == 0 && v.y == (v.x / b.x) * b.y;
        return v.x == 0 && v.y % b.y == 0;
      }
      default: {
        IVec2 p = rows_[0];
        if (v.x % p.x != 0) return false;
        std::int64_t y = v.y - (v.x / p.x) * p.y;
        return y % rows_[1].y == 0;
      }
    }
  }
  bool contains(const Lattice& other) const {
    return std::all_of(other.basis().begin(), other.basis().end(), [&](IVec2 v) { return contains(v); });
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Lattice& l) {
    os << "{";
    for (int i = 0; i < l.rank_; ++i) os << (i ? "," : "") << l.rows_[i];
    return os << "}";
  }

 private:
  std::array<IVec2, 2> rows_{};
  int rank_ = 0;
};

inline Lattice lattice_hnf(std::span<const IVec2> vectors) { return Lattice::span(vectors); }

inline Lattice lattice_join(const Lattice& a, const Lattice& b) {
  std::array<IVec2, 4> rows{};
  std::size_t n = 0;
  for (IVec2 v : a.basis()) rows[n++] = v;
  for (IVec2 v : b.basis()) rows[n++] = v;
  return Lattice::span(std::span<const IVec2>(rows.data(), n));
}

// Smallest lattice containing every vector with a nonzero multiple in `a`.
inline Lattice lattice_saturate(const Lattice& a) {
  if (a.rank() == 2) return Lattice::full();
  if (a.rank() == 0) return a;
  IVec2 v = a.basis()[0];
  std::int64_t g = std::gcd(v.x, v.y);
  return Lattice::span({IVec2{v.x / g, v.y / g}});
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

// A finitely generated subgroup: its translation lattice plus, when it has
// rotations, one element whose rotation class generates the image in Z/kZ.
// The stored rotation's class always divides k.
struct SubgroupDescriptor {
  Lattice lattice;
  std::optional<GroupElement> rotation;

  bool has_rotation() const { return rotation.has_value(); }
  bool is_trivial() const { return lattice.is_trivial() && !rotation; }
};

inline SubgroupDescriptor subgroup_from_generators(std::span<const GroupElement> gens, const GroupContext& ctx) {
  const int k = ctx.k();
  // Combine rotation classes into one element g0 whose class generates the image.
  std::optional<GroupElement> g0;
  int cls = 0;
  for (const GroupElement& s : gens) {
    if (s.r == 0) continue;
    if (!g0) {
      int g = std::gcd(s.r, k);
      for (int a = 1; a < k; ++a) {
        if ((a * s.r) % k == g) {
          g0 = power(s, a, ctx);
          break;
        }
      }
      cls = g;
      continue;
    }
    int target = std::gcd(cls, s.r);
    if (target == cls) continue;
    bool done = false;
    for (int a = 0; a < k && !done; ++a) {
      for (int b = 0; b < k && !done; ++b) {
        if ((a * cls + b * s.r) % k == target) {
          g0 = compose(power(*g0, a, ctx), power(s, b, ctx), ctx);
          done = true;
        }
      }
    }
    cls = target;
  }

  std::vector<IVec2> kernel;
  if (!g0) {
    kernel.reserve(gens.size());
    for (const GroupElement& s : gens) kernel.push_back(s.t);
    return {Lattice::span(kernel), std::nullopt};
  }

  // Schreier generators u_j s u_{j'}^-1 over the transversal u_j = g0^j.
  const int d = k / cls;
  std::vector<GroupElement> transversal(d), transversal_inv(d);
  for (int j = 0; j < d; ++j) {
    transversal[j] = j == 0 ? GroupElement{} : compose(transversal[j - 1], *g0, ctx);
    transversal_inv[j] = inverse(transversal[j], ctx);
  }
  kernel.reserve(static_cast<std::size_t>(d) * (gens.size() + 1));
  auto add_schreier = [&](const GroupElement& s) {
    for (int j = 0; j < d; ++j) {
      GroupElement x = compose(transversal[j], s, ctx);
      kernel.push_back(compose(x, transversal_inv[x.r / cls], ctx).t);
    }
  };
  for (const GroupElement& s : gens) add_schreier(s);
  add_schreier(*g0);
  return {Lattice::span(kernel), g0};
}

inline SubgroupDescriptor subgroup_from_generators(std::initializer_list<GroupElement> gens, const GroupContext& ctx) {
  return subgroup_from_generators(std::span<const GroupElement>(gens.begin(), gens.size()), ctx);
}

// A generating set: the lattice basis as translations, then the rotation.
inline std::vector<GroupElement> generators(const SubgroupDescriptor& d) {
  std::vector<GroupElement> out;
  for (IVec2 v : d.lattice.basis()) out.push_back({v, 0});
  if (d.rotation) out.push_back(*d.rotation);
  return out;
}

inline bool contains(const SubgroupDescriptor& d, const GroupElement& g, const GroupContext& ctx) {
  if (g.r == 0) return d.lattice.contains(g.t);
  if (!d.rotation) return false;
  const int cls = d.rotation->r;
  if (g.r % cls != 0) return false;
  GroupElement rest = compose(inverse(power(*d.rotation, g.r / cls, ctx), ctx), g, ctx);
  return rest.r == 0 && d.lattice.contains(rest.t);
}

inline bool is_subgroup(const SubgroupDescriptor& inner, const SubgroupDescriptor& outer, const GroupContext& ctx) {
  for (const GroupElement& g : generators(inner)) {
    if (!contains(outer, g, ctx)) return false;
  }
  return true;
}

inline bool same_subgroup(const SubgroupDescriptor& a, const SubgroupDescriptor& b, const GroupContext& ctx) {
  return a.lattice == b.lattice && is_subgroup(a, b, ctx) && is_subgroup(b, a, ctx);
}

// g H g^-1
inline SubgroupDescriptor conjugate(const SubgroupDescriptor& d, const GroupElement& g, const GroupContext& ctx) {
  std::vector<GroupElement> gens = generators(d);
  for (GroupElement& x : gens) x = conjugate(g, x, ctx);
  return subgroup_from_generators(gens, ctx);
}

// Subgroup generated by the union of two subgroups.
inline SubgroupDescriptor join(const SubgroupDescriptor& a, const SubgroupDescriptor& b, const GroupContext& ctx) {
  std::vector<GroupElement> gens = generators(a);
  std::vector<GroupElement> more = generators(b);
  gens.insert(gens.end(), more.begin(), more.end());
  return subgroup_from_generators(gens, ctx);
}

// Stabilizer of the center of the rotation `rot` (rot.r != 0): the cyclic
// group of all elements fixing the same point. Its order divides k and may be
// smaller than k when the center is not a k-fold center of Gamma_k.
inline GroupElement rotation_center_stabilizer(const GroupElement& rot, const GroupContext& ctx) {
  // Center c solves (I - M^r) c = t; write c = adj * t / D.
  const IMat2& m = ctx.action_power(rot.r);
  IMat2 a{1 - m.a, -m.b, -m.c, 1 - m.d};
  const std::int64_t det = a.det();
  IMat2 adj{a.d, -a.b, -a.c, a.a};
  IVec2 num = adj * rot.t;
  for (int j = 1; j < ctx.k(); ++j) {
    const IMat2& mj = ctx.action_power(j);
    IMat2 aj{1 - mj.a, -mj.b, -mj.c, 1 - mj.d};
    IVec2 tj = aj * num;
    if (tj.x % det == 0 && tj.y % det == 0) return {{tj.x / det, tj.y / det}, j};
  }
  throw std::logic_error("rotation center stabilizer: no rotation fixes the center");
}

// Largest subgroup with the same rep and T invariants.
inline SubgroupDescriptor radical(const SubgroupDescriptor& d, const GroupContext& ctx) {
  if (ctx.k() == 2) return {lattice_saturate(d.lattice), d.rotation};
  if (d.is_trivial()) return d;
  if (ctx.is_cone()) return {Lattice{}, GroupElement::rotation(1)};
  if (!d.rotation) return {Lattice::full(), std::nullopt};
  if (!d.lattice.is_trivial()) return {Lattice::full(), GroupElement::rotation(1)};
  return {Lattice{}, rotation_center_stabilizer(*d.rotation, ctx)};
}

inline int rep_dim(const Lattice& l, const GroupContext& ctx) {
  if (ctx.is_cone() || l.is_trivial()) return 0;
  return ctx.k() == 2 ? 2 * l.rank() : 2;
}

inline int t_dim(const SubgroupDescriptor& d) { return d.has_rotation() ? 0 : 2; }

inline int cent_dim(const SubgroupDescriptor& d) {
  const bool translations = !d.lattice.is_trivial();
  if (d.has_rotation()) return translations ? 0 : 1;
  return translations ? 2 : 3;
}

inline int teich_dim(const Lattice& l, const GroupContext& ctx) {
  return l.is_trivial() ? 0 : rep_dim(l, ctx) - 1;
}

}  // namespace crysrig
