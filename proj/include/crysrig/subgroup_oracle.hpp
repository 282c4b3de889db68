#pragma once

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <span>
#include <stdexcept>
#include <vector>

#include "crysrig/group.hpp"

namespace crysrig {

// Brute-force subgroup membership: breadth-first closure of the generators
// (and their inverses) restricted to elements whose translation part lies in
// the box [-B, B]^2. Words that leave the box are discarded, so the closure is
// a subset of the subgroup; for elements near the origin and generators small
// relative to B it is the full intersection in practice. Used to check the
// exact descriptors, never by them.
class BoundedClosure {
 public:
  BoundedClosure(std::span<const GroupElement> gens, const GroupContext& ctx, int box)
      : ctx_(ctx), box_(box), side_(2 * box + 1),
        seen_(static_cast<std::size_t>(side_) * side_ * ctx.k(), 0) {
    std::vector<GroupElement> steps;
    for (const GroupElement& g : gens) {
      steps.push_back(g);
      steps.push_back(inverse(g, ctx));
    }
    std::deque<GroupElement> queue{GroupElement{}};
    seen_[index(GroupElement{})] = 1;
    while (!queue.empty()) {
      GroupElement x = queue.front();
      queue.pop_front();
      for (const GroupElement& s : steps) {
        GroupElement y = compose(x, s, ctx);
        if (!in_box(y)) continue;
        std::uint8_t& flag = seen_[index(y)];
        if (flag) continue;
        flag = 1;
        queue.push_back(y);
      }
    }
  }

  int box() const { return box_; }

  bool in_box(const GroupElement& g) const { return std::abs(g.t.x) <= box_ && std::abs(g.t.y) <= box_; }

  bool contains(const GroupElement& g) const {
    if (!in_box(g)) throw std::out_of_range("element outside the enumeration box");
    return seen_[index(g)] != 0;
  }

  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    for (int x = -box_; x <= box_; ++x) {
      for (int y = -box_; y <= box_; ++y) {
        for (int r = 0; r < ctx_.k(); ++r) {
          GroupElement g{{x, y}, r};
          if (contains(g)) out.push_back(g);
        }
      }
    }
    return out;
  }

  bool has_rotation() const {
    for (const GroupElement& g : elements()) {
      if (g.r != 0) return true;
    }
    return false;
  }

  // Translation parts of the found translations span this lattice.
  Lattice translation_lattice() const {
    std::vector<IVec2> ts;
    for (const GroupElement& g : elements()) {
      if (g.r == 0) ts.push_back(g.t);
    }
    return Lattice::span(ts);
  }

 private:
  std::size_t index(const GroupElement& g) const {
    return (static_cast<std::size_t>(g.t.x + box_) * side_ + static_cast<std::size_t>(g.t.y + box_)) * ctx_.k() +
           static_cast<std::size_t>(g.r);
  }

  GroupContext ctx_;
  int box_;
  int side_;
  std::vector<std::uint8_t> seen_;
};

// rep - T of the subgroup generated by `gens`, read off a bounded closure.
inline int oracle_rep_minus_t(std::span<const GroupElement> gens, const GroupContext& ctx, int box) {
  BoundedClosure closure(gens, ctx, box);
  return rep_dim(closure.translation_lattice(), ctx) - (closure.has_rotation() ? 0 : 2);
}

}  // namespace crysrig
