#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "crysrig/group.hpp"

namespace crysrig {

// Element (gamma, copy) of the ground set of M_{Gamma_k, n}. Copies are
// 0-based here; the text format and reports use 1-based indices.
struct GroundElement {
  GroupElement gamma;
  int copy = 0;
};

// A finite subset A of the (infinite) ground set, stored per copy as a
// multiset of group elements, with the generated subgroups Gamma_{A,i} and the
// join Lambda(A) of their translation lattices cached.
class SubsetState {
 public:
  SubsetState(int copies, GroupContext ctx)
      : ctx_(ctx), parts_(static_cast<std::size_t>(copies)), subgroups_(static_cast<std::size_t>(copies)) {
    if (copies < 0) throw std::invalid_argument("negative number of copies");
  }

  static SubsetState from_elements(int copies, GroupContext ctx, std::span<const GroundElement> elements) {
    SubsetState out(copies, ctx);
    for (const GroundElement& e : elements) out.parts_.at(check_copy(out, e.copy)).push_back(e.gamma);
    out.size_ = elements.size();
    out.refresh_all();
    return out;
  }

  const GroupContext& context() const { return ctx_; }
  int copies() const { return static_cast<int>(parts_.size()); }
  std::size_t size() const { return size_; }
  int nonempty_parts() const {
    int c = 0;
    for (const auto& p : parts_) c += p.empty() ? 0 : 1;
    return c;
  }
  std::span<const GroupElement> part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  const SubgroupDescriptor& part_subgroup(int i) const { return subgroups_.at(static_cast<std::size_t>(i)); }
  const Lattice& translation_lattice() const { return lattice_; }

  void insert(const GroupElement& g, int copy) {
    const auto i = check_copy(*this, copy);
    parts_[i].push_back(g);
    ++size_;
    subgroups_[i] = subgroup_from_generators(parts_[i], ctx_);
    lattice_ = lattice_join(lattice_, subgroups_[i].lattice);
  }

  SubsetState with(const GroupElement& g, int copy) const {
    SubsetState out = *this;
    out.insert(g, copy);
    return out;
  }

  std::vector<GroundElement> elements() const {
    std::vector<GroundElement> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      for (const GroupElement& g : parts_[i]) out.push_back({g, static_cast<int>(i)});
    }
    return out;
  }

 private:
  static std::size_t check_copy(const SubsetState& s, int copy) {
    if (copy < 0 || copy >= s.copies()) throw std::out_of_range("copy index " + std::to_string(copy) + " out of range");
    return static_cast<std::size_t>(copy);
  }

  void refresh_all() {
    lattice_ = Lattice{};
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      subgroups_[i] = subgroup_from_generators(parts_[i], ctx_);
      lattice_ = lattice_join(lattice_, subgroups_[i].lattice);
    }
  }

  friend SubsetState conjugate_parts(const SubsetState&, std::span<const GroupElement>);
  friend SubsetState separate(const SubsetState&, int, int, std::span<const std::size_t>);
  friend SubsetState fuse(const SubsetState&, int, int);

  GroupContext ctx_;
  std::vector<std::vector<GroupElement>> parts_;
  std::vector<SubgroupDescriptor> subgroups_;
  Lattice lattice_;
  std::size_t size_ = 0;
};

// g1(A) = n + rep(Lambda(A))/2 - sum_i T(Gamma_{A,i})/2
inline int g1_rank(const SubsetState& a) {
  int t_sum = 0;
  for (int i = 0; i < a.copies(); ++i) t_sum += t_dim(a.part_subgroup(i));
  return a.copies() + rep_dim(a.translation_lattice(), a.context()) / 2 - t_sum / 2;
}

inline bool is_independent(const SubsetState& a) { return static_cast<int>(a.size()) == g1_rank(a); }

inline bool is_tight(const SubsetState& a) {
  return is_independent(a) &&
         static_cast<int>(a.size()) == a.nonempty_parts() + a.context().full_rep() / 2;
}

inline bool is_spanning(const SubsetState& a) {
  return g1_rank(a) == a.nonempty_parts() + a.context().full_rep() / 2;
}

// For independent A: A + (g, copy) is independent iff g lies outside the
// radical of <Gamma_{A,copy}, Lambda(A)>.
inline bool extends_independent(const SubsetState& a, const GroupElement& g, int copy) {
  std::vector<GroupElement> gens = generators(a.part_subgroup(copy));
  for (IVec2 v : a.translation_lattice().basis()) gens.push_back({v, 0});
  SubgroupDescriptor augmented = subgroup_from_generators(gens, a.context());
  return !contains(radical(augmented, a.context()), g, a.context());
}

// A_i -> by_i^-1 A_i by_i for every copy i.
inline SubsetState conjugate_parts(const SubsetState& a, std::span<const GroupElement> by) {
  if (static_cast<int>(by.size()) != a.copies()) throw std::invalid_argument("one conjugating element per copy required");
  SubsetState out = a;
  const GroupContext& ctx = a.context();
  for (std::size_t i = 0; i < out.parts_.size(); ++i) {
    GroupElement inv = inverse(by[i], ctx);
    for (GroupElement& g : out.parts_[i]) g = conjugate(inv, g, ctx);
  }
  out.refresh_all();
  return out;
}

// Moves the listed positions of A_from into the empty copy `to`.
inline SubsetState separate(const SubsetState& a, int from, int to, std::span<const std::size_t> moved) {
  if (from == to) throw std::invalid_argument("separate: copies must differ");
  const auto f = SubsetState::check_copy(a, from);
  const auto t = SubsetState::check_copy(a, to);
  if (!a.parts_[t].empty()) throw std::invalid_argument("separate: target copy must be empty");
  std::vector<bool> take(a.parts_[f].size(), false);
  for (std::size_t idx : moved) {
    if (idx >= take.size()) throw std::out_of_range("separate: element index out of range");
    take[idx] = true;
  }
  SubsetState out = a;
  out.parts_[f].clear();
  for (std::size_t i = 0; i < take.size(); ++i) (take[i] ? out.parts_[t] : out.parts_[f]).push_back(a.parts_[f][i]);
  out.refresh_all();
  return out;
}

// Moves all of A_from into A_into; both must be nonempty.
inline SubsetState fuse(const SubsetState& a, int into, int from) {
  if (into == from) throw std::invalid_argument("fuse: copies must differ");
  const auto i = SubsetState::check_copy(a, into);
  const auto j = SubsetState::check_copy(a, from);
  if (a.parts_[i].empty() || a.parts_[j].empty()) throw std::invalid_argument("fuse: both copies must be nonempty");
  SubsetState out = a;
  out.parts_[i].insert(out.parts_[i].end(), a.parts_[j].begin(), a.parts_[j].end());
  out.parts_[j].clear();
  out.refresh_all();
  return out;
}

struct Conjugation {
  std::vector<GroupElement> by;
};
struct Separation {
  int from = 0;
  int to = 0;
  std::vector<std::size_t> moved;
};
struct Fusion {
  int into = 0;
  int from = 0;
};
using Transform = std::variant<Conjugation, Separation, Fusion>;

inline SubsetState transform(const SubsetState& a, const Transform& mode) {
  struct Visitor {
    const SubsetState& a;
    SubsetState operator()(const Conjugation& c) const { return conjugate_parts(a, c.by); }
    SubsetState operator()(const Separation& s) const { return separate(a, s.from, s.to, s.moved); }
    SubsetState operator()(const Fusion& f) const { return fuse(a, f.into, f.from); }
  };
  return std::visit(Visitor{a}, mode);
}

}  // namespace crysrig
