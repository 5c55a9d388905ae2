#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dessinator/perm.hpp"

namespace dessinator {

inline constexpr std::int64_t kDefaultClosureCap = 1'000'000;

// A fully enumerated permutation group. Elements are kept in the
// deterministic order in which closure() discovered them (identity first).
class PermGroupEnum {
 public:
  PermGroupEnum(int degree, std::vector<Perm> elements, std::vector<Perm> generators);

  static PermGroupEnum trivial(int degree);

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  int index_of(const Perm& p) const;  // position in elements(), -1 if absent
  bool is_abelian() const;

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::unordered_map<Perm, int, PermHash> index_;
};

// Breadth-first multiplicative closure of gens. Returns the full element set
// if the group order is at most cap, std::nullopt otherwise.
std::optional<PermGroupEnum> closure(int degree, const std::vector<Perm>& gens,
                                     std::int64_t cap = kDefaultClosureCap);

// Point stabiliser as an enumerated subgroup; its generator list is the
// deduplicated set of Schreier generators, so it stays small.
PermGroupEnum stabiliser_in(const PermGroupEnum& group, int point);

// Normaliser of sub in group; sub must be a subgroup of group.
PermGroupEnum normaliser_in(const PermGroupEnum& group, const PermGroupEnum& sub);

using BlockSystem = std::vector<std::vector<int>>;

// All distinct minimal non-trivial block systems of a transitive group,
// found by merging the base point with each other point in turn.
std::vector<BlockSystem> minimal_blocks(int degree, const std::vector<Perm>& gens);
bool is_primitive(int degree, const std::vector<Perm>& gens);

}  // namespace dessinator
