#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dessinator/error.hpp"

namespace dessinator {

// A permutation of {1..n}, stored as an image table. Points are 1-based
// throughout the public interface.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity

  // images[i-1] is the image of point i; must be a bijection on 1..n.
  static Perm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }

  bool is_identity() const;
  Perm inverse() const;
  std::int64_t order() const;  // lcm of cycle lengths

  // Cycles in canonical order: least element first within each cycle,
  // cycles sorted by least element.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
  int cycle_count() const;  // counts fixed points as 1-cycles

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

// Right-action composition: apply p first, then q, so compose(p, q)(i) == q(p(i)).
Perm compose(const Perm& p, const Perm& q);

// Relabels p by g: the result sends g(i) to g(p(i)), i.e. g^-1 p g as a right action.
Perm conjugate(const Perm& p, const Perm& g);

Perm perm_power(const Perm& p, std::int64_t exponent);

Perm full_cycle(int degree);  // (1 2 ... n)

// Cycle notation: "(1 2 3)(4 5)", separators are spaces or commas, fixed
// points may be omitted, the empty string is the identity. Singleton cycles
// are tolerated on input and never produced on output.
Perm parse_cycles(std::string_view text, int degree);
std::string print_cycles(const Perm& p);

std::vector<int> orbit(int degree, const std::vector<Perm>& gens, int point);
std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& gens);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace dessinator
