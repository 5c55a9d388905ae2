#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dessinator/objects.hpp"

namespace dessinator {

// The automorphism group of a connected object: the centraliser of its
// monodromy group. It acts regularly on phi, the set of points whose
// stabiliser is exactly the stabiliser of the base point, so each element is
// determined by where it sends the base point.
struct AutGroup {
  int base_point = 1;
  std::vector<int> phi;                    // sorted ascending; contains base_point
  std::vector<Perm> maps;                  // maps[i] sends base_point to phi[i]
  std::int64_t order = 0;                  // == phi.size()
  std::vector<Perm> generating_set;        // greedy minimal-ish, deterministic
  std::optional<std::vector<std::int64_t>> abelian_invariants;  // cyclic factor orders, d1 | d2 | ...
};

// The unique generator-commuting map sending alpha to beta, grown by BFS
// over the Schreier graph of src; std::nullopt when the forced map conflicts
// or fails to be a bijection. src must be connected.
std::optional<Perm> transporter(const PCObject& src, const PCObject& dst, int alpha, int beta);

AutGroup compute_aut(const PCObject& obj, int base_point = 1);

// Scans all degree! permutations for the centraliser; the oracle the fast
// path is tested against.
std::vector<Perm> aut_bruteforce(const PCObject& obj, int degree_limit = 8);

struct CrosscheckReport {
  std::int64_t c_order = 0;
  std::int64_t normaliser_order = 0;
  std::int64_t stabiliser_order = 0;
  bool consistent = false;
};

// Recomputes the automorphism count as |N(H)|/|H| inside the enumerated
// monodromy group and checks phi against exact-stabiliser and fixed-point
// descriptions; std::nullopt when the group order exceeds cap.
std::optional<CrosscheckReport> theorem_crosscheck(const PCObject& obj, int alpha,
                                                   std::int64_t cap = kDefaultClosureCap);

// Point-relabelling bijection commuting with the generators, if one exists.
// Both objects must be connected and in the same category.
std::optional<Perm> isomorphism(const PCObject& a, const PCObject& b);

bool is_regular_object(const PCObject& obj);

}  // namespace dessinator
