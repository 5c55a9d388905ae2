#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dessinator/objects.hpp"

namespace dessinator {

// A finitely presented group. Relator letters are signed 1-based generator
// indices, negative for inverses, applied left to right.
struct GroupPresentation {
  int num_generators = 0;
  std::vector<std::vector<int>> relators;
  std::string label;
};

class FpMatrix {
 public:
  FpMatrix(int rows, int cols, std::int64_t p);  // p must be prime

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t modulus() const { return p_; }
  std::int64_t& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_;
  int cols_;
  std::int64_t p_;
  std::vector<std::int64_t> entries_;
};

int modp_rank(FpMatrix m);

// Row per relator, column per generator, entries are exponent sums mod p.
FpMatrix exponent_matrix(const GroupPresentation& pres, std::int64_t p);

// Number of normal subgroups of index p: epimorphisms to C_p up to
// automorphism, i.e. (p^r - 1)/(p - 1) with r the corank of the exponent
// matrix mod p.
std::int64_t count_index_p_normal(const GroupPresentation& pres, std::int64_t p);

GroupPresentation free_group(int rank);
GroupPresentation oriented_map_parent();  // C_inf * C_2
GroupPresentation hypermap_parent();      // C_2 * C_2 * C_2
GroupPresentation map_parent();           // V_4 * C_2
GroupPresentation parent_presentation(Category c);

GroupPresentation orientable_surface(int genus);
GroupPresentation nonorientable_surface(int genus);

// Triangle signatures use 0 for an infinite entry.
GroupPresentation triangle_group(int p, int q, int r);
GroupPresentation extended_triangle_group(int p, int q, int r);

std::vector<GroupPresentation> builtin_presentations();

// Accepts "f2", "dessin", "oriented-map", "cinf_c2", "hypermap", "c2_c2_c2",
// "map", "v4_c2", "orientable_surface(g)", "nonorientable_surface(g)",
// "triangle(p,q,r)" and "extended_triangle(p,q,r)" ("inf" for an infinite
// entry).
GroupPresentation presentation_by_name(std::string_view name);

// All degree-p objects with monodromy C_p = <(1 2 ... p)> in the category,
// one per kernel of an epimorphism from the parent group, in deterministic
// order. Every returned object is connected and regular with p automorphisms.
std::vector<PCObject> enumerate_cp_objects(Category category, std::int64_t p);

// All dessins of the given degree up to isomorphism, via canonical forms:
// the lexicographic minimum of the concatenated generator image tables over
// all relabellings (search anchored by breadth-first labellings for degree
// 6 and up).
std::vector<PCObject> enumerate_dessins(int degree, bool connected_only, int degree_limit = 7);
std::vector<int> dessin_canonical_form(const PCObject& dessin);

struct DixonEstimate {
  int degree = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double fraction_sym_or_alt = 0.0;
};

// Monte Carlo estimate of the probability that two uniform random
// permutations generate the symmetric or alternating group. Sample streams
// are derived from (seed, sample index), so results are reproducible.
DixonEstimate dixon_estimate(int degree, int samples, std::uint64_t seed);

}  // namespace dessinator
