#include "dessinator/autgroup.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

#include "dessinator/numeric.hpp"

namespace dessinator {

namespace {

void require_connected(const PCObject& obj, const char* who) {
  if (!is_connected(obj)) throw error(std::string(who) + " requires a connected object");
}

}  // namespace

std::optional<Perm> transporter(const PCObject& src, const PCObject& dst, int alpha, int beta) {
  if (src.category() != dst.category()) throw error("transporter requires matching categories");
  const int n = src.degree();
  if (alpha < 1 || alpha > n) throw error("alpha out of range");
  if (beta < 1 || beta > dst.degree()) throw error("beta out of range");
  if (n != dst.degree()) return std::nullopt;

  // Force image[w . g] = image[w] . g along a BFS of src from alpha.
  std::vector<int> image(n + 1, 0);
  image[alpha] = beta;
  std::queue<int> todo;
  todo.push(alpha);
  int reached = 1;
  const int arity = static_cast<int>(src.gens().size());
  while (!todo.empty()) {
    int w = todo.front();
    todo.pop();
    for (int j = 0; j < arity; ++j) {
      int w2 = src.gen(j)(w);
      int t2 = dst.gen(j)(image[w]);
      if (image[w2] == 0) {
        image[w2] = t2;
        todo.push(w2);
        ++reached;
      } else if (image[w2] != t2) {
        return std::nullopt;
      }
    }
  }
  if (reached != n) throw error("transporter requires src connected from alpha");

  std::vector<char> hit(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (hit[image[i]]) return std::nullopt;  // not injective
    hit[image[i]] = 1;
  }
  return Perm::from_images(std::vector<int>(image.begin() + 1, image.end()));
}

namespace {

// Greedy generating set: walk the maps in order and keep those outside the
// closure of what was already kept.
std::vector<Perm> greedy_generating_set(int degree, const std::vector<Perm>& maps) {
  std::vector<Perm> gens;
  std::int64_t generated = 1;
  const std::int64_t target = static_cast<std::int64_t>(maps.size());
  for (const Perm& m : maps) {
    if (generated == target) break;
    if (m.is_identity()) continue;
    auto grown = closure(degree, [&] {
      std::vector<Perm> next = gens;
      next.push_back(m);
      return next;
    }());
    if (!grown) throw error("generating-set closure exceeded its cap");
    if (grown->order() > generated) {
      gens.push_back(m);
      generated = grown->order();
    }
  }
  if (generated != target) throw error("map set does not close into a group");
  return gens;
}

// Invariant factors of a finite abelian group given its element orders:
// counting solutions of c^(p^j) = 1 determines the p-primary cyclic factors.
std::vector<std::int64_t> abelian_invariant_factors(const std::vector<std::int64_t>& orders) {
  const std::int64_t size = static_cast<std::int64_t>(orders.size());
  std::map<std::int64_t, std::vector<std::int64_t>> primary;  // prime -> cyclic factor orders

  std::int64_t remaining = size;
  for (std::int64_t p = 2; remaining > 1; ++p) {
    if (remaining % p != 0) continue;
    while (remaining % p == 0) remaining /= p;

    std::vector<std::int64_t> exponent_counts;  // a_j: log_p of |{c : ord(c) divides p^j}|
    exponent_counts.push_back(0);
    for (std::int64_t pj = p;; pj = checked_mul(pj, p)) {
      std::int64_t count = 0;
      for (std::int64_t o : orders) {
        if (pj % o == 0) ++count;
      }
      std::int64_t a = 0;
      std::int64_t v = count;
      while (v > 1) {
        if (v % p != 0) throw error("abelian order count is not a prime power");
        v /= p;
        ++a;
      }
      exponent_counts.push_back(a);
      if (exponent_counts[exponent_counts.size() - 1] ==
          exponent_counts[exponent_counts.size() - 2]) {
        break;  // no elements of larger p-power order
      }
    }
    // m_j = a_j - a_{j-1} cyclic factors have order >= p^j
    std::vector<std::int64_t> m;
    for (std::size_t j = 1; j < exponent_counts.size(); ++j) {
      m.push_back(exponent_counts[j] - exponent_counts[j - 1]);
    }
    std::vector<std::int64_t> factors;
    std::int64_t pj = 1;
    for (std::size_t j = 0; j < m.size(); ++j) {
      pj = checked_mul(pj, p);
      std::int64_t exactly = m[j] - (j + 1 < m.size() ? m[j + 1] : 0);
      for (std::int64_t k = 0; k < exactly; ++k) factors.push_back(pj);
    }
    if (!factors.empty()) primary[p] = std::move(factors);
  }

  // Merge primary parts into invariant factors d1 | d2 | ... | dk.
  std::vector<std::int64_t> invariants;
  while (true) {
    std::int64_t d = 1;
    for (auto& [p, factors] : primary) {
      if (!factors.empty()) {
        d = checked_mul(d, factors.back());
        factors.pop_back();
      }
    }
    if (d == 1) break;
    invariants.push_back(d);
  }
  std::reverse(invariants.begin(), invariants.end());

  std::int64_t product = 1;
  for (std::int64_t d : invariants) product = checked_mul(product, d);
  if (product != size) throw error("abelian invariant factors do not multiply to the order");
  return invariants;
}

void assert_aut_postconditions(const PCObject& obj, const AutGroup& aut) {
  const int n = obj.degree();

  // the base point's map is the identity
  auto base_pos = std::find(aut.phi.begin(), aut.phi.end(), aut.base_point);
  if (base_pos == aut.phi.end() ||
      !aut.maps[base_pos - aut.phi.begin()].is_identity()) {
    throw error("automorphism set is missing the identity at the base point");
  }

  // every map commutes with every generator and is fixed-point-free unless trivial
  for (const Perm& c : aut.maps) {
    for (const Perm& g : obj.gens()) {
      for (int i = 1; i <= n; ++i) {
        if (g(c(i)) != c(g(i))) throw error("automorphism fails to commute with a generator");
      }
    }
    if (!c.is_identity()) {
      for (int i = 1; i <= n; ++i) {
        if (c(i) == i) throw error("non-trivial automorphism has a fixed point");
      }
    }
  }

  // group closure and regularity on phi, guarded by cost
  const std::int64_t pairs = aut.order * aut.order;
  if (pairs * n <= 100'000'000) {
    std::unordered_set<Perm, PermHash> set(aut.maps.begin(), aut.maps.end());
    for (const Perm& a : aut.maps) {
      for (const Perm& b : aut.maps) {
        Perm ab = compose(a, b);
        if (set.find(ab) == set.end()) throw error("automorphism set is not closed");
        // regularity: the composite is the unique map carrying base to its image
        int target = ab(aut.base_point);
        auto pos = std::lower_bound(aut.phi.begin(), aut.phi.end(), target);
        if (pos == aut.phi.end() || *pos != target ||
            aut.maps[pos - aut.phi.begin()] != ab) {
          throw error("automorphism action on phi is not regular");
        }
      }
    }
  }
}

}  // namespace

AutGroup compute_aut(const PCObject& obj, int base_point) {
  const int n = obj.degree();
  if (base_point < 1 || base_point > n) throw error("base point out of range");
  require_connected(obj, "compute_aut");

  AutGroup aut;
  aut.base_point = base_point;
  for (int beta = 1; beta <= n; ++beta) {
    if (auto t = transporter(obj, obj, base_point, beta)) {
      aut.phi.push_back(beta);
      aut.maps.push_back(std::move(*t));
    }
  }
  aut.order = static_cast<std::int64_t>(aut.phi.size());
  assert_aut_postconditions(obj, aut);

  aut.generating_set = greedy_generating_set(n, aut.maps);

  bool abelian = true;
  for (std::size_t i = 0; i < aut.generating_set.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < aut.generating_set.size(); ++j) {
      if (compose(aut.generating_set[i], aut.generating_set[j]) !=
          compose(aut.generating_set[j], aut.generating_set[i])) {
        abelian = false;
        break;
      }
    }
  }
  if (abelian && aut.order <= 10'000) {
    std::vector<std::int64_t> orders;
    orders.reserve(aut.maps.size());
    for (const Perm& c : aut.maps) orders.push_back(c.order());
    aut.abelian_invariants = abelian_invariant_factors(orders);
  }
  return aut;
}

std::vector<Perm> aut_bruteforce(const PCObject& obj, int degree_limit) {
  const int n = obj.degree();
  if (n > degree_limit) throw error("aut_bruteforce degree limit exceeded");

  std::vector<Perm> result;
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    bool commutes = true;
    for (const Perm& g : obj.gens()) {
      for (int i = 1; i <= n && commutes; ++i) {
        if (images[g(i) - 1] != g(images[i - 1])) commutes = false;
      }
      if (!commutes) break;
    }
    if (commutes) result.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::optional<CrosscheckReport> theorem_crosscheck(const PCObject& obj, int alpha,
                                                   std::int64_t cap) {
  require_connected(obj, "theorem_crosscheck");
  auto group = monodromy_group(obj, cap);
  if (!group) return std::nullopt;

  PermGroupEnum h = stabiliser_in(*group, alpha);
  PermGroupEnum norm = normaliser_in(*group, h);
  AutGroup aut = compute_aut(obj, alpha);

  CrosscheckReport report;
  report.c_order = aut.order;
  report.stabiliser_order = h.order();
  report.normaliser_order = norm.order();
  if (norm.order() % h.order() != 0) throw error("Lagrange violation in normaliser");

  // phi as the set of points with stabiliser exactly h
  std::vector<int> exact_stab;
  for (int beta = 1; beta <= obj.degree(); ++beta) {
    std::int64_t size = 0;
    bool inside = true;
    for (const Perm& g : group->elements()) {
      if (g(beta) == beta) {
        ++size;
        if (!h.contains(g)) {
          inside = false;
          break;
        }
      }
    }
    if (inside && size == h.order()) exact_stab.push_back(beta);
  }

  // phi as the fixed-point set of h
  std::vector<int> fixed;
  for (int beta = 1; beta <= obj.degree(); ++beta) {
    bool all = true;
    for (const Perm& g : h.elements()) {
      if (g(beta) != beta) {
        all = false;
        break;
      }
    }
    if (all) fixed.push_back(beta);
  }

  report.consistent = (report.normaliser_order / report.stabiliser_order == aut.order) &&
                      exact_stab == aut.phi && fixed == aut.phi;
  return report;
}

std::optional<Perm> isomorphism(const PCObject& a, const PCObject& b) {
  if (a.category() != b.category()) throw error("isomorphism requires matching categories");
  require_connected(a, "isomorphism");
  if (a.degree() != b.degree()) return std::nullopt;
  for (int beta = 1; beta <= b.degree(); ++beta) {
    if (auto t = transporter(a, b, 1, beta)) return t;
  }
  return std::nullopt;
}

bool is_regular_object(const PCObject& obj) {
  return compute_aut(obj, 1).order == obj.degree();
}

}  // namespace dessinator
