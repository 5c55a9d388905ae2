#include "dessinator/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_set>

namespace dessinator {

PermGroupEnum::PermGroupEnum(int degree, std::vector<Perm> elements, std::vector<Perm> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
  if (elements_.empty()) throw error("enumerated group needs at least the identity");
  index_.reserve(elements_.size() * 2);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
    if (elements_[i].degree() != degree_) throw error("degree mismatch in enumerated group");
    if (!index_.emplace(elements_[i], i).second) throw error("duplicate group element");
  }
  if (index_.find(Perm(degree_)) == index_.end()) throw error("identity missing from group");
  for (const Perm& g : generators_) {
    if (index_.find(g) == index_.end()) throw error("generator outside element set");
  }
}

PermGroupEnum PermGroupEnum::trivial(int degree) {
  return PermGroupEnum(degree, {Perm(degree)}, {});
}

int PermGroupEnum::index_of(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

bool PermGroupEnum::is_abelian() const {
  const std::vector<Perm>& gens = generators_.empty() ? elements_ : generators_;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    }
  }
  return true;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::optional<PermGroupEnum> closure(int degree, const std::vector<Perm>& gens, std::int64_t cap) {
  if (cap < 1) throw error("closure cap must be positive");
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw error("degree mismatch in closure");
  }

  std::unordered_map<std::vector<int>, int, VecHash> seen;
  std::vector<Perm> elements;
  elements.emplace_back(degree);
  seen.emplace(elements[0].images(), 0);

  std::vector<int> scratch(degree);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    // elements can reallocate while we iterate, so index rather than iterate by reference
    for (const Perm& g : gens) {
      const std::vector<int>& w = elements[head].images();
      for (int i = 0; i < degree; ++i) scratch[i] = g(w[i]);
      if (seen.find(scratch) != seen.end()) continue;
      if (static_cast<std::int64_t>(elements.size()) + 1 > cap) return std::nullopt;
      elements.push_back(Perm::from_images(scratch));
      seen.emplace(elements.back().images(), static_cast<int>(elements.size()) - 1);
    }
  }
  return PermGroupEnum(degree, std::move(elements), gens);
}

PermGroupEnum stabiliser_in(const PermGroupEnum& group, int point) {
  const int n = group.degree();
  if (point < 1 || point > n) throw error("stabiliser point out of range");

  std::vector<Perm> elements;
  for (const Perm& g : group.elements()) {
    if (g(point) == point) elements.push_back(g);
  }

  // Schreier generators from a BFS transversal of the orbit of point.
  std::vector<int> rep_index(n + 1, -1);  // rep_index[w]: transversal element sending point to w
  std::vector<Perm> transversal;
  transversal.emplace_back(n);
  rep_index[point] = 0;
  std::queue<int> todo;
  todo.push(point);
  std::int64_t orbit_size = 1;
  std::vector<Perm> schreier;
  std::unordered_set<Perm, PermHash> schreier_seen;
  while (!todo.empty()) {
    int w = todo.front();
    todo.pop();
    for (const Perm& g : group.generators()) {
      int u = g(w);
      if (rep_index[u] < 0) {
        rep_index[u] = static_cast<int>(transversal.size());
        transversal.push_back(compose(transversal[rep_index[w]], g));
        todo.push(u);
        ++orbit_size;
      } else {
        Perm s = compose(compose(transversal[rep_index[w]], g), transversal[rep_index[u]].inverse());
        if (!s.is_identity() && schreier_seen.insert(s).second) schreier.push_back(std::move(s));
      }
    }
  }

  if (orbit_size * static_cast<std::int64_t>(elements.size()) != group.order()) {
    throw error("orbit-stabiliser mismatch: generator list does not generate the group");
  }
  return PermGroupEnum(n, std::move(elements), std::move(schreier));
}

PermGroupEnum normaliser_in(const PermGroupEnum& group, const PermGroupEnum& sub) {
  if (sub.degree() != group.degree()) throw error("degree mismatch in normaliser");
  for (const Perm& s : sub.elements()) {
    if (!group.contains(s)) throw error("sub is not a subset of group");
  }
  const std::vector<Perm>& sub_gens = sub.generators().empty() ? sub.elements() : sub.generators();

  // g normalises sub iff conjugation by g maps a generating set into sub.
  std::vector<Perm> elements;
  for (const Perm& g : group.elements()) {
    const Perm g_inv = g.inverse();
    bool ok = true;
    for (const Perm& s : sub_gens) {
      if (!sub.contains(compose(compose(g_inv, s), g))) {
        ok = false;
        break;
      }
    }
    if (ok) elements.push_back(g);
  }
  std::vector<Perm> gens = elements;
  return PermGroupEnum(group.degree(), std::move(elements), std::move(gens));
}

namespace {

int uf_find(std::vector<int>& parent, int a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

// Minimal G-congruence identifying seed_a and seed_b (Atkinson's algorithm).
std::vector<int> minimal_congruence(int degree, const std::vector<Perm>& gens, int seed_a,
                                    int seed_b) {
  std::vector<int> parent(degree + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::queue<int> merged;  // class representatives that lost a union

  auto unite = [&](int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a == b) return 0;
    if (a > b) std::swap(a, b);  // keep the smaller point as representative
    parent[b] = a;
    return b;
  };

  if (int r = unite(seed_a, seed_b)) merged.push(r);
  while (!merged.empty()) {
    int gamma = merged.front();
    merged.pop();
    int delta = uf_find(parent, gamma);
    for (const Perm& g : gens) {
      if (int r = unite(g(gamma), g(delta))) merged.push(r);
    }
  }

  std::vector<int> cls(degree + 1);
  for (int i = 1; i <= degree; ++i) cls[i] = uf_find(parent, i);
  return cls;
}

BlockSystem congruence_blocks(int degree, const std::vector<int>& cls) {
  std::vector<std::vector<int>> by_rep(degree + 1);
  for (int i = 1; i <= degree; ++i) by_rep[cls[i]].push_back(i);
  BlockSystem blocks;
  for (int r = 1; r <= degree; ++r) {
    if (!by_rep[r].empty()) blocks.push_back(std::move(by_rep[r]));
  }
  return blocks;
}

}  // namespace

std::vector<BlockSystem> minimal_blocks(int degree, const std::vector<Perm>& gens) {
  if (static_cast<int>(orbit(degree, gens, 1).size()) != degree) {
    throw error("minimal_blocks requires a transitive group");
  }
  std::set<BlockSystem> distinct;
  for (int k = 2; k <= degree; ++k) {
    std::vector<int> cls = minimal_congruence(degree, gens, 1, k);
    BlockSystem blocks = congruence_blocks(degree, cls);
    if (blocks.size() >= 2) distinct.insert(std::move(blocks));
  }
  return {distinct.begin(), distinct.end()};
}

bool is_primitive(int degree, const std::vector<Perm>& gens) {
  return minimal_blocks(degree, gens).empty();
}

}  // namespace dessinator
