#include "dessinator/counting.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <unordered_map>

#include "dessinator/numeric.hpp"

namespace dessinator {

FpMatrix::FpMatrix(int rows, int cols, std::int64_t p) : rows_(rows), cols_(cols), p_(p) {
  if (rows < 0 || cols < 0) throw error("negative matrix dimensions");
  if (!is_prime(p)) throw error("modulus must be prime");
  entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

int modp_rank(FpMatrix m) {
  const std::int64_t p = m.modulus();
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int row = rank; row < m.rows(); ++row) {
      if (m.at(row, col) % p != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(rank, c), m.at(pivot, c));

    // scale the pivot row to 1 via the inverse of the pivot (Fermat)
    std::int64_t inv = 1, base = ((m.at(rank, col) % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int c = 0; c < m.cols(); ++c) m.at(rank, c) = ((m.at(rank, c) * inv) % p + p) % p;
    for (int row = 0; row < m.rows(); ++row) {
      if (row == rank || m.at(row, col) % p == 0) continue;
      std::int64_t f = m.at(row, col) % p;
      for (int c = 0; c < m.cols(); ++c) {
        m.at(row, c) = ((m.at(row, c) - f * m.at(rank, c)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

FpMatrix exponent_matrix(const GroupPresentation& pres, std::int64_t p) {
  FpMatrix m(static_cast<int>(pres.relators.size()), pres.num_generators, p);
  for (int r = 0; r < m.rows(); ++r) {
    for (int letter : pres.relators[r]) {
      int g = std::abs(letter);
      if (g < 1 || g > pres.num_generators) throw error("relator letter out of range");
      std::int64_t& e = m.at(r, g - 1);
      e = ((e + (letter > 0 ? 1 : -1)) % p + p) % p;
    }
  }
  return m;
}

std::int64_t count_index_p_normal(const GroupPresentation& pres, std::int64_t p) {
  if (pres.num_generators < 0) throw error("negative generator count");
  FpMatrix m = exponent_matrix(pres, p);
  const int corank = pres.num_generators - modp_rank(std::move(m));
  return (checked_pow(p, corank) - 1) / (p - 1);
}

GroupPresentation free_group(int rank) {
  if (rank < 0) throw error("negative rank");
  return {rank, {}, "F_" + std::to_string(rank)};
}

GroupPresentation oriented_map_parent() {
  return {2, {{2, 2}}, "C_inf * C_2"};
}

GroupPresentation hypermap_parent() {
  return {3, {{1, 1}, {2, 2}, {3, 3}}, "C_2 * C_2 * C_2"};
}

GroupPresentation map_parent() {
  return {3, {{1, 1}, {2, 2}, {3, 3}, {3, 1, 3, 1}}, "V_4 * C_2"};
}

GroupPresentation parent_presentation(Category c) {
  switch (c) {
    case Category::Dessin: return free_group(2);
    case Category::OrientedMap: return oriented_map_parent();
    case Category::Hypermap: return hypermap_parent();
    case Category::Map: return map_parent();
  }
  throw error("unknown category");
}

GroupPresentation orientable_surface(int genus) {
  if (genus < 0) throw error("negative genus");
  GroupPresentation pres;
  pres.num_generators = 2 * genus;
  std::vector<int> relator;
  for (int i = 1; i <= genus; ++i) {
    int a = 2 * i - 1, b = 2 * i;
    relator.insert(relator.end(), {a, b, -a, -b});
  }
  if (!relator.empty()) pres.relators.push_back(std::move(relator));
  pres.label = "orientable_surface(" + std::to_string(genus) + ")";
  return pres;
}

GroupPresentation nonorientable_surface(int genus) {
  if (genus < 1) throw error("non-orientable genus must be >= 1");
  GroupPresentation pres;
  pres.num_generators = genus;
  std::vector<int> relator;
  for (int i = 1; i <= genus; ++i) relator.insert(relator.end(), {i, i});
  pres.relators.push_back(std::move(relator));
  pres.label = "nonorientable_surface(" + std::to_string(genus) + ")";
  return pres;
}

namespace {

std::string signature_text(int p, int q, int r) {
  auto entry = [](int v) { return v == 0 ? std::string("inf") : std::to_string(v); };
  return entry(p) + "," + entry(q) + "," + entry(r);
}

void check_signature(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw error("triangle entries must be 0 (infinite) or positive");
  if (p == 1 || q == 1 || r == 1) throw error("triangle entries must be at least 2");
}

}  // namespace

GroupPresentation triangle_group(int p, int q, int r) {
  check_signature(p, q, r);
  GroupPresentation pres;
  pres.num_generators = 3;
  pres.relators.push_back({1, 2, 3});  // xyz = 1
  const int orders[3] = {p, q, r};
  for (int i = 0; i < 3; ++i) {
    if (orders[i] == 0) continue;
    pres.relators.push_back(std::vector<int>(orders[i], i + 1));
  }
  pres.label = "triangle(" + signature_text(p, q, r) + ")";
  return pres;
}

GroupPresentation extended_triangle_group(int p, int q, int r) {
  check_signature(p, q, r);
  GroupPresentation pres;
  pres.num_generators = 3;
  pres.relators = {{1, 1}, {2, 2}, {3, 3}};
  const std::vector<int> pairs[3] = {{2, 3}, {3, 1}, {1, 2}};  // r1r2, r2r0, r0r1
  const int orders[3] = {p, q, r};
  for (int i = 0; i < 3; ++i) {
    if (orders[i] == 0) continue;
    std::vector<int> word;
    for (int k = 0; k < orders[i]; ++k) word.insert(word.end(), pairs[i].begin(), pairs[i].end());
    pres.relators.push_back(std::move(word));
  }
  pres.label = "extended_triangle(" + signature_text(p, q, r) + ")";
  return pres;
}

std::vector<GroupPresentation> builtin_presentations() {
  std::vector<GroupPresentation> out;
  out.push_back(free_group(2));
  out.push_back(oriented_map_parent());
  out.push_back(hypermap_parent());
  out.push_back(map_parent());
  for (int g = 1; g <= 3; ++g) out.push_back(orientable_surface(g));
  for (int g = 1; g <= 4; ++g) out.push_back(nonorientable_surface(g));
  return out;
}

namespace {

int parse_entry(const std::string& token) {
  if (token == "inf") return 0;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw error("bad presentation argument '" + token + "'");
  }
  if (used != token.size() || value < 0) throw error("bad presentation argument '" + token + "'");
  return value;
}

}  // namespace

GroupPresentation presentation_by_name(std::string_view name) {
  std::string text;
  for (char c : name) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      text += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }

  std::string base = text;
  std::vector<std::string> args;
  std::size_t open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')') throw error("unbalanced parentheses in presentation name");
    base = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::string current;
    for (char c : inner) {
      if (c == ',') {
        args.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    args.push_back(current);
  }

  auto want_args = [&](std::size_t n) {
    if (args.size() != n) {
      throw error("presentation '" + base + "' expects " + std::to_string(n) + " argument(s)");
    }
  };

  // each family answers to its short name and to the label it prints
  if (base == "f2" || base == "f_2" || base == "dessin" || base == "oriented-hypermap")
    return free_group(2);
  if (base == "cinf_c2" || base == "c_inf*c_2" || base == "oriented-map")
    return oriented_map_parent();
  if (base == "c2_c2_c2" || base == "c_2*c_2*c_2" || base == "hypermap") return hypermap_parent();
  if (base == "v4_c2" || base == "v_4*c_2" || base == "map") return map_parent();
  if (base == "orientable_surface") {
    want_args(1);
    return orientable_surface(parse_entry(args[0]));
  }
  if (base == "nonorientable_surface") {
    want_args(1);
    return nonorientable_surface(parse_entry(args[0]));
  }
  if (base == "triangle") {
    want_args(3);
    return triangle_group(parse_entry(args[0]), parse_entry(args[1]), parse_entry(args[2]));
  }
  if (base == "extended_triangle") {
    want_args(3);
    return extended_triangle_group(parse_entry(args[0]), parse_entry(args[1]),
                                   parse_entry(args[2]));
  }
  throw error("unknown presentation '" + base + "'");
}

namespace {

// True when tuple is the lexicographic minimum of its scaling class mod p.
bool scaling_minimal(const std::vector<std::int64_t>& tuple, std::int64_t p) {
  for (std::int64_t lambda = 2; lambda < p; ++lambda) {
    bool smaller = false;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      std::int64_t scaled = tuple[i] * lambda % p;
      if (scaled < tuple[i]) {
        smaller = true;
        break;
      }
      if (scaled > tuple[i]) break;
    }
    if (smaller) return false;
  }
  return true;
}

PCObject cp_object(Category category, std::int64_t p, const std::vector<std::int64_t>& tuple) {
  Perm sigma = full_cycle(static_cast<int>(p));
  std::vector<Perm> gens;
  for (std::int64_t a : tuple) gens.push_back(perm_power(sigma, a));
  return PCObject(category, std::move(gens));
}

}  // namespace

std::vector<PCObject> enumerate_cp_objects(Category category, std::int64_t p) {
  if (!is_prime(p)) throw error("p must be prime");
  const int arity = generator_arity(category);

  std::vector<PCObject> out;
  std::vector<std::int64_t> tuple(arity, 0);
  while (true) {
    bool all_zero = std::all_of(tuple.begin(), tuple.end(), [](std::int64_t v) { return v == 0; });
    if (!all_zero && scaling_minimal(tuple, p)) {
      bool relations_hold = true;
      if (category == Category::OrientedMap) {
        relations_hold = 2 * tuple[1] % p == 0;
      } else if (category == Category::Hypermap || category == Category::Map) {
        for (std::int64_t a : tuple) {
          if (2 * a % p != 0) relations_hold = false;
        }
        if (category == Category::Map && 2 * (tuple[0] + tuple[2]) % p != 0) {
          relations_hold = false;
        }
      }
      if (relations_hold) out.push_back(cp_object(category, p, tuple));
    }

    int pos = arity - 1;
    while (pos >= 0 && tuple[pos] == p - 1) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[pos];
  }
  return out;
}

namespace {

// All permutations of degree n as image tables, lexicographic.
std::vector<std::vector<int>> all_image_tables(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool transitive_pair(const std::vector<int>& x, const std::vector<int>& y, int n) {
  int stack[16];
  bool seen[16] = {false};
  int top = 0;
  stack[top++] = 0;
  seen[0] = true;
  int reached = 1;
  while (top > 0) {
    int w = stack[--top];
    for (const std::vector<int>* g : {&x, &y}) {
      int u = (*g)[w] - 1;
      if (!seen[u]) {
        seen[u] = true;
        stack[top++] = u;
        ++reached;
      }
    }
  }
  return reached == n;
}

// Canonical form anchored at beta: relabel by breadth-first discovery order
// (x edges before y edges) and read off the new image tables.
void bfs_anchored_form(const std::vector<int>& x, const std::vector<int>& y, int n, int beta0,
                       std::vector<int>& form) {
  int label[16] = {0};
  int point_of[16];
  label[beta0] = 1;
  point_of[0] = beta0;
  int next = 1;
  for (int l = 0; l < next; ++l) {
    int w = point_of[l];
    for (const std::vector<int>* g : {&x, &y}) {
      int u = (*g)[w] - 1;
      if (label[u] == 0) {
        label[u] = ++next;
        point_of[next - 1] = u;
      }
    }
  }
  form.resize(2 * n);
  for (int l = 0; l < n; ++l) {
    int w = point_of[l];
    form[l] = label[x[w] - 1];
    form[n + l] = label[y[w] - 1];
  }
}

std::vector<int> min_over_all_relabellings(const std::vector<int>& x, const std::vector<int>& y,
                                           int n, const std::vector<std::vector<int>>& tables) {
  std::vector<int> best(2 * n, n + 1);
  std::vector<int> cand(2 * n);
  for (const std::vector<int>& g : tables) {
    for (int i = 0; i < n; ++i) {
      cand[g[i] - 1] = g[x[i] - 1];
      cand[n + g[i] - 1] = g[y[i] - 1];
    }
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<int> min_over_anchors(const std::vector<int>& x, const std::vector<int>& y, int n) {
  std::vector<int> best(2 * n, n + 1);
  std::vector<int> cand;
  for (int beta0 = 0; beta0 < n; ++beta0) {
    bfs_anchored_form(x, y, n, beta0, cand);
    if (cand < best) best = cand;
  }
  return best;
}

std::vector<int> canonical_pair_form(const std::vector<int>& x, const std::vector<int>& y, int n,
                                     const std::vector<std::vector<int>>* tables) {
  if (tables) return min_over_all_relabellings(x, y, n, *tables);
  if (transitive_pair(x, y, n)) return min_over_anchors(x, y, n);

  // disconnected: canonicalise each component, sort, then reassemble
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(comps.size());
    std::vector<int> points{s};
    comp[s] = id;
    for (std::size_t head = 0; head < points.size(); ++head) {
      for (const std::vector<int>* g : {&x, &y}) {
        int u = (*g)[points[head]] - 1;
        if (comp[u] < 0) {
          comp[u] = id;
          points.push_back(u);
        }
      }
    }
    std::sort(points.begin(), points.end());
    comps.push_back(std::move(points));
  }

  std::vector<std::pair<int, std::vector<int>>> keyed;
  for (const std::vector<int>& points : comps) {
    const int m = static_cast<int>(points.size());
    std::vector<int> pos(n, 0);
    for (int j = 0; j < m; ++j) pos[points[j]] = j;
    std::vector<int> lx(m), ly(m);
    for (int j = 0; j < m; ++j) {
      lx[j] = pos[x[points[j]] - 1] + 1;
      ly[j] = pos[y[points[j]] - 1] + 1;
    }
    std::vector<int> form;
    if (m <= 5) {
      auto local_tables = all_image_tables(m);
      form = min_over_all_relabellings(lx, ly, m, local_tables);
    } else {
      form = min_over_anchors(lx, ly, m);
    }
    keyed.emplace_back(m, std::move(form));
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<int> assembled(2 * n);
  int offset = 0;
  for (const auto& [m, form] : keyed) {
    for (int j = 0; j < m; ++j) {
      assembled[offset + j] = offset + form[j];
      assembled[n + offset + j] = offset + form[m + j];
    }
    offset += m;
  }
  return assembled;
}

}  // namespace

std::vector<int> dessin_canonical_form(const PCObject& dessin) {
  if (dessin.category() != Category::Dessin) {
    throw error("canonical forms are defined for dessins");
  }
  const int n = dessin.degree();
  if (n > 7) throw error("canonical form limited to degree 7");
  if (n <= 5) {
    auto tables = all_image_tables(n);
    return canonical_pair_form(dessin.x().images(), dessin.y().images(), n, &tables);
  }
  return canonical_pair_form(dessin.x().images(), dessin.y().images(), n, nullptr);
}

std::vector<PCObject> enumerate_dessins(int degree, bool connected_only, int degree_limit) {
  if (degree < 1) throw error("degree must be >= 1");
  if (degree > degree_limit) throw error("degree exceeds the enumeration limit");

  const auto tables = all_image_tables(degree);
  const std::vector<std::vector<int>>* full = degree <= 5 ? &tables : nullptr;

  std::set<std::vector<int>> forms;
  for (const std::vector<int>& x : tables) {
    for (const std::vector<int>& y : tables) {
      if (connected_only && !transitive_pair(x, y, degree)) continue;
      forms.insert(canonical_pair_form(x, y, degree, full));
    }
  }

  std::vector<PCObject> out;
  for (const std::vector<int>& form : forms) {
    std::vector<int> x(form.begin(), form.begin() + degree);
    std::vector<int> y(form.begin() + degree, form.end());
    out.emplace_back(Category::Dessin,
                     std::vector<Perm>{Perm::from_images(std::move(x)),
                                       Perm::from_images(std::move(y))});
  }
  return out;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = rng();
  while (v >= threshold) v = rng();
  return v % bound;
}

std::vector<int> random_image_table(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(images[i], images[j]);
  }
  return images;
}

struct TableHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Order of <x, y> by breadth-first closure over image tables.
std::int64_t pair_group_order(const std::vector<int>& x, const std::vector<int>& y, int n,
                              std::unordered_map<std::vector<int>, int, TableHash>& seen,
                              std::vector<std::vector<int>>& elements) {
  seen.clear();
  elements.clear();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i + 1;
  elements.push_back(id);
  seen.emplace(id, 0);
  std::vector<int> scratch(n);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const std::vector<int>* g : {&x, &y}) {
      const std::vector<int>& w = elements[head];
      for (int i = 0; i < n; ++i) scratch[i] = (*g)[w[i] - 1];
      if (seen.emplace(scratch, static_cast<int>(elements.size())).second) {
        elements.push_back(scratch);
      }
    }
  }
  return static_cast<std::int64_t>(elements.size());
}

}  // namespace

DixonEstimate dixon_estimate(int degree, int samples, std::uint64_t seed) {
  if (degree < 1 || degree > 10) throw error("dixon_estimate supports degrees 1..10");
  if (samples < 1) throw error("samples must be >= 1");

  const std::int64_t full = factorial(degree);
  int hits = 0;
  std::unordered_map<std::vector<int>, int, TableHash> seen;
  std::vector<std::vector<int>> elements;
  for (int index = 0; index < samples; ++index) {
    std::mt19937_64 rng(mix64(seed + (static_cast<std::uint64_t>(index) + 1) *
                                         0x9E3779B97F4A7C15ULL));
    std::vector<int> x = random_image_table(degree, rng);
    std::vector<int> y = random_image_table(degree, rng);
    std::int64_t order = pair_group_order(x, y, degree, seen, elements);
    // the only subgroup of order n!/2 is the alternating group (degree >= 3)
    if (order == full || (degree >= 3 && order * 2 == full)) ++hits;
  }

  DixonEstimate out;
  out.degree = degree;
  out.samples = samples;
  out.seed = seed;
  out.fraction_sym_or_alt = static_cast<double>(hits) / static_cast<double>(samples);
  return out;
}

}  // namespace dessinator
