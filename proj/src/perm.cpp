#include "dessinator/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace dessinator {

Perm::Perm(int degree) {
  if (degree < 0) throw error("negative degree");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n) throw error("image table entry out of range");
    if (seen[v - 1]) throw error("image table is not a bijection");
    seen[v - 1] = 1;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::int64_t Perm::order() const {
  std::int64_t result = 1;
  for (const auto& cycle : cycles(false)) {
    result = std::lcm(result, static_cast<std::int64_t>(cycle.size()));
  }
  return result;
}

std::vector<std::vector<int>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<char> visited(images_.size(), 0);
  for (int i = 1; i <= degree(); ++i) {
    if (visited[i - 1]) continue;
    std::vector<int> cycle;
    int j = i;
    do {
      visited[j - 1] = 1;
      cycle.push_back(j);
      j = images_[j - 1];
    } while (j != i);
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

int Perm::cycle_count() const {
  return static_cast<int>(cycles(true).size());
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw error("degree mismatch in compose");
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[i - 1] = q(p(i));
  return Perm::from_images(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& g) {
  if (p.degree() != g.degree()) throw error("degree mismatch in conjugate");
  std::vector<int> images(p.degree());
  for (int i = 1; i <= p.degree(); ++i) images[g(i) - 1] = g(p(i));
  return Perm::from_images(std::move(images));
}

Perm perm_power(const Perm& p, std::int64_t exponent) {
  Perm base = exponent < 0 ? p.inverse() : p;
  std::int64_t k = exponent < 0 ? -exponent : exponent;
  Perm acc(p.degree());
  for (std::int64_t i = 0; i < k; ++i) acc = compose(acc, base);
  return acc;
}

Perm full_cycle(int degree) {
  if (degree < 1) throw error("full_cycle requires degree >= 1");
  std::vector<int> images(degree);
  for (int i = 1; i < degree; ++i) images[i - 1] = i + 1;
  images[degree - 1] = 1;
  return Perm::from_images(std::move(images));
}

namespace {

[[noreturn]] void fail_at(std::size_t pos, const std::string& message) {
  throw parse_error(1, static_cast<int>(pos) + 1, message);
}

}  // namespace

Perm parse_cycles(std::string_view text, int degree) {
  if (degree < 0) throw error("negative degree");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_separators = [&]() {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
  };

  skip_separators();
  while (i < text.size()) {
    if (text[i] != '(') fail_at(i, "expected '(' at start of cycle");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_separators();
      if (i >= text.size()) fail_at(text.size(), "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') fail_at(i, "expected a point or ')'");
      std::size_t start = i;
      long value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        if (value > degree) fail_at(start, "point exceeds degree");
        ++i;
      }
      if (value < 1) fail_at(start, "points are 1-based");
      if (used[value - 1]) fail_at(start, "point repeated across cycles");
      used[value - 1] = 1;
      cycle.push_back(static_cast<int>(value));
    }
    if (cycle.empty()) fail_at(i - 1, "empty cycle");
    for (std::size_t k = 0; k + 1 < cycle.size(); ++k) images[cycle[k] - 1] = cycle[k + 1];
    if (cycle.size() > 1) images[cycle.back() - 1] = cycle.front();
    skip_separators();
  }
  return Perm::from_images(std::move(images));
}

std::string print_cycles(const Perm& p) {
  std::string out;
  for (const auto& cycle : p.cycles(false)) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

std::vector<int> orbit(int degree, const std::vector<Perm>& gens, int point) {
  if (point < 1 || point > degree) throw error("orbit point out of range");
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw error("degree mismatch in orbit");
  }
  std::vector<char> seen(degree, 0);
  seen[point - 1] = 1;
  std::queue<int> todo;
  todo.push(point);
  std::vector<int> result{point};
  while (!todo.empty()) {
    int w = todo.front();
    todo.pop();
    for (const Perm& g : gens) {
      int u = g(w);
      if (!seen[u - 1]) {
        seen[u - 1] = 1;
        result.push_back(u);
        todo.push(u);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> orbits(int degree, const std::vector<Perm>& gens) {
  std::vector<char> covered(degree, 0);
  std::vector<std::vector<int>> result;
  for (int i = 1; i <= degree; ++i) {
    if (covered[i - 1]) continue;
    std::vector<int> orb = orbit(degree, gens, i);
    for (int v : orb) covered[v - 1] = 1;
    result.push_back(std::move(orb));
  }
  return result;
}

std::size_t PermHash::operator()(const Perm& p) const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int v : p.images()) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dessinator
