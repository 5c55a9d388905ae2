#include "dessinator/objects.hpp"

#include <algorithm>
#include <array>

namespace dessinator {

int generator_arity(Category c) {
  return (c == Category::Dessin || c == Category::OrientedMap) ? 2 : 3;
}

bool is_oriented(Category c) {
  return c == Category::Dessin || c == Category::OrientedMap;
}

std::string_view category_name(Category c) {
  switch (c) {
    case Category::Dessin: return "dessin";
    case Category::OrientedMap: return "oriented-map";
    case Category::Hypermap: return "hypermap";
    case Category::Map: return "map";
  }
  throw error("unknown category");
}

std::optional<Category> category_from_name(std::string_view name) {
  if (name == "dessin") return Category::Dessin;
  if (name == "oriented-map") return Category::OrientedMap;
  if (name == "hypermap") return Category::Hypermap;
  if (name == "map") return Category::Map;
  return std::nullopt;
}

std::vector<std::string> generator_names(Category c) {
  if (generator_arity(c) == 2) return {"x", "y"};
  return {"r0", "r1", "r2"};
}

const std::vector<RelatorWord>& category_relations(Category c) {
  static const std::vector<RelatorWord> none{};
  static const std::vector<RelatorWord> oriented_map{{"y^2", {2, 2}}};
  static const std::vector<RelatorWord> hypermap{
      {"r0^2", {1, 1}}, {"r1^2", {2, 2}}, {"r2^2", {3, 3}}};
  static const std::vector<RelatorWord> map{
      {"r0^2", {1, 1}}, {"r1^2", {2, 2}}, {"r2^2", {3, 3}}, {"(r2 r0)^2", {3, 1, 3, 1}}};
  switch (c) {
    case Category::Dessin: return none;
    case Category::OrientedMap: return oriented_map;
    case Category::Hypermap: return hypermap;
    case Category::Map: return map;
  }
  throw error("unknown category");
}

PCObject::PCObject(Category category, std::vector<Perm> gens)
    : category_(category), gens_(std::move(gens)) {
  if (static_cast<int>(gens_.size()) != generator_arity(category_)) {
    throw error("wrong number of generators for category");
  }
  for (const Perm& g : gens_) {
    if (g.degree() != gens_[0].degree()) throw error("generators have mismatched degrees");
  }
  if (gens_[0].degree() < 1) throw error("objects need degree >= 1");
}

const Perm& PCObject::x() const {
  if (generator_arity(category_) != 2) throw error("x is only defined for oriented objects");
  return gens_[0];
}

const Perm& PCObject::y() const {
  if (generator_arity(category_) != 2) throw error("y is only defined for oriented objects");
  return gens_[1];
}

const Perm& PCObject::r0() const {
  if (generator_arity(category_) != 3) throw error("r0 is only defined for unoriented objects");
  return gens_[0];
}

const Perm& PCObject::r1() const {
  if (generator_arity(category_) != 3) throw error("r1 is only defined for unoriented objects");
  return gens_[1];
}

const Perm& PCObject::r2() const {
  if (generator_arity(category_) != 3) throw error("r2 is only defined for unoriented objects");
  return gens_[2];
}

Perm evaluate_word(const PCObject& obj, const std::vector<int>& letters) {
  Perm acc(obj.degree());
  for (int letter : letters) {
    if (letter == 0 || std::abs(letter) > static_cast<int>(obj.gens().size())) {
      throw error("word letter out of range");
    }
    const Perm& g = obj.gen(std::abs(letter) - 1);
    acc = compose(acc, letter > 0 ? g : g.inverse());
  }
  return acc;
}

namespace {

std::vector<RelationViolation> check_words(const PCObject& obj,
                                           const std::vector<RelatorWord>& words) {
  std::vector<RelationViolation> out;
  for (const RelatorWord& w : words) {
    Perm value = evaluate_word(obj, w.letters);
    for (int i = 1; i <= value.degree(); ++i) {
      if (value(i) != i) {
        out.push_back({w.name, i});
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<RelationViolation> validate(const PCObject& obj) {
  return check_words(obj, category_relations(obj.category()));
}

bool is_valid(const PCObject& obj) {
  return validate(obj).empty();
}

std::vector<RelationViolation> validate_type_overlay(const PCObject& obj, int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw error("type entries must be 0 or positive");
  // the rotation words: (x, y, z) directly, or (r1 r2, r2 r0, r0 r1)
  std::vector<std::vector<int>> base;
  std::vector<std::string> names;
  if (is_oriented(obj.category())) {
    base = {{1}, {2}, {-2, -1}};
    names = {"x", "y", "z"};
  } else {
    base = {{2, 3}, {3, 1}, {1, 2}};
    names = {"(r1 r2)", "(r2 r0)", "(r0 r1)"};
  }
  std::vector<RelatorWord> words;
  const std::array<int, 3> orders{p, q, r};
  for (int i = 0; i < 3; ++i) {
    if (orders[i] == 0) continue;
    RelatorWord w;
    w.name = names[i] + "^" + std::to_string(orders[i]);
    for (int rep = 0; rep < orders[i]; ++rep) {
      w.letters.insert(w.letters.end(), base[i].begin(), base[i].end());
    }
    words.push_back(std::move(w));
  }
  return check_words(obj, words);
}

bool is_connected(const PCObject& obj) {
  return static_cast<int>(orbit(obj.degree(), obj.gens(), 1).size()) == obj.degree();
}

std::optional<PermGroupEnum> monodromy_group(const PCObject& obj, std::int64_t cap) {
  return closure(obj.degree(), obj.gens(), cap);
}

std::optional<std::int64_t> monodromy_order(const PCObject& obj, std::int64_t cap) {
  auto g = monodromy_group(obj, cap);
  if (!g) return std::nullopt;
  return g->order();
}

PCObject oriented_map_as_dessin(const PCObject& obj) {
  if (obj.category() != Category::OrientedMap) {
    throw error("oriented_map_as_dessin expects an oriented map");
  }
  if (!is_valid(obj)) throw error("invalid oriented map");
  return PCObject(Category::Dessin, obj.gens());
}

PCObject flag_double(const PCObject& obj) {
  if (!is_oriented(obj.category())) throw error("flag_double expects an oriented object");
  if (!is_valid(obj)) throw error("invalid object");

  const int n = obj.degree();
  const Perm& x = obj.x();
  const Perm& y = obj.y();
  const Perm x_inv = x.inverse();
  const Perm y_inv = y.inverse();

  std::vector<int> r0(2 * n), r1(2 * n), r2(2 * n);
  for (int w = 1; w <= n; ++w) {
    r2[w - 1] = w + n;
    r2[w + n - 1] = w;
    r1[w - 1] = x(w) + n;
    r1[w + n - 1] = x_inv(w);
    r0[w - 1] = y(w) + n;
    r0[w + n - 1] = y_inv(w);
  }
  Category out =
      obj.category() == Category::OrientedMap ? Category::Map : Category::Hypermap;
  return PCObject(out, {Perm::from_images(std::move(r0)), Perm::from_images(std::move(r1)),
                        Perm::from_images(std::move(r2))});
}

namespace {

struct Line {
  int number;       // 1-based
  std::string key;
  std::string value;
  int value_column;  // 1-based column where the value starts
};

std::vector<Line> split_key_values(std::string_view text) {
  std::vector<Line> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw parse_error(line_no, static_cast<int>(first) + 1, "expected 'key: value'");
      }
      std::string key(line.substr(first, colon - first));
      while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
      std::size_t vstart = line.find_first_not_of(" \t", colon + 1);
      std::string value;
      int vcol = static_cast<int>(colon) + 2;
      if (vstart != std::string_view::npos) {
        std::string_view v = line.substr(vstart);
        std::size_t vend = v.find_last_not_of(" \t\r");
        value = std::string(v.substr(0, vend + 1));
        vcol = static_cast<int>(vstart) + 1;
      }
      out.push_back({line_no, std::move(key), std::move(value), vcol});
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace

PCObject read_object(std::string_view text) {
  std::vector<Line> lines = split_key_values(text);

  auto find_line = [&](const std::string& key) -> const Line* {
    const Line* found = nullptr;
    for (const Line& l : lines) {
      if (l.key == key) {
        if (found) throw parse_error(l.number, 1, "duplicate key '" + key + "'");
        found = &l;
      }
    }
    return found;
  };

  const Line* cat_line = find_line("category");
  if (!cat_line) throw parse_error(1, 1, "missing 'category:' line");
  auto category = category_from_name(cat_line->value);
  if (!category) {
    throw parse_error(cat_line->number, cat_line->value_column,
                      "unknown category '" + cat_line->value + "'");
  }

  const Line* deg_line = find_line("degree");
  if (!deg_line) throw parse_error(1, 1, "missing 'degree:' line");
  int degree = 0;
  try {
    std::size_t used = 0;
    degree = std::stoi(deg_line->value, &used);
    if (used != deg_line->value.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw parse_error(deg_line->number, deg_line->value_column, "degree must be an integer");
  }
  if (degree < 1) {
    throw parse_error(deg_line->number, deg_line->value_column, "degree must be >= 1");
  }

  std::vector<std::string> names = generator_names(*category);
  std::vector<std::string> known = {"category", "degree"};
  known.insert(known.end(), names.begin(), names.end());
  for (const Line& l : lines) {
    if (std::find(known.begin(), known.end(), l.key) == known.end()) {
      throw parse_error(l.number, 1, "unknown key '" + l.key + "'");
    }
  }

  std::vector<Perm> gens;
  for (const std::string& name : names) {
    const Line* l = find_line(name);
    if (!l) throw parse_error(1, 1, "missing generator line '" + name + ":'");
    try {
      gens.push_back(parse_cycles(l->value, degree));
    } catch (const parse_error& e) {
      throw parse_error(l->number, l->value_column + e.column() - 1, e.message());
    }
  }
  return PCObject(*category, std::move(gens));
}

std::string write_object(const PCObject& obj) {
  std::string out;
  out += "category: ";
  out += category_name(obj.category());
  out += "\ndegree: " + std::to_string(obj.degree()) + "\n";
  std::vector<std::string> names = generator_names(obj.category());
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += names[i] + ":";
    std::string cycles = print_cycles(obj.gen(static_cast<int>(i)));
    if (!cycles.empty()) out += " " + cycles;
    out += "\n";
  }
  return out;
}

std::string walsh_dot(const PCObject& obj) {
  if (obj.category() != Category::Dessin) throw error("walsh_dot expects a dessin");
  const int n = obj.degree();

  std::vector<int> white_of(n + 1), black_of(n + 1);
  auto cycle_mins = [n](const Perm& p, std::vector<int>& owner) {
    std::vector<int> mins;
    for (const auto& cycle : p.cycles(true)) {
      int least = *std::min_element(cycle.begin(), cycle.end());
      mins.push_back(least);
      for (int v : cycle) owner[v] = least;
    }
    std::sort(mins.begin(), mins.end());
    return mins;
  };
  std::vector<int> white = cycle_mins(obj.x(), white_of);
  std::vector<int> black = cycle_mins(obj.y(), black_of);

  std::string out = "graph walsh {\n";
  for (int w : white) out += "  w" + std::to_string(w) + " [shape=circle];\n";
  for (int b : black) {
    out += "  b" + std::to_string(b) +
           " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  }
  for (int i = 1; i <= n; ++i) {
    out += "  w" + std::to_string(white_of[i]) + " -- b" + std::to_string(black_of[i]) +
           " [label=\"" + std::to_string(i) + "\"];\n";
  }
  out += "}\n";
  return out;
}

PCObject disjoint_union(const std::vector<PCObject>& parts) {
  if (parts.empty()) throw error("disjoint_union needs at least one part");
  Category category = parts[0].category();
  int total = 0;
  for (const PCObject& part : parts) {
    if (part.category() != category) throw error("disjoint_union requires a single category");
    total += part.degree();
  }
  const int arity = generator_arity(category);
  std::vector<std::vector<int>> images(arity, std::vector<int>(total));
  int offset = 0;
  for (const PCObject& part : parts) {
    for (int g = 0; g < arity; ++g) {
      for (int i = 1; i <= part.degree(); ++i) {
        images[g][offset + i - 1] = offset + part.gen(g)(i);
      }
    }
    offset += part.degree();
  }
  std::vector<Perm> gens;
  for (int g = 0; g < arity; ++g) gens.push_back(Perm::from_images(std::move(images[g])));
  return PCObject(category, std::move(gens));
}

}  // namespace dessinator
