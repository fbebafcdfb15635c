#include "loopforge/groups.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>

#include "loopforge/error.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"

namespace loopforge {

LoopTable cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorKind::MalformedTable, "a group needs at least one element");
  return loop_from_function(n, [n](Element x, Element y) { return (x + y) % n; }, "Z" + std::to_string(n));
}

LoopTable direct_product(LoopTable const& a, LoopTable const& b) {
  std::size_t const nb = b.order();
  auto label = a.label().empty() || b.label().empty() ? std::string() : a.label() + "x" + b.label();
  return loop_from_function(
      a.order() * nb,
      [&](Element x, Element y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); }, label);
}

LoopTable klein_four() {
  LoopTable v = direct_product(cyclic_group(2), cyclic_group(2));
  v.set_label("V4");
  return v;
}

LoopTable dihedral_group(std::size_t m) {
  if (m == 0) fail(ErrorKind::MalformedTable, "dihedral group needs m >= 1");
  return loop_from_function(
      2 * m,
      [m](Element x, Element y) -> Element {
        Element const a = x % m, b = y % m;
        bool const xs = x >= m, ys = y >= m;
        Element const r = xs ? (a + m - b) % m : (a + b) % m;
        return (xs != ys) ? r + m : r;
      },
      "D" + std::to_string(m));
}

LoopTable symmetric_group(std::size_t degree) {
  if (degree == 0) fail(ErrorKind::MalformedTable, "symmetric group needs degree >= 1");
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Permutation, Element> index;
  for (Element i = 0; i < all.size(); ++i) index[all[i]] = i;
  return loop_from_function(
      all.size(),
      [&](Element x, Element y) {
        Permutation r(degree);
        for (std::size_t i = 0; i < degree; ++i) r[i] = all[x][all[y][i]];
        return index.at(r);
      },
      "S" + std::to_string(degree));
}

LoopTable quaternion_group() {
  // unit products u*v = sign * w for units 1, i, j, k
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr bool negative[4][4] = {
      {false, false, false, false}, {false, true, false, true}, {false, true, true, false}, {false, false, true, true}};
  return loop_from_function(
      8,
      [](Element x, Element y) {
        Element const u = x / 2, v = y / 2;
        bool const sign = (((x % 2) != 0) != ((y % 2) != 0)) != negative[u][v];
        return static_cast<Element>(2 * unit[u][v] + (sign ? 1 : 0));
      },
      "Q8");
}

namespace {

std::optional<std::size_t> parse_size(std::string_view digits) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  return value;
}

constexpr std::size_t kRegistryMaxOrder = 8;

LoopTable single_group(std::string_view name) {
  auto sized = [&](char prefix) -> std::optional<std::size_t> {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    return parse_size(name.substr(1));
  };
  auto bounded = [&](std::size_t order) {
    if (order == 0 || order > kRegistryMaxOrder)
      fail(ErrorKind::ParseError, "registry groups have order 1.." + std::to_string(kRegistryMaxOrder) +
                                      ": " + std::string(name));
  };
  if (name == "V4") return klein_four();
  if (name == "Q8") return quaternion_group();
  if (auto n = sized('Z')) {
    bounded(*n);
    return cyclic_group(*n);
  }
  if (auto m = sized('D')) {
    bounded(2 * *m);
    return dihedral_group(*m);
  }
  if (auto d = sized('S')) {
    if (*d == 0 || *d > 3) fail(ErrorKind::ParseError, "registry symmetric groups are S1..S3");
    return symmetric_group(*d);
  }
  fail(ErrorKind::ParseError, "unknown group name '" + std::string(name) + "' (expected one of Z<n>, V4, D<m>, S<d>, Q8 or AxB)");
}

}  // namespace

LoopTable group_by_name(std::string_view name) {
  std::size_t const cut = name.find('x');
  if (cut == std::string_view::npos) return single_group(name);
  LoopTable result = single_group(name.substr(0, cut));
  std::string_view rest = name.substr(cut + 1);
  while (true) {
    std::size_t const next = rest.find('x');
    result = direct_product(result, single_group(rest.substr(0, next)));
    if (next == std::string_view::npos) break;
    rest = rest.substr(next + 1);
  }
  result.set_label(std::string(name));
  return result;
}

std::vector<std::string> registry_names() {
  return {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "D3", "D4", "S3", "Q8"};
}

std::string identify_group(LoopTable const& loop) {
  for (auto const& name : registry_names()) {
    LoopTable const g = group_by_name(name);
    if (g.order() == loop.order() && find_isomorphism(g, loop)) return name;
  }
  return {};
}

Element PermutationGroup::index_of(Permutation const& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) fail(ErrorKind::NotASubloop, "permutation is not in the group");
  return static_cast<Element>(it - elements.begin());
}

PermutationGroup generated_permutation_group(std::size_t degree, std::vector<Permutation> const& generators) {
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> found{id};
  std::vector<Permutation> frontier{id};
  std::map<Permutation, bool> seen{{id, true}};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (auto const& p : frontier)
      for (auto const& gen : generators) {
        if (gen.size() != degree) fail(ErrorKind::MalformedTable, "generator has the wrong degree");
        Permutation q(degree);
        for (std::size_t i = 0; i < degree; ++i) q[i] = p[gen[i]];
        if (seen.emplace(q, true).second) {
          found.push_back(q);
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end());
  PermutationGroup group;
  group.elements = std::move(found);
  auto const& els = group.elements;
  group.table = loop_from_function(els.size(), [&](Element x, Element y) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = els[x][els[y][i]];
    return static_cast<Element>(std::lower_bound(els.begin(), els.end(), r) - els.begin());
  });
  return group;
}

PermutationGroup right_inner_group(LoopTable const& loop) {
  std::vector<Permutation> generators;
  for (Element x = 0; x < loop.order(); ++x)
    for (Element y = 0; y < loop.order(); ++y) {
      FiniteMap const r = right_inner(loop, x, y);
      if (!r.is_identity()) generators.push_back(r.images());
    }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return generated_permutation_group(loop.order(), generators);
}

}  // namespace loopforge
