#pragma once

// Brute-force reference implementations. None of these call into the
// library beyond reading table entries, so they can serve as oracles.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "loopforge/loop_table.hpp"

namespace oracle {

using loopforge::Element;
using loopforge::ElementSubset;
using loopforge::FiniteMap;
using loopforge::LoopTable;

inline std::vector<std::vector<Element>> rows_of(LoopTable const& l) {
  std::vector<std::vector<Element>> r(l.order(), std::vector<Element>(l.order()));
  for (Element x = 0; x < l.order(); ++x)
    for (Element y = 0; y < l.order(); ++y) r[x][y] = l.mul(x, y);
  return r;
}

inline Element left_div(LoopTable const& l, Element x, Element y) {
  for (Element z = 0; z < l.order(); ++z)
    if (l.mul(x, z) == y) return z;
  return static_cast<Element>(-1);
}

inline Element right_div(LoopTable const& l, Element x, Element y) {
  for (Element z = 0; z < l.order(); ++z)
    if (l.mul(z, y) == x) return z;
  return static_cast<Element>(-1);
}

inline bool preserves(LoopTable const& a, LoopTable const& b, std::vector<Element> const& m) {
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < a.order(); ++y)
      if (m[a.mul(x, y)] != b.mul(m[x], m[y])) return false;
  return true;
}

/// Every isomorphism a -> b in lexicographic order, by trying all permutations.
inline std::vector<std::vector<Element>> isomorphisms(LoopTable const& a, LoopTable const& b) {
  std::vector<std::vector<Element>> out;
  if (a.order() != b.order()) return out;
  std::vector<Element> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (preserves(a, b, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Every map a -> b that preserves products.
inline std::vector<std::vector<Element>> homomorphisms(LoopTable const& a, LoopTable const& b) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> m(a.order(), 0);
  while (true) {
    if (preserves(a, b, m)) out.push_back(m);
    std::size_t pos = m.size();
    while (pos > 0) {
      --pos;
      if (++m[pos] < b.order()) break;
      m[pos] = 0;
    }
    if (pos == 0 && m[0] == 0) break;
  }
  return out;
}

enum class Part { left, middle, right };

inline bool nuclear(LoopTable const& l, Element u, Part part) {
  for (Element x = 0; x < l.order(); ++x)
    for (Element y = 0; y < l.order(); ++y) {
      bool ok = true;
      switch (part) {
        case Part::left: ok = l.mul(l.mul(u, x), y) == l.mul(u, l.mul(x, y)); break;
        case Part::middle: ok = l.mul(l.mul(x, u), y) == l.mul(x, l.mul(u, y)); break;
        case Part::right: ok = l.mul(l.mul(x, y), u) == l.mul(x, l.mul(y, u)); break;
      }
      if (!ok) return false;
    }
  return true;
}

inline std::vector<Element> nucleus(LoopTable const& l, Part part) {
  std::vector<Element> out;
  for (Element u = 0; u < l.order(); ++u)
    if (nuclear(l, u, part)) out.push_back(u);
  return out;
}

inline bool all_nuclear(LoopTable const& l, ElementSubset const& g, Part part) {
  return std::all_of(g.begin(), g.end(), [&](Element u) { return nuclear(l, u, part); });
}

inline bool closed(LoopTable const& l, std::vector<bool> const& in) {
  for (Element x = 0; x < l.order(); ++x)
    for (Element y = 0; y < l.order(); ++y)
      if (in[x] && in[y] && !in[l.mul(x, y)]) return false;
  return true;
}

/// The set-product characterization: xN = Nx, (xN)y = x(Ny), x(yN) = (xy)N.
inline bool normal(LoopTable const& l, ElementSubset const& n) {
  auto set_of = [&](auto f) {
    std::vector<bool> s(l.order(), false);
    for (Element u : n) s[f(u)] = true;
    return s;
  };
  std::vector<bool> in(l.order(), false);
  for (Element u : n) in[u] = true;
  if (!in[0] || !closed(l, in)) return false;
  for (Element x = 0; x < l.order(); ++x) {
    if (set_of([&](Element u) { return l.mul(x, u); }) != set_of([&](Element u) { return l.mul(u, x); }))
      return false;
    for (Element y = 0; y < l.order(); ++y) {
      if (set_of([&](Element u) { return l.mul(l.mul(x, u), y); }) !=
          set_of([&](Element u) { return l.mul(x, l.mul(u, y)); }))
        return false;
      if (set_of([&](Element u) { return l.mul(x, l.mul(y, u)); }) !=
          set_of([&](Element u) { return l.mul(l.mul(x, y), u); }))
        return false;
    }
  }
  return true;
}

/// The table relabeled by p (p(0) must be 0): p(x) p(y) = p(xy).
inline std::vector<Element> relabel_cells(LoopTable const& l, std::vector<Element> const& p) {
  std::size_t const n = l.order();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) cells[p[x] * n + p[y]] = p[l.mul(x, y)];
  return cells;
}

inline std::vector<Element> random_fixing_permutation(std::mt19937_64& rng, std::size_t n, std::size_t fixed) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin() + static_cast<std::ptrdiff_t>(std::min(fixed, n)), p.end(), rng);
  return p;
}

inline bool associative(LoopTable const& l) {
  for (Element x = 0; x < l.order(); ++x)
    for (Element y = 0; y < l.order(); ++y)
      for (Element z = 0; z < l.order(); ++z)
        if (l.mul(l.mul(x, y), z) != l.mul(x, l.mul(y, z))) return false;
  return true;
}

inline bool right_bol(LoopTable const& l) {
  for (Element x = 0; x < l.order(); ++x)
    for (Element y = 0; y < l.order(); ++y)
      for (Element z = 0; z < l.order(); ++z)
        if (l.mul(l.mul(l.mul(z, x), y), x) != l.mul(z, l.mul(l.mul(x, y), x))) return false;
  return true;
}

}  // namespace oracle
