#include "loopforge/morphisms.hpp"

#include <algorithm>
#include <limits>

#include "loopforge/error.hpp"
#include "loopforge/loops.hpp"

namespace loopforge {

namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

std::uint64_t element_signature(LoopTable const& L, Element x) {
  std::size_t const n = L.order();
  std::uint64_t commuting = 0;
  for (Element y = 0; y < n; ++y)
    if (L.mul(x, y) == L.mul(y, x)) ++commuting;
  // Length of the right-power chain x, x*x, (x*x)*x, ... until it repeats x or hits 0.
  std::uint64_t period = 0;
  Element p = x;
  for (std::size_t i = 1; i <= n; ++i) {
    if (p == 0) {
      period = i;
      break;
    }
    p = L.mul(p, x);
  }
  std::uint64_t const square_is_e = L.mul(x, x) == 0;
  std::uint64_t const two_sided = L.ldiv(x, 0) == L.rdiv(0, x);
  std::uint64_t left_powers = 0;
  p = x;
  for (std::size_t i = 1; i <= n; ++i) {
    if (p == 0) {
      left_powers = i;
      break;
    }
    p = L.mul(x, p);
  }
  return commuting | (period << 16) | (left_powers << 32) | (square_is_e << 48) | (two_sided << 49);
}

class MorphismSearch {
 public:
  MorphismSearch(LoopTable const& from, LoopTable const& to, bool injective, ImageFilter const& allowed,
                 std::function<bool(FiniteMap const&)> const& visit)
      : from_(from), to_(to), injective_(injective), allowed_(allowed), visit_(visit) {
    if (injective_) {
      sig_from_.resize(from.order());
      sig_to_.resize(to.order());
      for (Element x = 0; x < from.order(); ++x) sig_from_[x] = element_signature(from, x);
      for (Element y = 0; y < to.order(); ++y) sig_to_[y] = element_signature(to, y);
    }
  }

  struct State {
    std::vector<Element> image;
    std::vector<bool> used;
    std::vector<Element> domain;
  };

  bool signatures_compatible() const {
    auto a = sig_from_;
    auto b = sig_to_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  void run(PartialMap const& fixed) {
    State s;
    s.image.assign(from_.order(), kUnset);
    s.used.assign(to_.order(), false);
    if (!assign(s, 0, 0)) return;
    for (std::size_t x = 0; x < fixed.size() && x < from_.order(); ++x) {
      if (!fixed[x]) continue;
      Element const y = *fixed[x];
      if (y >= to_.order()) return;
      if (s.image[x] == kUnset) {
        if (!assign(s, static_cast<Element>(x), y)) return;
      } else if (s.image[x] != y) {
        return;
      }
    }
    recurse(s);
  }

 private:
  bool admissible(Element x, Element y) const {
    if (injective_ && sig_from_[x] != sig_to_[y]) return false;
    return !allowed_ || allowed_(x, y);
  }

  bool set(State& s, Element x, Element y, std::vector<Element>& queue) {
    if (s.image[x] != kUnset) return s.image[x] == y;
    if (injective_ && s.used[y]) return false;
    if (!admissible(x, y)) return false;
    s.image[x] = y;
    if (injective_) s.used[y] = true;
    queue.push_back(x);
    return true;
  }

  bool assign(State& s, Element x, Element y) {
    std::vector<Element> queue;
    if (!set(s, x, y, queue)) return false;
    while (!queue.empty()) {
      Element const a = queue.back();
      queue.pop_back();
      s.domain.push_back(a);
      for (Element b : s.domain) {
        if (!set(s, from_.mul(a, b), to_.mul(s.image[a], s.image[b]), queue)) return false;
        if (!set(s, from_.mul(b, a), to_.mul(s.image[b], s.image[a]), queue)) return false;
      }
    }
    return true;
  }

  bool recurse(State& s) {
    Element next = kUnset;
    for (Element x = 0; x < from_.order(); ++x)
      if (s.image[x] == kUnset) {
        next = x;
        break;
      }
    if (next == kUnset) return visit_(FiniteMap(to_.order(), s.image));
    for (Element y = 0; y < to_.order(); ++y) {
      if (injective_ && s.used[y]) continue;
      if (!admissible(next, y)) continue;
      State child = s;
      if (!assign(child, next, y)) continue;
      if (!recurse(child)) return false;
    }
    return true;
  }

  LoopTable const& from_;
  LoopTable const& to_;
  bool injective_;
  ImageFilter const& allowed_;
  std::function<bool(FiniteMap const&)> const& visit_;
  std::vector<std::uint64_t> sig_from_, sig_to_;
};

}  // namespace

void for_each_isomorphism(LoopTable const& from, LoopTable const& to, PartialMap const& fixed,
                          ImageFilter const& allowed,
                          std::function<bool(FiniteMap const&)> const& visit) {
  if (from.order() != to.order()) return;
  MorphismSearch search(from, to, true, allowed, visit);
  if (!search.signatures_compatible()) return;
  search.run(fixed);
}

std::optional<FiniteMap> find_isomorphism_if(LoopTable const& from, LoopTable const& to,
                                             PartialMap const& fixed, ImageFilter const& allowed) {
  std::optional<FiniteMap> found;
  for_each_isomorphism(from, to, fixed, allowed, [&](FiniteMap const& m) {
    found = m;
    return false;
  });
  if (found) ensure(is_homomorphism(from, to, *found) && found->is_bijective(), "bad isomorphism");
  return found;
}

std::optional<FiniteMap> find_isomorphism(LoopTable const& from, LoopTable const& to,
                                          PartialMap const& fixed) {
  return find_isomorphism_if(from, to, fixed, {});
}

std::vector<FiniteMap> automorphisms(LoopTable const& loop) {
  std::vector<FiniteMap> out;
  for_each_isomorphism(loop, loop, {}, {}, [&](FiniteMap const& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<FiniteMap> homomorphisms(LoopTable const& from, LoopTable const& to) {
  std::vector<FiniteMap> out;
  ImageFilter none;
  std::function<bool(FiniteMap const&)> visit = [&](FiniteMap const& m) {
    out.push_back(m);
    return true;
  };
  MorphismSearch search(from, to, false, none, visit);
  search.run({});
  return out;
}

FiniteMap inner_automorphism(LoopTable const& group, Element s) {
  if (!is_associative(group)) fail(ErrorKind::NotAGroup, "inner automorphisms need a group");
  Element const inv = group_inverse(group, s);
  std::vector<Element> im(group.order());
  for (Element t = 0; t < group.order(); ++t) im[t] = group.mul(group.mul(s, t), inv);
  return FiniteMap(group.order(), std::move(im));
}

std::vector<FiniteMap> inner_automorphisms(LoopTable const& group) {
  if (!is_associative(group)) fail(ErrorKind::NotAGroup, "inner automorphisms need a group");
  std::vector<FiniteMap> out;
  for (Element s = 0; s < group.order(); ++s) {
    Element const inv = group_inverse(group, s);
    std::vector<Element> im(group.order());
    for (Element t = 0; t < group.order(); ++t) im[t] = group.mul(group.mul(s, t), inv);
    out.emplace_back(group.order(), std::move(im));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace loopforge
