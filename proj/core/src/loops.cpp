#include "loopforge/loops.hpp"

#include <algorithm>
#include <set>

#include "loopforge/error.hpp"

namespace loopforge {

FiniteMap left_translation(LoopTable const& loop, Element x) {
  auto r = loop.row(x);
  return FiniteMap(loop.order(), std::vector<Element>(r.begin(), r.end()));
}

FiniteMap right_translation(LoopTable const& loop, Element x) {
  std::vector<Element> im(loop.order());
  for (Element y = 0; y < loop.order(); ++y) im[y] = loop.mul(y, x);
  return FiniteMap(loop.order(), std::move(im));
}

FiniteMap middle_inner(LoopTable const& loop, Element x) {
  std::vector<Element> im(loop.order());
  for (Element y = 0; y < loop.order(); ++y) im[y] = loop.rdiv(loop.mul(x, y), x);
  return FiniteMap(loop.order(), std::move(im));
}

FiniteMap right_inner(LoopTable const& loop, Element x, Element y) {
  Element const yx = loop.mul(y, x);
  std::vector<Element> im(loop.order());
  for (Element z = 0; z < loop.order(); ++z) im[z] = loop.rdiv(loop.mul(loop.mul(z, y), x), yx);
  return FiniteMap(loop.order(), std::move(im));
}

bool is_left_nuclear(LoopTable const& L, Element u) {
  for (Element x = 0; x < L.order(); ++x) {
    Element const ux = L.mul(u, x);
    for (Element y = 0; y < L.order(); ++y)
      if (L.mul(ux, y) != L.mul(u, L.mul(x, y))) return false;
  }
  return true;
}

bool is_right_nuclear(LoopTable const& L, Element u) {
  for (Element x = 0; x < L.order(); ++x)
    for (Element y = 0; y < L.order(); ++y)
      if (L.mul(L.mul(x, y), u) != L.mul(x, L.mul(y, u))) return false;
  return true;
}

bool is_middle_nuclear(LoopTable const& L, Element u) {
  for (Element x = 0; x < L.order(); ++x) {
    Element const xu = L.mul(x, u);
    for (Element y = 0; y < L.order(); ++y)
      if (L.mul(xu, y) != L.mul(x, L.mul(u, y))) return false;
  }
  return true;
}

ElementSubset nucleus(LoopTable const& loop, NucleusPart part) {
  std::vector<Element> members;
  for (Element u = 0; u < loop.order(); ++u) {
    bool keep = false;
    switch (part) {
      case NucleusPart::left: keep = is_left_nuclear(loop, u); break;
      case NucleusPart::right: keep = is_right_nuclear(loop, u); break;
      case NucleusPart::middle: keep = is_middle_nuclear(loop, u); break;
      case NucleusPart::full:
        keep = is_left_nuclear(loop, u) && is_right_nuclear(loop, u) && is_middle_nuclear(loop, u);
        break;
    }
    if (keep) members.push_back(u);
  }
  ElementSubset out(loop.order(), std::move(members));
  ensure(out.contains(0) && is_subgroup(loop, out), "nucleus is not a subgroup");
  return out;
}

ElementSubset commutant(LoopTable const& loop, ElementSubset const& subset) {
  std::vector<Element> members;
  for (Element u = 0; u < loop.order(); ++u) {
    bool ok = true;
    for (Element s : subset)
      if (loop.mul(u, s) != loop.mul(s, u)) {
        ok = false;
        break;
      }
    if (ok) members.push_back(u);
  }
  return ElementSubset(loop.order(), std::move(members));
}

ElementSubset center(LoopTable const& loop) {
  return intersect(nucleus(loop, NucleusPart::full),
                   commutant(loop, ElementSubset::whole(loop.order())));
}

bool is_closed(LoopTable const& loop, ElementSubset const& s) {
  if (s.empty()) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(loop.mul(x, y))) return false;
  return true;
}

bool is_subgroup(LoopTable const& loop, ElementSubset const& s) {
  if (!is_closed(loop, s)) return false;
  for (Element x : s)
    for (Element y : s) {
      Element const xy = loop.mul(x, y);
      for (Element z : s)
        if (loop.mul(xy, z) != loop.mul(x, loop.mul(y, z))) return false;
    }
  return true;
}

bool is_associative(LoopTable const& loop) {
  return is_subgroup(loop, ElementSubset::whole(loop.order()));
}

bool is_commutative(LoopTable const& loop) {
  for (Element x = 0; x < loop.order(); ++x)
    for (Element y = x + 1; y < loop.order(); ++y)
      if (loop.mul(x, y) != loop.mul(y, x)) return false;
  return true;
}

ElementSubset subloop_closure(LoopTable const& loop, ElementSubset const& generators) {
  // In a finite loop, closure under multiplication alone already gives
  // closure under both divisions.
  std::vector<bool> in(loop.order(), false);
  std::vector<Element> members{0};
  in[0] = true;
  for (Element g : generators)
    if (!in[g]) {
      in[g] = true;
      members.push_back(g);
    }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Element p : {loop.mul(members[i], members[j]), loop.mul(members[j], members[i])}) {
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
    }
  }
  return ElementSubset(loop.order(), std::move(members));
}

ElementSubset commutator_subgroup(LoopTable const& group) {
  if (!is_associative(group)) fail(ErrorKind::NotAGroup, "commutator subgroup of a nonassociative loop");
  std::vector<Element> commutators;
  for (Element s = 0; s < group.order(); ++s)
    for (Element t = 0; t < group.order(); ++t) {
      Element const c = group.mul(group.mul(group_inverse(group, s), group_inverse(group, t)),
                                  group.mul(s, t));
      commutators.push_back(c);
    }
  return subloop_closure(group, ElementSubset(group.order(), std::move(commutators)));
}

LoopTable restrict_to(LoopTable const& loop, ElementSubset const& s) {
  if (!is_closed(loop, s) || !s.contains(0))
    fail(ErrorKind::NotASubloop, "subset is not closed under multiplication");
  std::size_t const k = s.size();
  std::vector<Element> cells(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      cells[i * k + j] = static_cast<Element>(s.position(loop.mul(s[i], s[j])));
  return validate_loop(k, cells);
}

std::vector<ElementSubset> subloops(LoopTable const& loop) {
  std::set<std::vector<Element>> seen;
  std::vector<ElementSubset> found;
  found.push_back(ElementSubset::trivial(loop.order()));
  seen.insert(found.back().members());
  for (std::size_t i = 0; i < found.size(); ++i) {
    ElementSubset const current = found[i];
    for (Element x = 0; x < loop.order(); ++x) {
      if (current.contains(x)) continue;
      std::vector<Element> gens = current.members();
      gens.push_back(x);
      ElementSubset next = subloop_closure(loop, ElementSubset(loop.order(), gens));
      if (seen.insert(next.members()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](ElementSubset const& a, ElementSubset const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return found;
}

std::vector<ElementSubset> normal_subgroups(LoopTable const& loop) {
  std::vector<ElementSubset> out;
  for (auto& s : subloops(loop))
    if (is_subgroup(loop, s) && is_normal(loop, s)) out.push_back(s);
  return out;
}

namespace {

// Block label per element when the left cosets partition the loop, or an
// empty vector when they do not.
std::vector<int> coset_labels(LoopTable const& loop, ElementSubset const& s,
                              std::vector<ElementSubset>* cosets) {
  std::size_t const n = loop.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (Element x = 0; x < n; ++x) {
    if (label[x] >= 0) continue;
    std::vector<Element> block;
    for (Element t : s) {
      Element const y = loop.mul(x, t);
      if (label[y] >= 0) return {};
      label[y] = next;
      block.push_back(y);
    }
    if (cosets) cosets->emplace_back(n, std::move(block));
    ++next;
  }
  for (Element x = 0; x < n; ++x)
    for (Element t : s)
      if (label[loop.mul(x, t)] != label[x]) return {};
  return label;
}

void require_subloop(LoopTable const& loop, ElementSubset const& s) {
  if (s.universe() != loop.order() || !s.contains(0) || !is_closed(loop, s))
    fail(ErrorKind::NotASubloop, "subset is not a subloop");
}

}  // namespace

std::vector<ElementSubset> left_cosets(LoopTable const& loop, ElementSubset const& subloop) {
  require_subloop(loop, subloop);
  std::vector<ElementSubset> cosets;
  if (coset_labels(loop, subloop, &cosets).empty())
    fail(ErrorKind::NotNormal, "left cosets do not partition the loop");
  return cosets;
}

bool is_normal(LoopTable const& loop, ElementSubset const& subloop) {
  require_subloop(loop, subloop);
  auto const label = coset_labels(loop, subloop, nullptr);
  if (label.empty()) return false;
  for (Element x = 0; x < loop.order(); ++x)
    for (Element y = 0; y < loop.order(); ++y) {
      int const target = label[loop.mul(x, y)];
      for (Element s : subloop) {
        Element const xs = loop.mul(x, s);
        for (Element t : subloop)
          if (label[loop.mul(xs, loop.mul(y, t))] != target) return false;
      }
    }
  return true;
}

FactorLoop factor_loop(LoopTable const& loop, ElementSubset const& normal) {
  if (!is_normal(loop, normal)) fail(ErrorKind::NotNormal, "subloop is not normal");
  FactorLoop out;
  out.cosets = left_cosets(loop, normal);
  std::size_t const k = out.cosets.size();
  std::vector<Element> proj(loop.order());
  for (std::size_t c = 0; c < k; ++c)
    for (Element x : out.cosets[c]) proj[x] = static_cast<Element>(c);
  std::vector<Element> cells(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      cells[a * k + b] = proj[loop.mul(out.cosets[a][0], out.cosets[b][0])];
  out.quotient = validate_loop(k, cells, loop.label().empty() ? "" : loop.label() + "/N");
  out.projection = FiniteMap(k, std::move(proj));
  ensure(out.cosets[0] == normal, "coset 0 differs from the normal subloop");
  ensure(is_homomorphism(loop, out.quotient, out.projection), "projection is not a homomorphism");
  return out;
}

void for_each_left_transversal(LoopTable const& loop, ElementSubset const& subloop,
                               std::function<bool(ElementSubset const&)> const& visit) {
  auto const cosets = left_cosets(loop, subloop);
  std::size_t const k = cosets.size();
  std::vector<std::size_t> choice(k, 0);
  while (true) {
    std::vector<Element> members(k);
    members[0] = 0;
    for (std::size_t c = 1; c < k; ++c) members[c] = cosets[c][choice[c]];
    if (!visit(ElementSubset(loop.order(), std::move(members)))) return;
    std::size_t c = k;
    while (c > 1) {
      --c;
      if (++choice[c] < cosets[c].size()) break;
      choice[c] = 0;
      if (c == 1) return;
    }
    if (k == 1) return;
  }
}

std::vector<ElementSubset> left_transversals(LoopTable const& loop, ElementSubset const& subloop) {
  std::vector<ElementSubset> out;
  for_each_left_transversal(loop, subloop, [&](ElementSubset const& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::string_view property_name(Property p) noexcept {
  switch (p) {
    case Property::associative: return "associative";
    case Property::commutative: return "commutative";
    case Property::left_inverse: return "leftInverse";
    case Property::right_inverse: return "rightInverse";
    case Property::left_alternative: return "leftAlternative";
    case Property::right_alternative: return "rightAlternative";
    case Property::flexible: return "flexible";
    case Property::left_bol: return "leftBol";
    case Property::right_bol: return "rightBol";
  }
  return "unknown";
}

Property parse_property(std::string_view name) {
  for (Property p : kAllProperties)
    if (property_name(p) == name) return p;
  fail(ErrorKind::ParseError, "unknown property '" + std::string(name) + "'");
}

bool LoopProperties::get(Property p) const noexcept {
  switch (p) {
    case Property::associative: return associative;
    case Property::commutative: return commutative;
    case Property::left_inverse: return left_inverse;
    case Property::right_inverse: return right_inverse;
    case Property::left_alternative: return left_alternative;
    case Property::right_alternative: return right_alternative;
    case Property::flexible: return flexible;
    case Property::left_bol: return left_bol;
    case Property::right_bol: return right_bol;
  }
  return false;
}

bool has_property(LoopTable const& L, Property p) {
  std::size_t const n = L.order();
  auto m = [&](Element a, Element b) { return L.mul(a, b); };
  switch (p) {
    case Property::associative: return is_associative(L);
    case Property::commutative: return is_commutative(L);
    case Property::left_inverse:
      for (Element x = 0; x < n; ++x) {
        Element const inv = L.rdiv(0, x);
        for (Element y = 0; y < n; ++y)
          if (m(inv, m(x, y)) != y) return false;
      }
      return true;
    case Property::right_inverse:
      for (Element x = 0; x < n; ++x) {
        Element const inv = L.ldiv(x, 0);
        for (Element y = 0; y < n; ++y)
          if (m(m(y, x), inv) != y) return false;
      }
      return true;
    case Property::left_alternative:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (m(x, m(x, y)) != m(m(x, x), y)) return false;
      return true;
    case Property::right_alternative:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (m(m(y, x), x) != m(y, m(x, x))) return false;
      return true;
    case Property::flexible:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (m(x, m(y, x)) != m(m(x, y), x)) return false;
      return true;
    case Property::left_bol:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          Element const xyx = m(x, m(y, x));
          for (Element z = 0; z < n; ++z)
            if (m(xyx, z) != m(x, m(y, m(x, z)))) return false;
        }
      return true;
    case Property::right_bol:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          Element const xyx = m(m(x, y), x);
          for (Element z = 0; z < n; ++z)
            if (m(z, xyx) != m(m(m(z, x), y), x)) return false;
        }
      return true;
  }
  return false;
}

LoopProperties loop_properties(LoopTable const& loop) {
  LoopProperties p;
  p.associative = has_property(loop, Property::associative);
  p.commutative = has_property(loop, Property::commutative);
  p.left_inverse = has_property(loop, Property::left_inverse);
  p.right_inverse = has_property(loop, Property::right_inverse);
  p.inverses_coincide = true;
  for (Element x = 0; x < loop.order(); ++x)
    if (loop.rdiv(0, x) != loop.ldiv(x, 0)) p.inverses_coincide = false;
  p.left_alternative = has_property(loop, Property::left_alternative);
  p.right_alternative = has_property(loop, Property::right_alternative);
  p.flexible = has_property(loop, Property::flexible);
  p.left_bol = has_property(loop, Property::left_bol);
  p.right_bol = has_property(loop, Property::right_bol);
  return p;
}

}  // namespace loopforge
