#include "loopforge/decomposition.hpp"

#include <algorithm>

#include "loopforge/error.hpp"
#include "loopforge/morphisms.hpp"

namespace loopforge {

namespace {

// T_x on G in local indices, or nullopt when some image leaves G.
std::optional<FiniteMap> local_middle_inner(LoopTable const& L, ElementSubset const& G, Element x) {
  std::vector<Element> im(G.size());
  for (std::size_t t = 0; t < G.size(); ++t) {
    Element const y = L.rdiv(L.mul(x, G[t]), x);
    if (!G.contains(y)) return std::nullopt;
    im[t] = static_cast<Element>(G.position(y));
  }
  return FiniteMap(G.size(), std::move(im));
}

// t -> x \ (t x), the inverse of T_x on G, or nullopt when it leaves G.
std::optional<FiniteMap> local_inverse_middle_inner(LoopTable const& L, ElementSubset const& G, Element x) {
  std::vector<Element> im(G.size());
  for (std::size_t t = 0; t < G.size(); ++t) {
    Element const y = L.ldiv(x, L.mul(G[t], x));
    if (!G.contains(y)) return std::nullopt;
    im[t] = static_cast<Element>(G.position(y));
  }
  return FiniteMap(G.size(), std::move(im));
}

bool is_transversal(std::vector<ElementSubset> const& cosets, ElementSubset const& sigma) {
  if (!sigma.contains(0) || sigma.size() != cosets.size()) return false;
  for (auto const& c : cosets) {
    std::size_t hits = 0;
    for (Element x : c) hits += sigma.contains(x);
    if (hits != 1) return false;
  }
  return true;
}

Element local_inverse(LoopTable const& G, Element t) { return group_inverse(G, t); }

}  // namespace

DataPair canonical_pair(LoopTable const& loop, ElementSubset const& subgroup,
                        ElementSubset const& transversal) {
  FactorLoop factor = factor_loop(loop, subgroup);
  std::size_t const k = factor.quotient.order();
  return DataPair{std::move(factor.quotient), FiniteMap::identity(k), transversal};
}

std::vector<Element> transversal_section(LoopTable const& loop, ElementSubset const& subgroup,
                                         DataPair const& pair) {
  FactorLoop const factor = factor_loop(loop, subgroup);
  if (pair.domain.order() != factor.quotient.order() || pair.kappa.size() != pair.domain.order() ||
      pair.kappa.codomain_size() != factor.quotient.order())
    fail(ErrorKind::InvalidPair, "kappa does not map K onto the cosets of G");
  if (!pair.kappa.is_bijective() || !is_homomorphism(pair.domain, factor.quotient, pair.kappa))
    fail(ErrorKind::InvalidPair, "kappa is not an isomorphism K -> L/G");
  if (pair.sigma.universe() != loop.order() || !is_transversal(factor.cosets, pair.sigma))
    fail(ErrorKind::InvalidPair, "sigma is not a left transversal through 0");
  if (pair.kappa(0) != 0) fail(ErrorKind::InvalidPair, "kappa does not fix the identity");
  std::vector<Element> section(pair.domain.order());
  for (Element s = 0; s < pair.domain.order(); ++s) {
    for (Element x : factor.cosets[pair.kappa(s)])
      if (pair.sigma.contains(x)) section[s] = x;
  }
  return section;
}

void require_middle_right_nuclear(LoopTable const& loop, ElementSubset const& G) {
  if (G.universe() != loop.order() || !is_subgroup(loop, G) || !G.contains(0))
    fail(ErrorKind::NotAGroup, "subset is not a subgroup");
  if (!is_normal(loop, G)) fail(ErrorKind::NotNormal, "subgroup is not normal");
  for (Element t : G)
    if (!is_middle_nuclear(loop, t) || !is_right_nuclear(loop, t))
      fail(ErrorKind::NotMiddleRightNuclear,
           "element " + std::to_string(t) + " of G is not middle and right nuclear");
}

std::vector<FiniteMap> t_restriction(LoopTable const& loop, ElementSubset const& G) {
  require_middle_right_nuclear(loop, G);
  LoopTable const g = restrict_to(loop, G);
  std::vector<FiniteMap> out;
  out.reserve(loop.order());
  for (Element x = 0; x < loop.order(); ++x) {
    auto m = local_middle_inner(loop, G, x);
    ensure(m.has_value(), "T_x does not preserve G");
    ensure(m->is_bijective() && is_homomorphism(g, g, *m), "T_x on G is not an automorphism");
    out.push_back(std::move(*m));
  }
  for (std::size_t r = 0; r < G.size(); ++r)
    ensure(out[G[r]] == inner_automorphism(g, static_cast<Element>(r)), "T_r on G is not iota_r");
  return out;
}

bool t_factorization_check(LoopTable const& loop, ElementSubset const& G) {
  auto const t = t_restriction(loop, G);
  LoopTable const g = restrict_to(loop, G);
  std::vector<FiniteMap> iota;
  for (Element r = 0; r < g.order(); ++r) iota.push_back(inner_automorphism(g, r));
  for (Element x = 0; x < loop.order(); ++x)
    for (std::size_t r = 0; r < G.size(); ++r) {
      if (!(t[loop.mul(x, G[r])] == compose(t[x], iota[r]))) return false;
      if (!(t[loop.mul(G[r], x)] == compose(iota[r], t[x]))) return false;
    }
  return true;
}

std::vector<FiniteMap> outer_map(LoopTable const& loop, ElementSubset const& G) {
  auto const t = t_restriction(loop, G);
  LoopTable const g = restrict_to(loop, G);
  std::vector<FiniteMap> iota;
  for (Element r = 0; r < g.order(); ++r) iota.push_back(inner_automorphism(g, r));
  auto label_of = [&](Element x) {
    FiniteMap best = compose(t[x], iota[0]);
    for (auto const& i : iota) best = std::min(best, compose(t[x], i));
    return best;
  };
  auto const cosets = left_cosets(loop, G);
  std::vector<FiniteMap> out;
  for (auto const& c : cosets) {
    FiniteMap label = label_of(c[0]);
    for (Element x : c) ensure(label_of(x) == label, "outer map depends on the coset representative");
    out.push_back(std::move(label));
  }
  return out;
}

InnerImage all_t_inner(LoopTable const& loop, ElementSubset const& G) {
  auto const t = t_restriction(loop, G);
  LoopTable const g = restrict_to(loop, G);
  std::vector<FiniteMap> iota;
  for (Element r = 0; r < g.order(); ++r) iota.push_back(inner_automorphism(g, r));
  auto inner_index = [&](Element x) -> std::optional<Element> {
    for (Element r = 0; r < g.order(); ++r)
      if (t[x] == iota[r]) return r;
    return std::nullopt;
  };

  InnerImage out;
  out.all_inner = true;
  for (Element x = 0; x < loop.order() && out.all_inner; ++x) out.all_inner = inner_index(x).has_value();

  ElementSubset const comm = commutant(loop, G);
  auto const cosets = left_cosets(loop, G);
  if (out.all_inner) {
    std::vector<Element> members;
    for (auto const& c : cosets) {
      Element const x = c[0];
      Element const r = c[0] == 0 ? 0 : *inner_index(x);
      members.push_back(loop.mul(x, G[local_inverse(g, r)]));
    }
    ElementSubset witness(loop.order(), std::move(members));
    ensure(is_transversal(cosets, witness), "corrected set is not a left transversal");
    ensure(witness.is_subset_of(comm), "corrected transversal is not in the commutant");
    out.witness = std::move(witness);
  } else {
    bool found = false;
    for_each_left_transversal(loop, G, [&](ElementSubset const& sigma) {
      found = sigma.is_subset_of(comm);
      return !found;
    });
    ensure(!found, "a transversal lies in the commutant although some T_x is outer");
  }
  return out;
}

bool t_is_homomorphism(LoopTable const& loop, ElementSubset const& G) {
  auto const t = t_restriction(loop, G);
  bool hom = true;
  for (Element x = 0; x < loop.order() && hom; ++x)
    for (Element y = 0; y < loop.order(); ++y)
      if (!(t[loop.mul(x, y)] == compose(t[x], t[y]))) {
        hom = false;
        break;
      }
  bool left = true;
  for (Element s : G) left = left && is_left_nuclear(loop, s);
  ensure(hom == left, "multiplicativity of T disagrees with left nuclearity of G");
  return hom;
}

namespace {

// Extraction shared by the checked and the unchecked entry points. Returns
// nullopt as soon as a value falls outside G or the data is invalid.
std::optional<SchreierData> extract(LoopTable const& loop, ElementSubset const& G, DataPair const& pair,
                                    std::vector<Element> const& l) {
  LoopTable const g = restrict_to(loop, G);
  LoopTable const& k = pair.domain;
  std::vector<FiniteMap> theta;
  for (Element s = 0; s < k.order(); ++s) {
    auto m = local_inverse_middle_inner(loop, G, l[s]);
    if (!m) return std::nullopt;
    theta.push_back(std::move(*m));
  }
  std::vector<Element> f(k.order() * k.order());
  for (Element s = 0; s < k.order(); ++s)
    for (Element t = 0; t < k.order(); ++t) {
      Element const v = loop.ldiv(l[k.mul(s, t)], loop.mul(l[s], l[t]));
      if (!G.contains(v)) return std::nullopt;
      f[s * k.order() + t] = static_cast<Element>(G.position(v));
    }
  try {
    return SchreierData(k, g, std::move(theta), std::move(f));
  } catch (LoopError const&) {
    return std::nullopt;
  }
}

FiniteMap section_map(LoopTable const& loop, ElementSubset const& G, std::vector<Element> const& l) {
  std::size_t const ng = G.size();
  std::vector<Element> im(l.size() * ng);
  for (std::size_t s = 0; s < l.size(); ++s)
    for (std::size_t t = 0; t < ng; ++t) im[s * ng + t] = loop.mul(l[s], G[t]);
  return FiniteMap(loop.order(), std::move(im));
}

}  // namespace

SchreierData schreier_data_from_pair(LoopTable const& loop, ElementSubset const& G, DataPair const& pair) {
  require_middle_right_nuclear(loop, G);
  auto const l = transversal_section(loop, G, pair);
  auto data = extract(loop, G, pair, l);
  ensure(data.has_value(), "extraction from a middle and right nuclear subgroup left G");
  return std::move(*data);
}

Decomposition decompose(LoopTable const& loop, ElementSubset const& G, DataPair const& pair) {
  SchreierData data = schreier_data_from_pair(loop, G, pair);
  auto const l = transversal_section(loop, G, pair);
  LoopTable const product = schreier_loop(data);
  FiniteMap iso = section_map(loop, G, l);
  ensure(iso.is_bijective() && is_homomorphism(product, loop, iso), "F is not an isomorphism");
  for (std::size_t t = 0; t < G.size(); ++t) ensure(iso(static_cast<Element>(t)) == G[t], "F moves G");
  FactorLoop const factor = factor_loop(loop, G);
  ProductCarrier const c = data.carrier();
  for (Element s = 0; s < pair.domain.order(); ++s)
    ensure(factor.projection(iso(c.index(s, 0))) == pair.kappa(s), "underlying isomorphism is not kappa");
  return Decomposition{std::move(data), std::move(iso), pair};
}

std::optional<Decomposition> attempt_decomposition(LoopTable const& loop, ElementSubset const& G,
                                                   DataPair const& pair) {
  auto const l = transversal_section(loop, G, pair);
  auto data = extract(loop, G, pair, l);
  if (!data) return std::nullopt;
  LoopTable const product = schreier_loop(*data);
  FiniteMap iso = section_map(loop, G, l);
  if (!iso.is_bijective() || !is_homomorphism(product, loop, iso)) return std::nullopt;
  return Decomposition{std::move(*data), std::move(iso), pair};
}

bool has_schreier_decomposition(LoopTable const& loop, ElementSubset const& G) {
  if (G.universe() != loop.order() || !G.contains(0) || !is_subgroup(loop, G))
    fail(ErrorKind::NotAGroup, "subset is not a subgroup");
  if (!is_normal(loop, G)) fail(ErrorKind::NotNormal, "subgroup is not normal");
  bool nuclear = true;
  for (Element t : G) nuclear = nuclear && is_middle_nuclear(loop, t) && is_right_nuclear(loop, t);
  ElementSubset const first = left_transversals(loop, G).front();
  DataPair const pair = canonical_pair(loop, G, first);
  if (nuclear) {
    decompose(loop, G, pair);
  } else {
    ensure(!attempt_decomposition(loop, G, pair).has_value(),
           "extraction succeeded for a subgroup that is not middle and right nuclear");
  }
  return nuclear;
}

SchreierData shift_data(SchreierData const& d, FiniteMap const& n) {
  LoopTable const& k = d.k();
  LoopTable const& g = d.g();
  if (n.size() != k.order() || n.codomain_size() != g.order())
    fail(ErrorKind::BadShift, "n must map K into G");
  if (n(0) != 0) fail(ErrorKind::BadShift, "n(e) != e");
  auto inv = [&](Element x) { return group_inverse(g, x); };
  std::vector<FiniteMap> theta;
  for (Element s = 0; s < k.order(); ++s) {
    Element const ns = n(s);
    std::vector<Element> im(g.order());
    for (Element t = 0; t < g.order(); ++t) im[t] = g.mul(g.mul(inv(ns), d.theta(s)(t)), ns);
    theta.emplace_back(g.order(), std::move(im));
  }
  std::vector<Element> f(k.order() * k.order());
  for (Element s = 0; s < k.order(); ++s)
    for (Element t = 0; t < k.order(); ++t) {
      Element v = inv(n(k.mul(s, t)));
      v = g.mul(v, d.f(s, t));
      v = g.mul(v, d.theta(t)(n(s)));
      v = g.mul(v, n(t));
      f[s * k.order() + t] = v;
    }
  return SchreierData(k, g, std::move(theta), std::move(f), d.label());
}

ShiftResult shift_transversal(LoopTable const& loop, ElementSubset const& G, DataPair const& pair,
                              FiniteMap const& n) {
  if (n.size() != pair.domain.order() || n.codomain_size() != G.size())
    fail(ErrorKind::BadShift, "n must map K into G");
  if (n(0) != 0) fail(ErrorKind::BadShift, "n(e) != e");
  SchreierData const before = schreier_data_from_pair(loop, G, pair);
  auto const l = transversal_section(loop, G, pair);
  std::vector<Element> members;
  for (Element s = 0; s < l.size(); ++s) members.push_back(loop.mul(l[s], G[n(s)]));
  DataPair shifted{pair.domain, pair.kappa, ElementSubset(loop.order(), std::move(members))};
  SchreierData formula = shift_data(before, n);
  SchreierData const extracted = schreier_data_from_pair(loop, G, shifted);
  ensure(formula == extracted, "transversal change formula disagrees with re-extraction");
  return ShiftResult{std::move(shifted), std::move(formula)};
}

SchreierData precompose_automorphism(SchreierData const& d, FiniteMap const& mu) {
  LoopTable const& k = d.k();
  if (mu.size() != k.order() || mu.codomain_size() != k.order() || !mu.is_bijective() ||
      !is_homomorphism(k, k, mu))
    fail(ErrorKind::NotAnAutomorphism, "mu is not an automorphism of K");
  std::vector<FiniteMap> theta;
  for (Element t = 0; t < k.order(); ++t) theta.push_back(d.theta(mu(t)));
  std::vector<Element> f(k.order() * k.order());
  for (Element s = 0; s < k.order(); ++s)
    for (Element t = 0; t < k.order(); ++t) f[s * k.order() + t] = d.f(mu(s), mu(t));
  SchreierData out(k, d.g(), std::move(theta), std::move(f), d.label());

  ProductCarrier const c = d.carrier();
  std::vector<Element> im(c.size());
  for (Element i = 0; i < c.size(); ++i) im[i] = c.index(mu(c.k_part(i)), c.g_part(i));
  FiniteMap const m(c.size(), std::move(im));
  ensure(is_homomorphism(schreier_loop(out), schreier_loop(d), m), "(s,t) -> (mu(s),t) is not an isomorphism");
  for (Element t = 0; t < c.g_order; ++t) ensure(m(t) == t, "(s,t) -> (mu(s),t) moves G");
  return out;
}

DecompositionWitness has_automorphism_free_decomposition(LoopTable const& loop, ElementSubset const& G) {
  require_middle_right_nuclear(loop, G);
  ElementSubset const comm = commutant(loop, G);
  auto const cosets = left_cosets(loop, G);
  DecompositionWitness out;
  std::vector<Element> members;
  for (auto const& c : cosets) {
    auto it = std::find_if(c.begin(), c.end(), [&](Element x) { return comm.contains(x); });
    if (it == c.end()) break;
    members.push_back(*it);
  }
  out.exists = members.size() == cosets.size();
  if (out.exists) {
    out.pair = canonical_pair(loop, G, ElementSubset(loop.order(), std::move(members)));
    ensure(schreier_data_from_pair(loop, G, *out.pair).automorphism_free(),
           "commutant transversal gave a nontrivial Theta");
  }
  ensure(out.exists == all_t_inner(loop, G).all_inner,
         "automorphism-free decomposability disagrees with inner-ness of T");
  return out;
}

DecompositionWitness has_factor_free_decomposition(LoopTable const& loop, ElementSubset const& G) {
  require_middle_right_nuclear(loop, G);
  DecompositionWitness out;
  for_each_left_transversal(loop, G, [&](ElementSubset const& sigma) {
    if (!is_closed(loop, sigma)) return true;
    out.exists = true;
    out.pair = canonical_pair(loop, G, sigma);
    return false;
  });
  if (out.exists)
    ensure(schreier_data_from_pair(loop, G, *out.pair).factor_free(),
           "subloop transversal gave a nontrivial factor set");
  return out;
}

}  // namespace loopforge
