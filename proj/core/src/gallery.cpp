#include "loopforge/gallery.hpp"

#include <algorithm>
#include <mutex>

#include "loopforge/enumerate.hpp"
#include "loopforge/error.hpp"
#include "loopforge/loops.hpp"

namespace loopforge {

namespace {

void require_group(LoopTable const& loop, char const* role) {
  if (!is_associative(loop)) fail(ErrorKind::NotAGroup, std::string(role) + " must be a group");
}

void require_homomorphism(LoopTable const& from, LoopTable const& to, FiniteMap const& map, char const* name) {
  if (map.size() != from.order() || map.codomain_size() != to.order())
    fail(ErrorKind::NotAHomomorphism, std::string(name) + " has " + std::to_string(map.size()) +
                                          " images but its domain has order " + std::to_string(from.order()));
  if (!is_homomorphism(from, to, map)) fail(ErrorKind::NotAHomomorphism, std::string(name) + " is not multiplicative");
}

bool image_is_central(LoopTable const& g, FiniteMap const& map) {
  ElementSubset const z = center(g);
  return std::all_of(map.images().begin(), map.images().end(), [&](Element v) { return z.contains(v); });
}

std::vector<FiniteMap> identity_thetas(LoopTable const& k, LoopTable const& g) {
  return std::vector<FiniteMap>(k.order(), FiniteMap::identity(g.order()));
}

bool some_value_noncentral(SchreierData const& d) {
  ElementSubset const z = center(d.g());
  return std::any_of(d.factor().begin(), d.factor().end(), [&](Element v) { return !z.contains(v); });
}

// Post-conditions shared by the automorphism-free examples.
void check_nuclear_shape(SchreierData const& d) {
  SchreierClassification const c = classify_schreier(d);
  ensure(c.middle_nuclear && c.right_nuclear, "example output must be middle and right nuclear");
  if (some_value_noncentral(d)) ensure(!c.fully_nuclear, "non-central factor values must break full nuclearity");
}

}  // namespace

GalleryExample example_bol(LoopTable const& k, LoopTable const& g, FiniteMap const& chi) {
  if (!has_property(k, Property::right_bol)) fail(ErrorKind::NotRightBol, "K does not satisfy the right Bol identity");
  require_group(g, "G");
  PermutationGroup const h = right_inner_group(k);
  require_homomorphism(h.table, g, chi, "chi");

  std::size_t const nk = k.order();
  std::vector<Element> factor(nk * nk);
  for (Element tau = 0; tau < nk; ++tau)
    for (Element sigma = 0; sigma < nk; ++sigma)
      factor[tau * nk + sigma] = chi(h.index_of(right_inner(k, sigma, tau).images()));

  GalleryExample out{SchreierData(k, g, identity_thetas(k, g), std::move(factor), "bol"), {}};
  if (image_is_central(g, chi)) out.warnings.push_back("chi(H) lies in the center of G");
  check_nuclear_shape(out.data);
  return out;
}

GalleryExample example_commutator(LoopTable const& k, LoopTable const& g, FiniteMap const& phi) {
  require_group(k, "K");
  require_group(g, "G");
  ElementSubset const derived = commutator_subgroup(k);
  require_homomorphism(restrict_to(k, derived), g, phi, "phi");

  std::size_t const nk = k.order();
  auto inv = [&](Element x) { return group_inverse(k, x); };
  std::vector<Element> factor(nk * nk);
  for (Element tau = 0; tau < nk; ++tau)
    for (Element sigma = 0; sigma < nk; ++sigma) {
      Element const c = k.mul(k.mul(k.mul(inv(sigma), inv(tau)), sigma), tau);
      factor[tau * nk + sigma] = phi(static_cast<Element>(derived.position(c)));
    }

  GalleryExample out{SchreierData(k, g, identity_thetas(k, g), std::move(factor), "commutator"), {}};
  if (derived.size() == 1) out.warnings.push_back("Abelian: K is abelian, so f = e");
  if (image_is_central(g, phi)) out.warnings.push_back("phi(K') lies in the center of G");
  check_nuclear_shape(out.data);
  return out;
}

GalleryExample example_conjugation(LoopTable const& k, LoopTable const& g, FiniteMap const& phi) {
  require_group(k, "K");
  require_group(g, "G");
  require_homomorphism(k, g, phi, "phi");

  std::vector<FiniteMap> theta;
  theta.reserve(k.order());
  for (Element sigma = 0; sigma < k.order(); ++sigma) {
    Element const p = phi(sigma);
    std::vector<Element> images(g.order());
    for (Element u = 0; u < g.order(); ++u) images[u] = g.mul(g.mul(group_inverse(g, p), u), p);
    theta.emplace_back(g.order(), std::move(images));
  }
  GalleryExample out{
      SchreierData(k, g, std::move(theta), std::vector<Element>(k.order() * k.order(), 0), "conjugation"), {}};
  if (image_is_central(g, phi)) out.warnings.push_back("phi(K) lies in the center of G");
  return out;
}

SchreierData fixture_z4() {
  return SchreierData(cyclic_group(2), cyclic_group(2), identity_thetas(cyclic_group(2), cyclic_group(2)),
                      {0, 0, 0, 1}, "E-Z4");
}

SchreierData fixture_s3f() {
  LoopTable const k = cyclic_group(2);
  LoopTable const g = symmetric_group(3);
  return SchreierData(k, g, identity_thetas(k, g), {0, 0, 0, 2}, "E-S3f");
}

SchreierData fixture_v4() {
  LoopTable const k = cyclic_group(2);
  LoopTable const g = klein_four();
  return SchreierData(k, g, {FiniteMap::identity(4), FiniteMap(4, {0, 2, 1, 3})}, {0, 0, 0, 0}, "E-V4");
}

std::vector<FiniteMap> fixture_psi_maps() { return {FiniteMap::identity(4), FiniteMap(4, {0, 2, 1, 3})}; }

LoopTable fixture_bol8() {
  static std::once_flag once;
  static LoopTable bol;
  std::call_once(once, [] {
    auto found = enumerate_loops(8, parse_filter("rightBol,!associative"));
    ensure(!found.empty(), "no nonassociative right Bol loop of order 8 was found");
    bol = found.front();
    bol.set_label("E-Bol8");
  });
  return bol;
}

std::vector<std::string> fixture_names() { return {"E-Z4", "E-S3f", "E-V4"}; }

SchreierData fixture_by_name(std::string_view name) {
  if (name == "E-Z4") return fixture_z4();
  if (name == "E-S3f") return fixture_s3f();
  if (name == "E-V4") return fixture_v4();
  fail(ErrorKind::ParseError, "unknown fixture '" + std::string(name) + "' (expected E-Z4, E-S3f or E-V4)");
}

}  // namespace loopforge
