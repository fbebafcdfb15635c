#include <doctest.h>

#include <random>

#include "loopforge/corpus.hpp"
#include "loopforge/decomposition.hpp"
#include "loopforge/enumerate.hpp"
#include "loopforge/equivalence.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"
#include "support.hpp"

using namespace loopforge;

namespace {

std::vector<LoopTable> const& ks() {
  static std::vector<LoopTable> const v = loops_up_to(5);
  return v;
}

std::vector<LoopTable> const& gs() {
  static std::vector<LoopTable> const v{cyclic_group(2), cyclic_group(3), klein_four(), symmetric_group(3)};
  return v;
}

FiniteMap random_shift(std::mt19937_64& rng, SchreierData const& d) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(d.g().order() - 1));
  std::vector<Element> n(d.k().order(), 0);
  for (std::size_t s = 1; s < n.size(); ++s) n[s] = pick(rng);
  return FiniteMap(d.g().order(), n);
}

}  // namespace

TEST_CASE("Schreier division agrees with the table") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    SchreierData const d = random_schreier(rng, ks(), gs());
    LoopTable const l = schreier_loop(d);
    for (Element a = 0; a < l.order(); ++a)
      for (Element b = 0; b < l.order(); ++b) {
        CHECK(schreier_divide(d, Side::left, a, b) == l.ldiv(a, b));
        CHECK(schreier_divide(d, Side::right, a, b) == l.rdiv(a, b));
      }
  }
}

TEST_CASE("decomposing a Schreier loop along the standard transversal returns the data") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    SchreierData const d = random_schreier(rng, ks(), gs());
    LoopTable const l = schreier_loop(d);
    ProductCarrier const c = d.carrier();
    ElementSubset const g = embedded_subgroup(c);
    std::vector<Element> sigma;
    for (Element s = 0; s < c.k_order; ++s) sigma.push_back(c.index(s, 0));
    Decomposition const dec = decompose(l, g, canonical_pair(l, g, ElementSubset(l.order(), sigma)));
    CHECK(dec.data == d);
    CHECK(dec.iso.is_identity());
  }
}

TEST_CASE("shifts compose pointwise") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    SchreierData const d = random_schreier(rng, ks(), gs());
    FiniteMap const n1 = random_shift(rng, d);
    FiniteMap const n2 = random_shift(rng, d);
    std::vector<Element> prod(n1.size());
    for (Element s = 0; s < prod.size(); ++s) prod[s] = d.g().mul(n1(s), n2(s));
    CHECK(shift_data(shift_data(d, n1), n2) == shift_data(d, FiniteMap(d.g().order(), prod)));
  }
}

TEST_CASE("narrow equivalence implies wide equivalence") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    SchreierData const a = random_schreier(rng, ks(), gs());
    SchreierData const b = shift_data(a, random_shift(rng, a));
    auto const mus = automorphisms(a.k());
    std::uniform_int_distribution<std::size_t> pick(0, mus.size() - 1);
    SchreierData const c = precompose_automorphism(b, mus[pick(rng)]);
    CHECK(equivalent(a, b));
    auto const w = wide_equivalent(a, c);
    REQUIRE(w);
    CHECK(wide_transform(a, w->mu, w->n) == c);
  }
}

TEST_CASE("canonical forms are relabeling invariants") {
  std::mt19937_64 rng(505);
  for (std::size_t n = 3; n <= 6; ++n)
    for (LoopTable const& l : enumerate_loops(n)) {
      auto const p = oracle::random_fixing_permutation(rng, n, 1);
      LoopTable const moved = validate_loop(n, oracle::relabel_cells(l, p));
      CHECK(canonical_form(moved) == l);
    }
}
