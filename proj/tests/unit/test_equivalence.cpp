#include <doctest.h>

#include <random>

#include "loopforge/corpus.hpp"
#include "loopforge/decomposition.hpp"
#include "loopforge/equivalence.hpp"
#include "loopforge/error.hpp"
#include "loopforge/gallery.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/morphisms.hpp"

using namespace loopforge;

namespace {

FiniteMap random_shift(std::mt19937_64& rng, SchreierData const& d) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(d.g().order() - 1));
  std::vector<Element> n(d.k().order(), 0);
  for (std::size_t s = 1; s < n.size(); ++s) n[s] = pick(rng);
  return FiniteMap(d.g().order(), n);
}

}  // namespace

TEST_CASE("E-Z4 is not equivalent to the direct product") {
  SchreierData const z4 = fixture_z4();
  SchreierData const dp = SchreierData::direct_product(cyclic_group(2), cyclic_group(2));
  CHECK_FALSE(equivalent(z4, dp));
  CHECK_FALSE(wide_equivalent(z4, dp));
  CHECK_FALSE(equivalence_oracle(z4, dp, false));
  CHECK_FALSE(equivalence_oracle(z4, dp, true));
}

TEST_CASE("every datum is equivalent to itself through the trivial shift") {
  for (auto const& name : fixture_names()) {
    SchreierData const d = fixture_by_name(name);
    auto const n = equivalent(d, d);
    REQUIRE(n);
    CHECK(n->images() == std::vector<Element>(d.k().order(), 0));
    auto const w = wide_equivalent(d, d);
    REQUIRE(w);
    CHECK(w->mu.is_identity());
  }
}

TEST_CASE("shifted data are found with a witness") {
  std::mt19937_64 rng(31);
  std::vector<LoopTable> const ks{cyclic_group(2), cyclic_group(3), klein_four()};
  std::vector<LoopTable> const gs{cyclic_group(3), symmetric_group(3), klein_four()};
  for (int trial = 0; trial < 40; ++trial) {
    SchreierData const d = random_schreier(rng, ks, gs);
    SchreierData const e = shift_data(d, random_shift(rng, d));
    auto const n = equivalent(d, e);
    REQUIRE(n);
    CHECK(shift_data(d, *n) == e);
    CHECK(equivalence_oracle(d, e, false));
  }
}

TEST_CASE("precomposition is wide but not always narrow") {
  LoopTable const z3 = cyclic_group(3);
  SchreierData const d(z3, cyclic_group(2), std::vector<FiniteMap>(3, FiniteMap::identity(2)),
                       {0, 0, 0, 0, 1, 0, 0, 0, 0});
  SchreierData const m = precompose_automorphism(d, FiniteMap(3, {0, 2, 1}));
  auto const w = wide_equivalent(d, m);
  REQUIRE(w);
  CHECK(wide_transform(d, w->mu, w->n) == m);
  CHECK(equivalence_oracle(d, m, true));
  CHECK(equivalent(d, m).has_value() == equivalence_oracle(d, m, false));
}

TEST_CASE("oracle maps fix the embedded group") {
  SchreierData const d = fixture_s3f();
  SchreierData const e = shift_data(d, FiniteMap(6, {0, 3}));
  PreparedSchreier const a(d);
  PreparedSchreier const b(e);
  CHECK(a.narrow_invariant == b.narrow_invariant);
  auto const map = equivalence_oracle_map(a, b, false);
  REQUIRE(map);
  for (Element t = 0; t < 6; ++t) CHECK((*map)(t) == t);
  CHECK(is_homomorphism(a.loop, b.loop, *map));
}

TEST_CASE("carrier mismatch") {
  SchreierData const a = fixture_z4();
  SchreierData const b = fixture_v4();
  CHECK_THROWS_AS(equivalent(a, b), LoopError);
  CHECK_THROWS_AS(wide_equivalent(a, b), LoopError);
  CHECK_THROWS_AS(equivalence_oracle(a, b, false), LoopError);
}
