#include <doctest.h>

#include "loopforge/decomposition.hpp"
#include "loopforge/error.hpp"
#include "loopforge/extensions.hpp"
#include "loopforge/gallery.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"
#include "support.hpp"

using namespace loopforge;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (LoopError const& e) {
    return e.kind();
  }
  FAIL("no LoopError thrown");
  return ErrorKind::ParseError;
}

ElementSubset set(std::size_t n, std::vector<Element> m) { return ElementSubset(n, std::move(m)); }

struct Built {
  SchreierData data;
  LoopTable loop;
  ElementSubset g;
};

Built build(SchreierData d) {
  LoopTable l = schreier_loop(d);
  ElementSubset g = embedded_subgroup(d.carrier());
  return {std::move(d), std::move(l), std::move(g)};
}

}  // namespace

TEST_CASE("extraction from a data pair") {
  LoopTable const z4 = cyclic_group(4);
  ElementSubset const g = set(4, {0, 2});
  for (auto sigma : {set(4, {0, 1}), set(4, {0, 3})}) {
    SchreierData const d = schreier_data_from_pair(z4, g, canonical_pair(z4, g, sigma));
    CHECK(d.theta(1).is_identity());
    CHECK(g[d.f(1, 1)] == 2);
  }

  SchreierData const dp = SchreierData::direct_product(cyclic_group(3), symmetric_group(3));
  Built const b = build(dp);
  DataPair const pair = canonical_pair(b.loop, b.g, set(18, {0, 6, 12}));
  CHECK(schreier_data_from_pair(b.loop, b.g, pair) == dp);
}

TEST_CASE("pairs are validated") {
  LoopTable const z4 = cyclic_group(4);
  ElementSubset const g = set(4, {0, 2});
  CHECK(kind_of([&] { transversal_section(z4, g, canonical_pair(z4, g, set(4, {0, 2}))); }) ==
        ErrorKind::InvalidPair);
  DataPair bad = canonical_pair(z4, g, set(4, {0, 1}));
  bad.kappa = FiniteMap(2, {1, 0});
  CHECK(kind_of([&] { transversal_section(z4, g, bad); }) == ErrorKind::InvalidPair);
}

TEST_CASE("decompose builds F(sigma, s) = l_sigma s") {
  LoopTable const z4 = cyclic_group(4);
  ElementSubset const g = set(4, {0, 2});
  Decomposition const d = decompose(z4, g, canonical_pair(z4, g, set(4, {0, 1})));
  CHECK(d.iso.images() == std::vector<Element>{0, 2, 1, 3});
  CHECK(d.iso(d.data.carrier().index(1, 1)) == 3);
}

TEST_CASE("decompose recovers a relabeling that fixes G") {
  Built const b = build(fixture_s3f());
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto const p = oracle::random_fixing_permutation(rng, 12, 6);
    LoopTable const moved = validate_loop(12, oracle::relabel_cells(b.loop, p));
    Decomposition const d = decompose(moved, b.g, canonical_pair(moved, b.g, set(12, {0, p[6]})));
    CHECK(d.data == b.data);
    CHECK(d.iso.images() == p);
  }
}

TEST_CASE("existence of a Schreier decomposition") {
  for (auto const& name : fixture_names()) {
    Built const b = build(fixture_by_name(name));
    CHECK(has_schreier_decomposition(b.loop, b.g));
  }
  PsiExtension const psi = psi_extension(cyclic_group(2), cyclic_group(4), fixture_psi_maps());
  CHECK_FALSE(has_schreier_decomposition(psi.loop, set(8, {0, 1, 2, 3})));
  CHECK(kind_of([&] { has_schreier_decomposition(symmetric_group(3), set(6, {0, 2})); }) == ErrorKind::NotNormal);
  CHECK(kind_of([&] { require_middle_right_nuclear(psi.loop, set(8, {0, 1, 2, 3})); }) ==
        ErrorKind::NotMiddleRightNuclear);
  CHECK_FALSE(attempt_decomposition(psi.loop, set(8, {0, 1, 2, 3}),
                                    canonical_pair(psi.loop, set(8, {0, 1, 2, 3}), set(8, {0, 4}))));
}

TEST_CASE("middle inner mappings on G") {
  LoopTable const s3 = symmetric_group(3);
  ElementSubset const a3 = set(6, {0, 3, 4});
  auto const t = t_restriction(s3, a3);
  CHECK(t[2].images() == std::vector<Element>{0, 2, 1});
  CHECK(t[3].is_identity());
  auto const outer = outer_map(s3, a3);
  REQUIRE(outer.size() == 2);
  CHECK(outer[0].is_identity());
  CHECK_FALSE(outer[1].is_identity());

  Built const s3f = build(fixture_s3f());
  CHECK(t_restriction(s3f.loop, s3f.g)[6].is_identity());
  CHECK(t_factorization_check(s3f.loop, s3f.g));
  Built const v4 = build(fixture_v4());
  CHECK(t_factorization_check(v4.loop, v4.g));
  CHECK(outer_map(v4.loop, v4.g)[1].images() == std::vector<Element>{0, 2, 1, 3});
}

TEST_CASE("all_t_inner") {
  LoopTable const s3 = symmetric_group(3);
  InnerImage const group = all_t_inner(s3, ElementSubset::whole(6));
  CHECK(group.all_inner);
  REQUIRE(group.witness);
  CHECK(*group.witness == set(6, {0}));
  CHECK_FALSE(all_t_inner(s3, set(6, {0, 3, 4})).all_inner);

  Built const s3f = build(fixture_s3f());
  InnerImage const inner = all_t_inner(s3f.loop, s3f.g);
  CHECK(inner.all_inner);
  REQUIRE(inner.witness);
  CHECK(*inner.witness == set(12, {0, 6}));

  Built const v4 = build(fixture_v4());
  CHECK_FALSE(all_t_inner(v4.loop, v4.g).all_inner);
}

TEST_CASE("t_is_homomorphism tracks left nuclearity") {
  Built const s3f = build(fixture_s3f());
  CHECK_FALSE(t_is_homomorphism(s3f.loop, s3f.g));
  CHECK(t_is_homomorphism(cyclic_group(4), set(4, {0, 2})));
}

TEST_CASE("transversal change on Z4") {
  LoopTable const z4 = cyclic_group(4);
  ElementSubset const g = set(4, {0, 2});
  ShiftResult const r = shift_transversal(z4, g, canonical_pair(z4, g, set(4, {0, 1})), FiniteMap(2, {0, 1}));
  CHECK(r.pair.sigma == set(4, {0, 3}));
  CHECK(r.data.theta(1).is_identity());
  CHECK(g[r.data.f(1, 1)] == 2);
  CHECK(shift_data(r.data, FiniteMap(2, {0, 0})) == r.data);
  CHECK(kind_of([&] { shift_data(r.data, FiniteMap(2, {1, 0})); }) == ErrorKind::BadShift);
}

TEST_CASE("transversal change on E-S3f by a 3-cycle") {
  Built const b = build(fixture_s3f());
  LoopTable const& s3 = b.data.g();
  Element const c = 3;
  ShiftResult const r =
      shift_transversal(b.loop, b.g, canonical_pair(b.loop, b.g, set(12, {0, 6})), FiniteMap(6, {0, c}));
  // n(aa) = e, Theta_a = Id: f'(a,a) = f(a,a) n(a) n(a)
  CHECK(r.data.f(1, 1) == s3.mul(s3.mul(2, c), c));
  for (Element u = 0; u < 6; ++u) CHECK(r.data.theta(1)(u) == s3.mul(s3.mul(group_inverse(s3, c), u), c));
  CHECK(r.pair.sigma == set(12, {0, 6 + c}));
}

TEST_CASE("precomposition with automorphisms of K") {
  SchreierData const d = fixture_s3f();
  CHECK(precompose_automorphism(d, FiniteMap::identity(2)) == d);

  LoopTable const z3 = cyclic_group(3);
  SchreierData const e(z3, cyclic_group(2), std::vector<FiniteMap>(3, FiniteMap::identity(2)),
                       {0, 0, 0, 0, 1, 0, 0, 0, 0});
  SchreierData const m = precompose_automorphism(e, FiniteMap(3, {0, 2, 1}));
  CHECK(m.f(2, 2) == 1);
  CHECK(m.f(1, 1) == 0);
  CHECK(kind_of([&] { precompose_automorphism(e, FiniteMap(3, {0, 1, 1})); }) == ErrorKind::NotAnAutomorphism);
}

TEST_CASE("automorphism-free and factor-free decompositions") {
  Built const dp = build(SchreierData::direct_product(cyclic_group(2), cyclic_group(3)));
  CHECK(has_automorphism_free_decomposition(dp.loop, dp.g).exists);
  DecompositionWitness const ff = has_factor_free_decomposition(dp.loop, dp.g);
  CHECK(ff.exists);
  REQUIRE(ff.pair);
  CHECK(schreier_data_from_pair(dp.loop, dp.g, *ff.pair).factor_free());

  Built const v4 = build(fixture_v4());
  CHECK_FALSE(has_automorphism_free_decomposition(v4.loop, v4.g).exists);
  DecompositionWitness const v4f = has_factor_free_decomposition(v4.loop, v4.g);
  CHECK(v4f.exists);
  REQUIRE(v4f.pair);
  CHECK(v4f.pair->sigma == set(8, {0, 4}));
  CHECK(schreier_data_from_pair(v4.loop, v4.g, *v4f.pair).factor_free());

  CHECK_FALSE(has_automorphism_free_decomposition(symmetric_group(3), set(6, {0, 3, 4})).exists);
  CHECK_FALSE(has_factor_free_decomposition(cyclic_group(4), set(4, {0, 2})).exists);
}
