#include <doctest.h>

#include "loopforge/error.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"

using namespace loopforge;

namespace {

LoopTable order5() {
  return validate_loop({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}});
}

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

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_loop({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).order() == 3);
  CHECK(kind_of([] { validate_loop({{0, 1}, {1, 1}}); }) == ErrorKind::NotLatin);
  CHECK(kind_of([] { validate_loop({{1, 0}, {0, 1}}); }) == ErrorKind::NoIdentity);
  CHECK(kind_of([] { validate_loop({{0, 1}, {1}}); }) == ErrorKind::MalformedTable);
  CHECK(kind_of([] { validate_loop({{0, 1}, {1, 2}}); }) == ErrorKind::MalformedTable);
  try {
    validate_loop({{1, 0}, {0, 1}});
  } catch (LoopError const& e) {
    CHECK(std::string(e.what()).find("element 1") != std::string::npos);
  }
}

TEST_CASE("the order-5 loop") {
  LoopTable const l = order5();
  CHECK_FALSE(is_associative(l));
  CHECK(divide(l, Side::right, 2, 3) == 3);
  CHECK(divide(l, Side::left, 1, 4) == 3);
  CHECK(nucleus(l, NucleusPart::left) == ElementSubset::trivial(5));
  CHECK(nucleus(l, NucleusPart::middle) == ElementSubset::trivial(5));
  CHECK(nucleus(l, NucleusPart::right) == ElementSubset::trivial(5));
  CHECK_FALSE(loop_properties(l).associative);
}

TEST_CASE("translations and inner mappings") {
  LoopTable const s3 = symmetric_group(3);
  CHECK(left_translation(s3, 2).images() == std::vector<Element>(s3.row(2).begin(), s3.row(2).end()));
  CHECK(right_translation(s3, 0).is_identity());
  // conjugation by a transposition swaps the two 3-cycles
  FiniteMap const t = middle_inner(s3, 2);
  CHECK(t(3) == 4);
  CHECK(t(4) == 3);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) CHECK(right_inner(s3, x, y).is_identity());
}

TEST_CASE("commutant, center, closure, commutator subgroup") {
  LoopTable const s3 = symmetric_group(3);
  LoopTable const z4 = cyclic_group(4);
  ElementSubset const a3 = set(6, {0, 3, 4});
  CHECK(commutant(z4, set(4, {1, 2})) == ElementSubset::whole(4));
  CHECK(commutant(s3, a3) == a3);
  CHECK(center(klein_four()) == ElementSubset::whole(4));
  CHECK(center(s3) == ElementSubset::trivial(6));
  CHECK(center(z4) == ElementSubset::whole(4));
  CHECK(subloop_closure(z4, ElementSubset(4, {})) == ElementSubset::trivial(4));
  CHECK(subloop_closure(z4, set(4, {2})) == set(4, {0, 2}));
  CHECK(subloop_closure(s3, set(6, {3})) == a3);
  CHECK(commutator_subgroup(z4) == ElementSubset::trivial(4));
  CHECK(commutator_subgroup(s3) == a3);
  CHECK(commutator_subgroup(quaternion_group()) == set(8, {0, 1}));
  CHECK(kind_of([] {
          commutator_subgroup(validate_loop(
              {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}}));
        }) == ErrorKind::NotAGroup);
}

TEST_CASE("normality, cosets and factor loops") {
  LoopTable const s3 = symmetric_group(3);
  LoopTable const z4 = cyclic_group(4);
  CHECK(is_normal(s3, set(6, {0, 3, 4})));
  CHECK_FALSE(is_normal(s3, set(6, {0, 2})));
  CHECK(is_normal(s3, ElementSubset::trivial(6)));
  CHECK(is_normal(s3, ElementSubset::whole(6)));
  CHECK(kind_of([&] { is_normal(s3, set(6, {0, 3})); }) == ErrorKind::NotASubloop);
  CHECK(kind_of([&] { factor_loop(s3, set(6, {0, 2})); }) == ErrorKind::NotNormal);

  auto const cosets = left_cosets(z4, set(4, {0, 2}));
  REQUIRE(cosets.size() == 2);
  CHECK(cosets[0] == set(4, {0, 2}));
  CHECK(cosets[1] == set(4, {1, 3}));
  FactorLoop const f = factor_loop(s3, set(6, {0, 3, 4}));
  CHECK(f.quotient == cyclic_group(2));
  CHECK(f.projection.images() == std::vector<Element>{0, 1, 1, 0, 0, 1});
}

TEST_CASE("left transversals") {
  LoopTable const z4 = cyclic_group(4);
  auto const t = left_transversals(z4, set(4, {0, 2}));
  REQUIRE(t.size() == 2);
  CHECK(t[0] == set(4, {0, 1}));
  CHECK(t[1] == set(4, {0, 3}));
  CHECK(left_transversals(z4, ElementSubset::whole(4)) == std::vector{ElementSubset::trivial(4)});
  CHECK(left_transversals(z4, ElementSubset::trivial(4)) == std::vector{ElementSubset::whole(4)});
}

TEST_CASE("property flags") {
  for (auto const& name : registry_names()) {
    LoopProperties const p = loop_properties(group_by_name(name));
    for (Property prop : kAllProperties)
      if (prop != Property::commutative) CHECK(p.get(prop));
    CHECK(p.inverses_coincide);
  }
  CHECK_FALSE(loop_properties(symmetric_group(3)).commutative);
  CHECK(parse_property("rightBol") == Property::right_bol);
  CHECK(kind_of([] { parse_property("moufang"); }) == ErrorKind::ParseError);
  for (Property p : kAllProperties) CHECK(parse_property(property_name(p)) == p);
}

TEST_CASE("morphisms of small groups") {
  CHECK(find_isomorphism(cyclic_group(4), cyclic_group(4))->is_identity());
  CHECK_FALSE(find_isomorphism(cyclic_group(4), klein_four()));
  CHECK(automorphisms(cyclic_group(4)).size() == 2);
  CHECK(automorphisms(klein_four()).size() == 6);
  CHECK(inner_automorphisms(klein_four()).size() == 1);
  CHECK(automorphisms(symmetric_group(3)).size() == 6);
  CHECK(inner_automorphisms(symmetric_group(3)).size() == 6);
  CHECK(automorphisms(quaternion_group()).size() == 24);
}

TEST_CASE("group registry") {
  CHECK(group_by_name("Z6").order() == 6);
  CHECK(group_by_name("D4").order() == 8);
  CHECK(is_associative(group_by_name("D4")));
  CHECK(find_isomorphism(group_by_name("D3"), symmetric_group(3)));
  CHECK(find_isomorphism(group_by_name("Z2xZ2"), klein_four()));
  CHECK(identify_group(group_by_name("Z2xZ4")).empty());
  CHECK(identify_group(dihedral_group(3)) == "D3");
  CHECK(kind_of([] { group_by_name("A5"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { group_by_name("Z9"); }) == ErrorKind::ParseError);
}
