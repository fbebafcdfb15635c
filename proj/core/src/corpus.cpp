#include "loopforge/corpus.hpp"

#include <algorithm>

#include "loopforge/enumerate.hpp"
#include "loopforge/gallery.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"

namespace loopforge {

std::vector<LoopTable> loops_up_to(std::size_t max_order) {
  std::vector<LoopTable> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto part = enumerate_loops(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<LoopTable> groups_up_to(std::size_t max_order) {
  auto all = loops_up_to(max_order);
  std::erase_if(all, [](LoopTable const& l) { return !is_associative(l); });
  return all;
}

std::vector<NormalCase> normal_group_cases(std::vector<LoopTable> const& loops) {
  std::vector<NormalCase> out;
  for (auto const& loop : loops)
    for (auto const& g : normal_subgroups(loop)) out.push_back({loop, g});
  return out;
}

std::vector<SchreierData> exhaustive_schreier(LoopTable const& k, LoopTable const& g) {
  std::size_t const nk = k.order();
  std::size_t const ng = g.order();
  std::vector<FiniteMap> const auts = automorphisms(g);
  std::size_t const theta_slots = nk - 1;
  std::size_t const f_slots = (nk - 1) * (nk - 1);

  std::vector<std::size_t> digit(theta_slots + f_slots, 0);
  std::vector<std::size_t> radix(theta_slots, auts.size());
  radix.resize(theta_slots + f_slots, ng);

  std::vector<SchreierData> out;
  while (true) {
    std::vector<FiniteMap> theta{FiniteMap::identity(ng)};
    for (std::size_t i = 0; i < theta_slots; ++i) theta.push_back(auts[digit[i]]);
    std::vector<Element> factor(nk * nk, 0);
    for (std::size_t i = 0; i < f_slots; ++i)
      factor[(1 + i / (nk - 1)) * nk + 1 + i % (nk - 1)] = static_cast<Element>(digit[theta_slots + i]);
    out.emplace_back(k, g, std::move(theta), std::move(factor));
    std::size_t pos = digit.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < radix[pos]) break;
      digit[pos] = 0;
    }
    if (pos == 0 && (digit.empty() || digit[0] == 0)) break;
  }
  return out;
}

SchreierData random_schreier(std::mt19937_64& rng, std::vector<LoopTable> const& ks,
                             std::vector<LoopTable> const& gs) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  LoopTable const& k = ks[pick(ks.size())];
  LoopTable const& g = gs[pick(gs.size())];
  std::vector<FiniteMap> const auts = automorphisms(g);
  std::vector<FiniteMap> theta{FiniteMap::identity(g.order())};
  for (std::size_t s = 1; s < k.order(); ++s) theta.push_back(auts[pick(auts.size())]);
  std::size_t const nk = k.order();
  std::vector<Element> factor(nk * nk, 0);
  for (std::size_t t = 1; t < nk; ++t)
    for (std::size_t s = 1; s < nk; ++s) factor[t * nk + s] = static_cast<Element>(pick(g.order()));
  return SchreierData(k, g, std::move(theta), std::move(factor));
}

std::vector<FixtureCase> gallery_fixture_cases() {
  std::vector<FixtureCase> out;
  auto add = [&](std::string name, SchreierData const& d) {
    out.push_back({std::move(name), schreier_loop(d), embedded_subgroup(d.carrier())});
  };
  for (auto const& name : fixture_names()) add(name, fixture_by_name(name));

  LoopTable const s3 = symmetric_group(3);
  LoopTable const z3 = cyclic_group(3);
  LoopTable const z2 = cyclic_group(2);
  // A3 = {0, 3, 4} inside S3; on Z3 the 3-cycle [1,2,0] maps to 1.
  add("commutator S3 S3", example_commutator(s3, s3, FiniteMap(6, {0, 3, 4})).data);
  add("commutator S3 Z3", example_commutator(s3, z3, FiniteMap(3, {0, 1, 2})).data);
  add("conjugation S3 S3", example_conjugation(s3, s3, FiniteMap::identity(6)).data);
  add("conjugation Z2 S3", example_conjugation(z2, s3, FiniteMap(6, {0, 2})).data);

  LoopTable const bol = fixture_bol8();
  PermutationGroup const h = right_inner_group(bol);
  add("bol E-Bol8 H", example_bol(bol, h.table, FiniteMap::identity(h.table.order())).data);
  // H has order 2; sending its generator to a transposition is not central.
  add("bol E-Bol8 S3", example_bol(bol, s3, FiniteMap(6, {0, 2})).data);
  return out;
}

}  // namespace loopforge
