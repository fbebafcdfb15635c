#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "loopforge/extensions.hpp"
#include "loopforge/loop_table.hpp"

namespace loopforge {

/// Every loop of order 1..max_order up to isomorphism, smallest order first.
std::vector<LoopTable> loops_up_to(std::size_t max_order);
/// The associative members of loops_up_to(max_order).
std::vector<LoopTable> groups_up_to(std::size_t max_order);

struct NormalCase {
  LoopTable loop;
  ElementSubset subgroup;
};

/// (L, G) for every L in `loops` and every normal subgroup G of L.
std::vector<NormalCase> normal_group_cases(std::vector<LoopTable> const& loops);

/// Every SchreierData over K x G: all choices of Theta_sigma in Aut(G) for
/// sigma != e and all normalized f, in odometer order (last slot fastest).
std::vector<SchreierData> exhaustive_schreier(LoopTable const& k, LoopTable const& g);

/// K and G drawn uniformly from the lists, then Theta and f uniformly.
SchreierData random_schreier(std::mt19937_64& rng, std::vector<LoopTable> const& ks,
                             std::vector<LoopTable> const& gs);

struct FixtureCase {
  std::string name;
  LoopTable loop;
  ElementSubset subgroup;
};

/// The data fixtures and the gallery examples as (Schreier loop, embedded G).
std::vector<FixtureCase> gallery_fixture_cases();

}  // namespace loopforge
