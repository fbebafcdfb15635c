#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "loopforge/loop_table.hpp"

namespace loopforge {

/// Partial assignment from one carrier to another; nullopt marks a free slot.
using PartialMap = std::vector<std::optional<Element>>;

/// Candidate filter for the morphism search: allowed(x, y) says whether x
/// may be sent to y.
using ImageFilter = std::function<bool(Element, Element)>;

/// Backtracking over generators. The first unassigned element (in index
/// order) is branched on with ascending candidate images and the assignment
/// is closed under products before the next branch, so solutions are
/// produced in lexicographic order of their image vectors.
///
/// visit() returns false to stop the search.
void for_each_isomorphism(LoopTable const& from, LoopTable const& to, PartialMap const& fixed,
                          ImageFilter const& allowed,
                          std::function<bool(FiniteMap const&)> const& visit);

/// Lexicographically least isomorphism extending `fixed`, if any.
std::optional<FiniteMap> find_isomorphism(LoopTable const& from, LoopTable const& to,
                                          PartialMap const& fixed = {});
std::optional<FiniteMap> find_isomorphism_if(LoopTable const& from, LoopTable const& to,
                                             PartialMap const& fixed, ImageFilter const& allowed);

/// All automorphisms in lexicographic order; the identity is always first.
std::vector<FiniteMap> automorphisms(LoopTable const& loop);

/// All loop homomorphisms from -> to, lexicographic.
std::vector<FiniteMap> homomorphisms(LoopTable const& from, LoopTable const& to);

/// t -> s t s^-1. Throws NotAGroup on nonassociative input.
FiniteMap inner_automorphism(LoopTable const& group, Element s);
/// Distinct inner automorphisms, sorted.
std::vector<FiniteMap> inner_automorphisms(LoopTable const& group);

}  // namespace loopforge
