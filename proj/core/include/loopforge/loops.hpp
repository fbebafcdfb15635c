#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/loop_table.hpp"

namespace loopforge {

// Translations and inner mappings.

FiniteMap left_translation(LoopTable const& loop, Element x);
FiniteMap right_translation(LoopTable const& loop, Element x);
/// y -> (x*y)/x
FiniteMap middle_inner(LoopTable const& loop, Element x);
/// z -> ((z*y)*x)/(y*x)
FiniteMap right_inner(LoopTable const& loop, Element x, Element y);

// Nuclei and commutants.

enum class NucleusPart { left, right, middle, full };

bool is_left_nuclear(LoopTable const& loop, Element u);
bool is_right_nuclear(LoopTable const& loop, Element u);
bool is_middle_nuclear(LoopTable const& loop, Element u);

ElementSubset nucleus(LoopTable const& loop, NucleusPart part);
/// {u : u*s = s*u for all s in subset}
ElementSubset commutant(LoopTable const& loop, ElementSubset const& subset);
ElementSubset center(LoopTable const& loop);

// Subloops.

bool is_closed(LoopTable const& loop, ElementSubset const& subset);
/// Closed, nonempty and associative on its members.
bool is_subgroup(LoopTable const& loop, ElementSubset const& subset);
bool is_associative(LoopTable const& loop);
bool is_commutative(LoopTable const& loop);

ElementSubset subloop_closure(LoopTable const& loop, ElementSubset const& generators);
/// Throws NotAGroup on nonassociative input.
ElementSubset commutator_subgroup(LoopTable const& group);

/// The subloop as a table of its own: local index i stands for subset[i].
/// Throws NotASubloop.
LoopTable restrict_to(LoopTable const& loop, ElementSubset const& subloop);

/// Every subloop, sorted by size and then members. Intended for small orders.
std::vector<ElementSubset> subloops(LoopTable const& loop);
/// Subgroups that are normal subloops, in the order of subloops().
std::vector<ElementSubset> normal_subgroups(LoopTable const& loop);

// Cosets and factor loops.

/// Left cosets x*N ordered by least element, so coset 0 is N itself.
/// Throws NotASubloop, or NotNormal when the left cosets do not partition.
std::vector<ElementSubset> left_cosets(LoopTable const& loop, ElementSubset const& subloop);

/// True iff the left cosets partition the loop and multiply consistently.
/// Throws NotASubloop.
bool is_normal(LoopTable const& loop, ElementSubset const& subloop);

struct FactorLoop {
  LoopTable quotient;
  FiniteMap projection;
  std::vector<ElementSubset> cosets;
};

/// Throws NotNormal.
FactorLoop factor_loop(LoopTable const& loop, ElementSubset const& normal);

/// Visits every left transversal through 0, in lexicographic order of the
/// vector of choices (one per coset, in coset order). The visitor returns
/// false to stop early.
void for_each_left_transversal(LoopTable const& loop, ElementSubset const& subloop,
                               std::function<bool(ElementSubset const&)> const& visit);
std::vector<ElementSubset> left_transversals(LoopTable const& loop, ElementSubset const& subloop);

// Identities.

enum class Property {
  associative,
  commutative,
  left_inverse,
  right_inverse,
  left_alternative,
  right_alternative,
  flexible,
  left_bol,
  right_bol,
};

inline constexpr Property kAllProperties[] = {
    Property::associative,      Property::commutative,       Property::left_inverse,
    Property::right_inverse,    Property::left_alternative,  Property::right_alternative,
    Property::flexible,         Property::left_bol,          Property::right_bol,
};

std::string_view property_name(Property p) noexcept;
/// Accepts the names produced by property_name(); throws ParseError otherwise.
Property parse_property(std::string_view name);

struct LoopProperties {
  bool associative = false;
  bool commutative = false;
  bool left_inverse = false;
  bool right_inverse = false;
  /// x\e == e/x for every x, i.e. the two one-sided inverse maps agree.
  bool inverses_coincide = false;
  bool left_alternative = false;
  bool right_alternative = false;
  bool flexible = false;
  bool left_bol = false;
  bool right_bol = false;

  bool get(Property p) const noexcept;
};

LoopProperties loop_properties(LoopTable const& loop);
bool has_property(LoopTable const& loop, Property p);

/// Inverse in a group (or the two-sided inverse when it exists).
inline Element group_inverse(LoopTable const& g, Element x) { return g.ldiv(x, 0); }

}  // namespace loopforge
