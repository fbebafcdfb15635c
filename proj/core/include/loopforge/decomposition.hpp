#pragma once

#include <optional>
#include <vector>

#include "loopforge/extensions.hpp"
#include "loopforge/loop_table.hpp"
#include "loopforge/loops.hpp"

namespace loopforge {

/// (kappa, Sigma) for a normal subgroup G of L: an isomorphism from a loop K
/// onto L/G (cosets indexed as in left_cosets()) together with a left
/// transversal through 0.
struct DataPair {
  LoopTable domain;
  FiniteMap kappa;
  ElementSubset sigma;
};

/// K = L/G itself with kappa = Id.
DataPair canonical_pair(LoopTable const& loop, ElementSubset const& subgroup,
                        ElementSubset const& transversal);

/// The section sigma -> l_sigma, the member of Sigma lying in kappa(sigma).
/// Throws InvalidPair.
std::vector<Element> transversal_section(LoopTable const& loop, ElementSubset const& subgroup,
                                         DataPair const& pair);

/// Throws NotAGroup, NotNormal or NotMiddleRightNuclear.
void require_middle_right_nuclear(LoopTable const& loop, ElementSubset const& subgroup);

/// T_x restricted to G for every x in L, as maps on G's local indices.
std::vector<FiniteMap> t_restriction(LoopTable const& loop, ElementSubset const& subgroup);

/// T_{xr} = T_x o iota_r and T_{rx} = iota_r o T_x on G for all x in L, r in G.
bool t_factorization_check(LoopTable const& loop, ElementSubset const& subgroup);

/// For each coset of L/G, the lexicographically least member of T_x Inn(G).
std::vector<FiniteMap> outer_map(LoopTable const& loop, ElementSubset const& subgroup);

struct InnerImage {
  bool all_inner = false;
  /// A left transversal inside the commutant of G, present when all_inner.
  std::optional<ElementSubset> witness;
};

InnerImage all_t_inner(LoopTable const& loop, ElementSubset const& subgroup);

/// Whether x -> T_x|G is multiplicative: T_{xy} = T_x o T_y on G.
bool t_is_homomorphism(LoopTable const& loop, ElementSubset const& subgroup);

/// Theta_sigma = T_{l_sigma}^-1 on G, f(sigma, tau) = l_{sigma tau} \ (l_sigma l_tau).
/// G's table is restrict_to(loop, subgroup), so G-values are local indices.
SchreierData schreier_data_from_pair(LoopTable const& loop, ElementSubset const& subgroup,
                                     DataPair const& pair);

struct Decomposition {
  SchreierData data;
  /// (sigma, s) -> l_sigma * s, from the product carrier onto L.
  FiniteMap iso;
  DataPair pair;
};

Decomposition decompose(LoopTable const& loop, ElementSubset const& subgroup, DataPair const& pair);

/// Runs the extraction without assuming nuclearity and reports whether it
/// produced a valid SchreierData together with an isomorphism onto L.
std::optional<Decomposition> attempt_decomposition(LoopTable const& loop, ElementSubset const& subgroup,
                                                   DataPair const& pair);

/// True iff G is middle and right nuclear. Throws NotAGroup or NotNormal.
bool has_schreier_decomposition(LoopTable const& loop, ElementSubset const& subgroup);

/// Transversal change on the data alone: n : K -> G with n(e) = e.
/// Theta'_s = iota_{n(s)}^-1 o Theta_s,
/// f'(s,t) = n(st)^-1 f(s,t) Theta_t(n(s)) n(t). Throws BadShift.
SchreierData shift_data(SchreierData const& data, FiniteMap const& n);

struct ShiftResult {
  DataPair pair;
  SchreierData data;
};

/// Replaces l_sigma by l_sigma n(sigma), checking the formula path against
/// re-extraction from the new transversal.
ShiftResult shift_transversal(LoopTable const& loop, ElementSubset const& subgroup, DataPair const& pair,
                              FiniteMap const& n);

/// Theta~_t = Theta_{mu(t)}, f~(s,t) = f(mu(s), mu(t)). Throws NotAnAutomorphism.
SchreierData precompose_automorphism(SchreierData const& data, FiniteMap const& mu);

struct DecompositionWitness {
  bool exists = false;
  std::optional<DataPair> pair;
};

DecompositionWitness has_automorphism_free_decomposition(LoopTable const& loop,
                                                         ElementSubset const& subgroup);
DecompositionWitness has_factor_free_decomposition(LoopTable const& loop, ElementSubset const& subgroup);

}  // namespace loopforge
