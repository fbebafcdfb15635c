#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loopforge/extensions.hpp"

namespace loopforge {

/// First n (lexicographic, n(e) = e) with shift_data(first, n) == second.
/// Throws CarrierMismatch when K or G differ.
std::optional<FiniteMap> equivalent(SchreierData const& first, SchreierData const& second);

struct WideWitness {
  FiniteMap mu;
  FiniteMap n;
};

/// Theta'_s = iota_{n(mu s)}^-1 o Theta_{mu s},
/// f'(s,t) = n(mu(st))^-1 f(mu s, mu t) Theta_{mu t}(n(mu s)) n(mu t).
SchreierData wide_transform(SchreierData const& data, FiniteMap const& mu, FiniteMap const& n);

/// First (mu, n) over automorphisms(K) x lexicographic n with
/// wide_transform(first, mu, n) == second.
std::optional<WideWitness> wide_equivalent(SchreierData const& first, SchreierData const& second);

/// A Schreier loop prepared for repeated oracle queries: the table is built
/// once together with invariants of isomorphisms fixing the embedded G.
struct PreparedSchreier {
  explicit PreparedSchreier(SchreierData const& data);

  std::size_t k_order;
  std::size_t g_order;
  LoopTable loop;
  /// Sorted per-element profiles; equal whenever a G-fixing isomorphism exists.
  std::uint64_t wide_invariant;
  /// Same with each profile tagged by its K-coset, for the narrow relation.
  std::uint64_t narrow_invariant;
};

/// Searches for an isomorphism between the two Schreier loops that fixes
/// {(e, t)} pointwise; the narrow relation (wide = false) additionally
/// requires every (s, t) to land in the coset of s.
bool equivalence_oracle(SchreierData const& first, SchreierData const& second, bool wide);
bool equivalence_oracle(PreparedSchreier const& first, PreparedSchreier const& second, bool wide);

/// The isomorphism found by the oracle search, if any.
std::optional<FiniteMap> equivalence_oracle_map(PreparedSchreier const& first,
                                                PreparedSchreier const& second, bool wide);

}  // namespace loopforge
