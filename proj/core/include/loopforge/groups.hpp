#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loopforge/loop_table.hpp"

namespace loopforge {

/// Z_n under addition.
LoopTable cyclic_group(std::size_t n);
/// Pairs (a, b) indexed a * |B| + b.
LoopTable direct_product(LoopTable const& a, LoopTable const& b);
/// Z2 x Z2 as direct_product(Z2, Z2): 1 = (0,1), 2 = (1,0), 3 = (1,1).
LoopTable klein_four();
/// Symmetries of the m-gon, order 2m: index i is r^i, index m + i is r^i s.
LoopTable dihedral_group(std::size_t m);
/// Permutations of {0..d-1} in lexicographic order, (p q)(i) = p(q(i)).
LoopTable symmetric_group(std::size_t degree);
/// 0 = 1, 1 = -1, 2 = i, 3 = -i, 4 = j, 5 = -j, 6 = k, 7 = -k.
LoopTable quaternion_group();

/// Built-in registry: Z<n>, V4, D<m> (order 2m), S<d>, Q8, and products
/// written AxB (e.g. Z2xZ4). Throws ParseError for unknown names.
LoopTable group_by_name(std::string_view name);
std::vector<std::string> registry_names();
/// Name of an isomorphic registry group, or "" when there is none.
std::string identify_group(LoopTable const& loop);

using Permutation = std::vector<Element>;

struct PermutationGroup {
  /// elements[i] is the permutation labeled i in `table`; sorted, identity first.
  std::vector<Permutation> elements;
  LoopTable table;

  /// Label of a member permutation; throws NotASubloop if absent.
  Element index_of(Permutation const& p) const;
};

/// Closure of the generators under composition (p q)(i) = p(q(i)).
PermutationGroup generated_permutation_group(std::size_t degree, std::vector<Permutation> const& generators);

/// The group generated by every right inner mapping of the loop.
PermutationGroup right_inner_group(LoopTable const& loop);

}  // namespace loopforge
