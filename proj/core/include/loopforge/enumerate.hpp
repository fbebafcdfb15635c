#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/loop_table.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/parallel.hpp"

namespace loopforge {

struct PropertyFilter {
  std::vector<Property> required;
  std::vector<Property> forbidden;

  bool accepts(LoopProperties const& props) const noexcept;
  bool empty() const noexcept { return required.empty() && forbidden.empty(); }
};

/// Comma-separated property names, each optionally negated with '!',
/// e.g. "rightBol,!associative". Throws ParseError.
PropertyFilter parse_filter(std::string_view text);
std::string format_filter(PropertyFilter const& filter);

struct EnumerationOptions {
  std::size_t workers = worker_count();
};

/// The lexicographically least relabeling of the table that keeps 0 fixed.
LoopTable canonical_form(LoopTable const& loop);

/// All loops of order n up to isomorphism that pass the filter, as canonical
/// forms in lexicographic order of their tables. Orders 1..6 are exhaustive;
/// orders 7 and 8 need a required associative, leftBol or rightBol flag to
/// prune the search. Anything else throws OrderTooLarge.
std::vector<LoopTable> enumerate_loops(std::size_t n, PropertyFilter const& filter = {},
                                       EnumerationOptions const& options = {});

}  // namespace loopforge
