#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/decomposition.hpp"
#include "loopforge/extensions.hpp"
#include "loopforge/loop_table.hpp"

namespace loopforge {

// Text formats. Lines starting with '#' are comments, blank lines are
// ignored, fields are separated by spaces and files use LF endings. A first
// comment of the form "# label: NAME" carries the label through a round trip.

/// n, then n rows of n products. Throws ParseError or a validation error.
LoopTable parse_table(std::string_view text);
std::string emit_table(LoopTable const& loop);

/// Sections "K:", "G:" (table blocks), "Theta:" (|K| rows of |G| images)
/// and "f:" (|K| rows of |K| values, row tau column sigma).
SchreierData parse_schreier(std::string_view text);
std::string emit_schreier(SchreierData const& data);

/// The raw contents of a pair file: "kappa:" holds |K| coset indices and
/// "sigma:" one element per coset, in coset order.
struct PairFile {
  std::vector<Element> kappa;
  std::vector<Element> sigma;
};

PairFile parse_pair(std::string_view text);
std::string emit_pair(PairFile const& pair);
/// Pair file for an in-memory pair, listing sigma in coset order.
PairFile pair_file(LoopTable const& loop, ElementSubset const& subgroup, DataPair const& pair);
/// Resolves a pair file against L and G, with K = L/G unless given.
/// Throws InvalidPair.
DataPair resolve_pair(LoopTable const& loop, ElementSubset const& subgroup, PairFile const& file,
                      std::optional<LoopTable> const& domain = std::nullopt);

/// The data followed by an "iso:" section with the |K||G| images of F.
std::string emit_decomposition(Decomposition const& d);

/// Space-separated images; the codomain defaults to one past the largest image.
FiniteMap parse_map_line(std::string_view text, std::optional<std::size_t> codomain = std::nullopt);
std::string emit_map_line(FiniteMap const& map);

/// "0,2,3" -> {0, 2, 3}. Throws ParseError.
std::vector<Element> parse_index_list(std::string_view text);

/// Throws ParseError when the file cannot be read.
std::string read_text_file(std::filesystem::path const& path);

}  // namespace loopforge
