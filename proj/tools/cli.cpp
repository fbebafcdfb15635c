#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "loopforge/corpus.hpp"
#include "loopforge/decomposition.hpp"
#include "loopforge/enumerate.hpp"
#include "loopforge/equivalence.hpp"
#include "loopforge/error.hpp"
#include "loopforge/extensions.hpp"
#include "loopforge/gallery.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/io.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"
#include "loopforge/verify.hpp"

namespace loopforge::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string members(ElementSubset const& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i]);
  return out;
}

std::string comma_list(ElementSubset const& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

char const* yes_no(bool b) { return b ? "true" : "false"; }

LoopTable load_table(std::string const& path) { return parse_table(read_text_file(path)); }
SchreierData load_data(std::string const& path) { return parse_schreier(read_text_file(path)); }

/// A registry name or a table file.
LoopTable resolve_group(std::string const& spec) {
  if (std::filesystem::exists(spec)) return load_table(spec);
  return group_by_name(spec);
}

ElementSubset subset_arg(LoopTable const& loop, std::string const& text) {
  auto values = parse_index_list(text);
  for (Element v : values)
    if (v >= loop.order()) fail(ErrorKind::ParseError, "element " + std::to_string(v) + " is out of range");
  if (std::find(values.begin(), values.end(), 0u) == values.end()) values.push_back(0);
  return ElementSubset(loop.order(), values);
}

FiniteMap map_arg(std::string const& text, std::size_t size, std::size_t codomain) {
  auto values = parse_index_list(text);
  if (values.size() != size)
    fail(ErrorKind::ParseError, "expected " + std::to_string(size) + " images, got " + std::to_string(values.size()));
  for (Element v : values)
    if (v >= codomain) fail(ErrorKind::ParseError, "image " + std::to_string(v) + " is out of range");
  return FiniteMap(codomain, values);
}

void validate_cmd(std::string const& path, std::string const& format, std::ostream& out) {
  std::string const text = read_text_file(path);
  if (format == "data") {
    SchreierData const d = parse_schreier(text);
    out << "valid Schreier data, |K| = " << d.k().order() << ", |G| = " << d.g().order() << "\n";
  } else if (format == "pair") {
    PairFile const p = parse_pair(text);
    out << "valid pair, " << p.kappa.size() << " cosets\n";
  } else {
    LoopTable const l = parse_table(text);
    out << "valid loop, order " << l.order() << ", " << (is_associative(l) ? "associative" : "nonassociative")
        << "\n";
  }
}

void props_cmd(std::string const& path, std::ostream& out) {
  LoopProperties const p = loop_properties(load_table(path));
  for (Property prop : kAllProperties) out << property_name(prop) << ": " << yes_no(p.get(prop)) << "\n";
  out << "inversesCoincide: " << yes_no(p.inverses_coincide) << "\n";
}

void nuclei_cmd(std::string const& path, std::optional<std::string> const& subset, std::ostream& out) {
  LoopTable const l = load_table(path);
  out << "left: " << members(nucleus(l, NucleusPart::left)) << "\n";
  out << "middle: " << members(nucleus(l, NucleusPart::middle)) << "\n";
  out << "right: " << members(nucleus(l, NucleusPart::right)) << "\n";
  out << "nucleus: " << members(nucleus(l, NucleusPart::full)) << "\n";
  out << "center: " << members(center(l)) << "\n";
  if (subset) out << "commutant: " << members(commutant(l, subset_arg(l, *subset))) << "\n";
}

void normal_cmd(std::string const& path, std::ostream& out) {
  LoopTable const l = load_table(path);
  for (ElementSubset const& g : normal_subgroups(l)) {
    bool const m = std::all_of(g.begin(), g.end(), [&](Element u) { return is_middle_nuclear(l, u); });
    bool const r = std::all_of(g.begin(), g.end(), [&](Element u) { return is_right_nuclear(l, u); });
    bool const left = std::all_of(g.begin(), g.end(), [&](Element u) { return is_left_nuclear(l, u); });
    out << comma_list(g) << " order " << g.size() << (m && r ? " decomposable" : " not-decomposable")
        << (left && m && r ? " nuclear" : "") << "\n";
  }
}

DataPair pair_arg(LoopTable const& l, ElementSubset const& g, std::optional<std::string> const& transversal,
                  std::optional<std::string> const& pair_file_path) {
  if (pair_file_path) return resolve_pair(l, g, parse_pair(read_text_file(*pair_file_path)));
  if (transversal) return canonical_pair(l, g, subset_arg(l, *transversal));
  return canonical_pair(l, g, left_transversals(l, g).front());
}

void decompose_cmd(std::string const& path, std::string const& subgroup, std::optional<std::string> const& transversal,
                   std::optional<std::string> const& pair_path, std::ostream& out) {
  LoopTable const l = load_table(path);
  ElementSubset const g = subset_arg(l, subgroup);
  DataPair const pair = pair_arg(l, g, transversal, pair_path);
  require_middle_right_nuclear(l, g);
  Decomposition const d = decompose(l, g, pair);
  out << "# G = {" << comma_list(g) << "}, G-values below are positions in this list\n";
  out << emit_decomposition(d);
}

void extend_cmd(std::string const& path, bool classify, std::ostream& out) {
  SchreierData const d = load_data(path);
  LoopTable loop = schreier_loop(d);
  if (!classify) {
    loop.set_label(d.label());
    out << emit_table(loop);
    return;
  }
  SchreierClassification const c = classify_schreier(d, loop);
  out << "order: " << loop.order() << "\n";
  out << "automorphismFree: " << yes_no(c.automorphism_free) << "\n";
  out << "factorFree: " << yes_no(c.factor_free) << "\n";
  out << "leftNuclear: " << yes_no(c.left_nuclear) << "\n";
  out << "middleNuclear: " << yes_no(c.middle_nuclear) << "\n";
  out << "rightNuclear: " << yes_no(c.right_nuclear) << "\n";
  out << "nuclear: " << yes_no(c.fully_nuclear) << "\n";
  out << "associative: " << yes_no(c.associative) << "\n";
  out << "thetaCondition: " << yes_no(c.conditions.theta_condition) << "\n";
  out << "cocycleCondition: " << yes_no(c.conditions.cocycle_condition) << "\n";
}

void shift_cmd(std::string const& path, std::optional<std::string> const& n_text,
               std::optional<std::string> const& mu_text, std::ostream& out) {
  SchreierData d = load_data(path);
  std::size_t const nk = d.k().order();
  if (n_text) d = shift_data(d, map_arg(*n_text, nk, d.g().order()));
  if (mu_text) d = precompose_automorphism(d, map_arg(*mu_text, nk, nk));
  out << emit_schreier(d);
}

void equiv_cmd(std::string const& first, std::string const& second, bool wide, std::ostream& out) {
  SchreierData const a = load_data(first);
  SchreierData const b = load_data(second);
  if (wide) {
    auto w = wide_equivalent(a, b);
    if (!w) {
      out << "NONE\n";
      return;
    }
    out << "mu: " << emit_map_line(w->mu) << "\n";
    out << "n: " << emit_map_line(w->n) << "\n";
  } else {
    auto n = equivalent(a, b);
    if (!n) {
      out << "NONE\n";
      return;
    }
    out << "n: " << emit_map_line(*n) << "\n";
  }
}

struct GalleryArgs {
  std::string family;
  std::string k = "S3";
  std::string g = "S3";
  std::optional<std::size_t> hom;
  std::optional<std::string> map;
  bool list = false;
};

void gallery_cmd(GalleryArgs const& a, std::ostream& out) {
  if (a.family == "fixture") {
    out << emit_schreier(fixture_by_name(a.k));
    return;
  }
  LoopTable const k = resolve_group(a.k);
  LoopTable const g = resolve_group(a.g);
  LoopTable domain;
  if (a.family == "bol") {
    if (!has_property(k, Property::right_bol))
      fail(ErrorKind::NotRightBol, "K does not satisfy the right Bol identity");
    domain = right_inner_group(k).table;
  } else if (a.family == "commutator") {
    if (!is_associative(k)) fail(ErrorKind::NotAGroup, "K must be a group");
    domain = restrict_to(k, commutator_subgroup(k));
  } else if (a.family == "conjugation") {
    domain = k;
  } else {
    throw UsageError("gallery family must be bol, commutator, conjugation or fixture");
  }

  if (a.list) {
    auto const homs = homomorphisms(domain, g);
    for (std::size_t i = 0; i < homs.size(); ++i) out << i << ": " << emit_map_line(homs[i]) << "\n";
    return;
  }
  FiniteMap map;
  if (a.map) {
    map = map_arg(*a.map, domain.order(), g.order());
  } else {
    auto const homs = homomorphisms(domain, g);
    std::size_t const index = a.hom.value_or(0);
    if (index >= homs.size())
      fail(ErrorKind::NotAHomomorphism, "there are only " + std::to_string(homs.size()) + " homomorphisms");
    map = homs[index];
  }
  GalleryExample const ex = a.family == "bol"          ? example_bol(k, g, map)
                            : a.family == "commutator" ? example_commutator(k, g, map)
                                                       : example_conjugation(k, g, map);
  for (auto const& w : ex.warnings) out << "# warning: " << w << "\n";
  out << "# map: " << emit_map_line(map) << "\n";
  out << emit_schreier(ex.data);
}

void enumerate_cmd(std::size_t order, std::string const& filter, bool count_only, std::ostream& out) {
  auto const loops = enumerate_loops(order, parse_filter(filter));
  if (count_only) {
    out << loops.size() << "\n";
    return;
  }
  for (std::size_t i = 0; i < loops.size(); ++i) out << (i ? "\n" : "") << emit_table(loops[i]);
}

int verify_cmd(std::uint64_t seed, std::string const& only, std::ostream& out) {
  VerifyOptions options;
  options.seed = seed;
  for (Element id : parse_index_list(only)) options.only.push_back(static_cast<int>(id));
  bool all = true;
  run_verification(options, [&](CriterionResult const& r) {
    out << format_result(r) << "\n" << std::flush;
    all = all && r.passed();
  });
  out << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite loops, Schreier extensions and their decompositions", "loopforge"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string file, file2, format = "table", subgroup, filter;
  std::optional<std::string> transversal, pair_path, n_text, mu_text, commutant_of;
  bool classify = false, wide = false, count_only = false;
  std::size_t order = 0;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::string only;
  GalleryArgs gallery;

  auto* validate = app.add_subcommand("validate", "Check a table, data or pair file");
  validate->add_option("file", file)->required();
  validate->add_option("--format", format, "table, data or pair")->check(CLI::IsMember({"table", "data", "pair"}));

  auto* props = app.add_subcommand("props", "List the identities a loop satisfies");
  props->add_option("file", file)->required();

  auto* nuclei = app.add_subcommand("nuclei", "Print the nuclei and the center");
  nuclei->add_option("file", file)->required();
  nuclei->add_option("--commutant", commutant_of, "Also print the commutant of this subset");

  auto* normal = app.add_subcommand("normal", "List the normal subgroups");
  normal->add_option("file", file)->required();

  auto* decompose_app = app.add_subcommand("decompose", "Extract Schreier data from a loop");
  decompose_app->add_option("file", file)->required();
  decompose_app->add_option("--subgroup", subgroup, "Comma-separated members of G")->required();
  auto* tr = decompose_app->add_option("--transversal", transversal, "Comma-separated left transversal");
  decompose_app->add_option("--pair", pair_path, "Pair file with kappa and sigma")->excludes(tr);

  auto* extend = app.add_subcommand("extend", "Build the Schreier loop of a data file");
  extend->add_option("file", file)->required();
  extend->add_flag("--classify", classify, "Print nuclearity and group-condition flags instead of the table");

  auto* shift = app.add_subcommand("shift", "Apply a transversal change and/or a K-automorphism");
  shift->add_option("file", file)->required();
  shift->add_option("--n", n_text, "Images of n : K -> G, comma-separated");
  shift->add_option("--mu", mu_text, "Images of an automorphism of K, comma-separated");

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two data files");
  equiv->add_option("first", file)->required();
  equiv->add_option("second", file2)->required();
  equiv->add_flag("--wide", wide, "Wide-sense equivalence");

  auto* gallery_app = app.add_subcommand("gallery", "Example families and fixtures");
  gallery_app->add_option("family", gallery.family, "bol, commutator, conjugation or fixture")->required();
  gallery_app->add_option("--k", gallery.k, "Registry name or table file for K (fixture name for 'fixture')");
  gallery_app->add_option("--g", gallery.g, "Registry name or table file for G");
  gallery_app->add_option("--hom", gallery.hom, "Index into the homomorphism list");
  gallery_app->add_option("--map", gallery.map, "Explicit homomorphism images, comma-separated");
  gallery_app->add_flag("--list-homs", gallery.list, "List the candidate homomorphisms");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate loops up to isomorphism");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--filter", filter, "Property flags, e.g. rightBol,!associative");
  enumerate->add_flag("--count", count_only, "Print only the number of loops");

  auto* verify = app.add_subcommand("verify", "Run the theorem suites");
  verify->add_option("--seed", seed);
  verify->add_option("--only", only, "Comma-separated criterion numbers");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*validate) validate_cmd(file, format, out);
    else if (*props) props_cmd(file, out);
    else if (*nuclei) nuclei_cmd(file, commutant_of, out);
    else if (*normal) normal_cmd(file, out);
    else if (*decompose_app) decompose_cmd(file, subgroup, transversal, pair_path, out);
    else if (*extend) extend_cmd(file, classify, out);
    else if (*shift) shift_cmd(file, n_text, mu_text, out);
    else if (*equiv) equiv_cmd(file, file2, wide, out);
    else if (*gallery_app) gallery_cmd(gallery, out);
    else if (*enumerate) enumerate_cmd(order, filter, count_only, out);
    else if (*verify) return verify_cmd(seed, only, out);
  } catch (UsageError const& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (LoopError const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (ContractViolation const& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace loopforge::cli
