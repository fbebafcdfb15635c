#include <doctest.h>

#include <map>
#include <set>

#include "loopforge/corpus.hpp"
#include "loopforge/enumerate.hpp"
#include "loopforge/extensions.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"
#include "support.hpp"

using namespace loopforge;

namespace {

std::vector<LoopTable> const& small() {
  static auto const loops = loops_up_to(6);
  return loops;
}

LoopTable relabeled(LoopTable const& l, std::vector<Element> const& p) {
  return validate_loop(l.order(), oracle::relabel_cells(l, p));
}

// Reduced Latin squares filled cell by cell, without any pruning beyond the
// Latin property.
void latin_squares(std::size_t n, std::vector<Element>& cells, std::size_t pos,
                   std::vector<std::vector<Element>>& out) {
  if (pos == n * n) {
    out.push_back(cells);
    return;
  }
  std::size_t const r = pos / n, c = pos % n;
  if (r == 0 || c == 0) {
    cells[pos] = static_cast<Element>(r == 0 ? c : r);
    latin_squares(n, cells, pos + 1, out);
    return;
  }
  for (Element v = 0; v < n; ++v) {
    bool ok = true;
    for (std::size_t k = 0; k < c && ok; ++k) ok = cells[r * n + k] != v;
    for (std::size_t k = 0; k < r && ok; ++k) ok = cells[k * n + c] != v;
    if (!ok) continue;
    cells[pos] = v;
    latin_squares(n, cells, pos + 1, out);
  }
}

std::vector<Element> brute_canonical(std::vector<Element> const& cells, std::size_t n) {
  LoopTable const l = validate_loop(n, cells);
  std::vector<Element> best = cells;
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), 0);
  while (std::next_permutation(p.begin() + 1, p.end())) best = std::min(best, oracle::relabel_cells(l, p));
  return best;
}

}  // namespace

TEST_CASE("divisions agree with a column scan") {
  std::mt19937_64 rng(11);
  for (auto const& base : small()) {
    LoopTable const l = relabeled(base, oracle::random_fixing_permutation(rng, base.order(), 1));
    for (Element x = 0; x < l.order(); ++x)
      for (Element y = 0; y < l.order(); ++y) {
        CHECK(l.ldiv(x, y) == oracle::left_div(l, x, y));
        CHECK(l.rdiv(x, y) == oracle::right_div(l, x, y));
      }
  }
}

TEST_CASE("nuclei agree with direct scans") {
  for (auto const& l : small()) {
    CHECK(nucleus(l, NucleusPart::left).members() == oracle::nucleus(l, oracle::Part::left));
    CHECK(nucleus(l, NucleusPart::middle).members() == oracle::nucleus(l, oracle::Part::middle));
    CHECK(nucleus(l, NucleusPart::right).members() == oracle::nucleus(l, oracle::Part::right));
  }
}

TEST_CASE("subloops and normality agree with subset enumeration") {
  for (auto const& l : small()) {
    std::size_t const n = l.order();
    auto const listed = subloops(l);
    std::set<std::vector<Element>> library;
    for (auto const& s : listed) library.insert(s.members());
    std::set<std::vector<Element>> brute;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<bool> in(n, false);
      std::vector<Element> members{0};
      in[0] = true;
      for (Element x = 1; x < n; ++x)
        if (mask & (1u << (x - 1))) in[x] = true, members.push_back(x);
      if (oracle::closed(l, in)) brute.insert(members);
    }
    CHECK(library == brute);
    for (auto const& s : listed) CHECK(is_normal(l, s) == oracle::normal(l, s));
  }
}

TEST_CASE("automorphisms match the permutation scan") {
  for (auto const& l : small()) {
    auto const brute = oracle::isomorphisms(l, l);
    auto const found = automorphisms(l);
    REQUIRE(found.size() == brute.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].images() == brute[i]);
  }
}

TEST_CASE("find_isomorphism returns the least isomorphism or proves none") {
  std::mt19937_64 rng(5);
  for (std::size_t order = 1; order <= 6; ++order) {
    std::vector<LoopTable> level;
    for (auto const& l : small())
      if (l.order() == order) level.push_back(l);
    for (std::size_t a = 0; a < level.size(); a += 7)
      for (std::size_t b = 0; b < level.size(); b += 5) {
        LoopTable const other = relabeled(level[b], oracle::random_fixing_permutation(rng, order, 1));
        auto const brute = oracle::isomorphisms(level[a], other);
        auto const found = find_isomorphism(level[a], other);
        REQUIRE(found.has_value() == !brute.empty());
        if (found) CHECK(found->images() == brute.front());
      }
  }
}

TEST_CASE("find_isomorphism honours a partial assignment") {
  LoopTable const z4 = cyclic_group(4);
  PartialMap fixed(4);
  fixed[1] = 3;
  auto const m = find_isomorphism(z4, z4, fixed);
  REQUIRE(m);
  CHECK(m->images() == std::vector<Element>{0, 3, 2, 1});
  fixed[2] = 1;
  CHECK_FALSE(find_isomorphism(z4, z4, fixed));
}

TEST_CASE("homomorphisms match the exhaustive map scan") {
  std::vector<LoopTable> const groups{cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(),
                                      symmetric_group(3)};
  for (auto const& a : groups)
    for (auto const& b : groups) {
      auto const brute = oracle::homomorphisms(a, b);
      auto const found = homomorphisms(a, b);
      REQUIRE(found.size() == brute.size());
      for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].images() == brute[i]);
    }
}

TEST_CASE("enumeration matches brute-force Latin squares up to order 6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::vector<Element>> squares;
    std::vector<Element> cells(n * n);
    latin_squares(n, cells, 0, squares);
    std::set<std::vector<Element>> classes;
    for (auto const& s : squares) classes.insert(brute_canonical(s, n));
    auto const found = enumerate_loops(n);
    REQUIRE(found.size() == classes.size());
    std::size_t i = 0;
    for (auto const& c : classes) {
      CHECK(std::vector<Element>(found[i].cells().begin(), found[i].cells().end()) == c);
      ++i;
    }
  }
}

TEST_CASE("order-8 right Bol enumeration") {
  auto const all = enumerate_loops(8, parse_filter("rightBol"));
  CHECK(all.size() == 11);
  std::size_t groups = 0;
  for (auto const& l : all) {
    CHECK(oracle::right_bol(l));
    groups += oracle::associative(l);
  }
  CHECK(groups == 5);
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) CHECK(oracle::isomorphisms(all[a], all[b]).empty());
}

TEST_CASE("schreier_loop follows the product rule") {
  std::mt19937_64 rng(3);
  auto const ks = loops_up_to(4);
  auto const gs = groups_up_to(6);
  for (int trial = 0; trial < 40; ++trial) {
    SchreierData const d = random_schreier(rng, ks, gs);
    LoopTable const l = schreier_loop(d);
    std::size_t const ng = d.g().order();
    for (Element a = 0; a < l.order(); ++a)
      for (Element b = 0; b < l.order(); ++b) {
        Element const tau = a / ng, t = a % ng, sigma = b / ng, s = b % ng;
        Element const g = d.g().mul(d.g().mul(d.f(tau, sigma), d.theta(sigma)(t)), s);
        CHECK(l.mul(a, b) == d.k().mul(tau, sigma) * ng + g);
      }
  }
}
