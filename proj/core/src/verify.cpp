#include "loopforge/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

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

namespace loopforge {

namespace {

constexpr std::size_t kMaxNotes = 5;

class Tally {
 public:
  Tally(int id, std::string title) {
    result_.id = id;
    result_.title = std::move(title);
  }

  void check(bool ok, std::function<std::string()> const& describe) {
    ++result_.cases;
    if (!ok) miss(describe());
  }
  void miss(std::string note) {
    ++result_.mismatches;
    if (result_.mismatches <= kMaxNotes) result_.notes.push_back(std::move(note));
  }
  void count(std::size_t cases) { result_.cases += cases; }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  void merge(Tally const& other) {
    result_.cases += other.result_.cases;
    for (auto const& n : other.result_.notes)
      if (result_.mismatches < kMaxNotes) result_.notes.push_back(n);
    result_.mismatches += other.result_.mismatches;
  }

  CriterionResult take() { return std::move(result_); }

 private:
  CriterionResult result_;
};

// Nucleus scans written out directly, independent of loops.cpp.
bool scan_left(LoopTable const& l, ElementSubset const& g) {
  for (Element u : g)
    for (Element x = 0; x < l.order(); ++x)
      for (Element y = 0; y < l.order(); ++y)
        if (l.mul(l.mul(u, x), y) != l.mul(u, l.mul(x, y))) return false;
  return true;
}

bool scan_middle(LoopTable const& l, ElementSubset const& g) {
  for (Element u : g)
    for (Element x = 0; x < l.order(); ++x)
      for (Element y = 0; y < l.order(); ++y)
        if (l.mul(l.mul(x, u), y) != l.mul(x, l.mul(u, y))) return false;
  return true;
}

bool scan_right(LoopTable const& l, ElementSubset const& g) {
  for (Element u : g)
    for (Element x = 0; x < l.order(); ++x)
      for (Element y = 0; y < l.order(); ++y)
        if (l.mul(l.mul(x, y), u) != l.mul(x, l.mul(y, u))) return false;
  return true;
}

bool commutes_with_all(LoopTable const& l, ElementSubset const& g, Element x) {
  return std::all_of(g.begin(), g.end(), [&](Element u) { return l.mul(x, u) == l.mul(u, x); });
}

std::string describe(LoopTable const& l, ElementSubset const& g) {
  std::ostringstream out;
  out << "L = [";
  for (Element x = 0; x < l.order(); ++x) {
    out << (x ? " | " : "");
    for (Element y = 0; y < l.order(); ++y) out << (y ? " " : "") << l.mul(x, y);
  }
  out << "], G = {";
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
  out << "}";
  return out.str();
}

std::string describe(SchreierData const& d) {
  std::string text = emit_schreier(d);
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

// Every n : K -> G with n(e) = e, in odometer order.
void for_each_shift(std::size_t nk, std::size_t ng, std::function<void(FiniteMap const&)> const& visit) {
  std::vector<Element> n(nk, 0);
  while (true) {
    visit(FiniteMap(ng, n));
    std::size_t pos = nk;
    while (pos > 1) {
      --pos;
      if (++n[pos] < ng) break;
      n[pos] = 0;
    }
    if (pos <= 1 && (nk <= 1 || n[1] == 0)) return;
  }
}

template <class Task>
void run_cases(std::size_t count, std::size_t workers, Tally& tally, Task const& task) {
  std::vector<Tally> parts(count, Tally(0, {}));
  parallel_for(count, [&](std::size_t i) { task(i, parts[i]); }, workers);
  for (auto const& p : parts) tally.merge(p);
}

std::vector<NormalCase> const& small_cases() {
  static std::vector<NormalCase> const cases = normal_group_cases(loops_up_to(6));
  return cases;
}

// Data corpus shared by criteria 3 and 4.
std::vector<SchreierData> division_corpus(VerifyOptions const& options) {
  std::vector<SchreierData> out;
  auto const ks = loops_up_to(3);
  auto const gs = groups_up_to(3);
  for (auto const& k : ks)
    for (auto const& g : gs) {
      auto part = exhaustive_schreier(k, g);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::mt19937_64 rng(options.seed);
  auto const rk = loops_up_to(4);
  auto const rg = groups_up_to(6);
  for (std::size_t i = 0; i < options.random_cases; ++i) out.push_back(random_schreier(rng, rk, rg));
  return out;
}

CriterionResult nuclearity_gate(VerifyOptions const& options) {
  Tally tally(1, "nuclearity gate");
  auto const& cases = small_cases();
  run_cases(cases.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    LoopTable const& l = cases[i].loop;
    ElementSubset const& g = cases[i].subgroup;
    bool const expected = scan_middle(l, g) && scan_right(l, g);
    bool const got = has_schreier_decomposition(l, g);
    t.check(got == expected, [&] {
      return "has_schreier_decomposition = " + std::to_string(got) + " but scans say " +
             std::to_string(expected) + ": " + describe(l, g);
    });
  });
  return tally.take();
}

CriterionResult round_trip(VerifyOptions const& options) {
  Tally tally(2, "round trip");
  auto const& cases = small_cases();
  run_cases(cases.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    LoopTable const& l = cases[i].loop;
    ElementSubset const& g = cases[i].subgroup;
    if (!(scan_middle(l, g) && scan_right(l, g))) return;
    FactorLoop const factor = factor_loop(l, g);
    auto const kappas = automorphisms(factor.quotient);
    for_each_left_transversal(l, g, [&](ElementSubset const& sigma) {
      for (auto const& kappa : kappas) {
        DataPair const pair{factor.quotient, kappa, sigma};
        bool ok = true;
        try {
          Decomposition const d = decompose(l, g, pair);
          LoopTable const built = schreier_loop(d.data);
          ProductCarrier const c = d.data.carrier();
          ok = d.iso.is_bijective() && is_homomorphism(built, l, d.iso);
          for (Element idx = 0; ok && idx < c.size(); ++idx) {
            Element const s = c.g_part(idx), k = c.k_part(idx);
            Element lk = 0;
            for (Element x : factor.cosets[kappa(k)])
              if (sigma.contains(x)) lk = x;
            ok = d.iso(idx) == l.mul(lk, g[s]) && factor.projection(d.iso(idx)) == kappa(k) &&
                 (k != 0 || d.iso(idx) == g[s]);
          }
        } catch (ContractViolation const& e) {
          t.miss(std::string("contract violation: ") + e.what() + ": " + describe(l, g));
          continue;
        }
        t.check(ok, [&] { return "F is not a G-fixing isomorphism over kappa: " + describe(l, g); });
      }
      return true;
    });
  });
  return tally.take();
}

CriterionResult division_formulas(VerifyOptions const& options) {
  Tally tally(3, "division formulas");
  auto const corpus = division_corpus(options);
  run_cases(corpus.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    SchreierData const& d = corpus[i];
    LoopTable const l = schreier_loop(d);
    std::size_t bad = 0;
    for (Element a = 0; a < l.order(); ++a)
      for (Element b = 0; b < l.order(); ++b) {
        bad += schreier_divide(d, Side::left, a, b) != l.ldiv(a, b);
        bad += schreier_divide(d, Side::right, a, b) != l.rdiv(a, b);
      }
    t.check(bad == 0, [&] { return std::to_string(bad) + " division mismatches for " + describe(d); });
  });
  return tally.take();
}

CriterionResult group_conditions_suite(VerifyOptions const& options) {
  Tally tally(4, "group conditions");
  auto const corpus = division_corpus(options);
  run_cases(corpus.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    SchreierData const& d = corpus[i];
    if (!is_associative(d.k())) return;
    GroupConditions const c = group_conditions(d);
    bool const assoc = is_associative(schreier_loop(d));
    t.check(assoc == (c.theta_condition && c.cocycle_condition), [&] {
      return "associative = " + std::to_string(assoc) + ", eq2 = " + std::to_string(c.theta_condition) +
             ", eq3 = " + std::to_string(c.cocycle_condition) + " for " + describe(d);
    });
  });
  return tally.take();
}

CriterionResult inner_mapping_suite(VerifyOptions const& options) {
  Tally tally(5, "middle inner mappings");
  std::vector<FixtureCase> corpus;
  for (auto const& [l, g] : small_cases())
    if (scan_middle(l, g) && scan_right(l, g)) corpus.push_back({"", l, g});
  std::size_t const enumerated = corpus.size();
  for (auto& f : gallery_fixture_cases()) corpus.push_back(std::move(f));

  run_cases(corpus.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    std::string const& name = corpus[i].name;
    LoopTable const& l = corpus[i].loop;
    ElementSubset const& g = corpus[i].subgroup;
    auto const where = [&] { return name.empty() ? describe(l, g) : name; };
    t.check(t_factorization_check(l, g), [&] { return "T factorization fails: " + where(); });

    bool const hom = t_is_homomorphism(l, g);
    bool const left = scan_left(l, g);
    t.check(hom == left, [&] {
      return "t_is_homomorphism = " + std::to_string(hom) + ", left nuclear = " + std::to_string(left) + ": " +
             where();
    });

    InnerImage const inner = all_t_inner(l, g);
    bool found = false;
    for_each_left_transversal(l, g, [&](ElementSubset const& sigma) {
      found = std::all_of(sigma.begin(), sigma.end(), [&](Element x) { return commutes_with_all(l, g, x); });
      return !found;
    });
    t.check(inner.all_inner == found, [&] {
      return "all_t_inner = " + std::to_string(inner.all_inner) + ", commutant transversal exists = " +
             std::to_string(found) + ": " + where();
    });
    if (inner.witness) {
      bool const good = std::all_of(inner.witness->begin(), inner.witness->end(),
                                    [&](Element x) { return commutes_with_all(l, g, x); });
      t.check(good, [&] { return "witness leaves the commutant: " + where(); });
    }
  });
  tally.note(std::to_string(enumerated) + " enumerated pairs and " + std::to_string(corpus.size() - enumerated) +
             " gallery fixtures");
  return tally.take();
}

CriterionResult transform_suite(VerifyOptions const& options) {
  Tally tally(6, "transversal transforms");
  std::vector<SchreierData> corpus;
  for (auto const& k : loops_up_to(3))
    for (auto const& g : groups_up_to(3)) {
      auto part = exhaustive_schreier(k, g);
      corpus.insert(corpus.end(), part.begin(), part.end());
    }
  std::mt19937_64 rng(options.seed + 6);
  auto const sk = loops_up_to(4);
  auto const sg = groups_up_to(4);
  for (std::size_t i = 0; i < options.random_cases; ++i) corpus.push_back(random_schreier(rng, sk, sg));

  run_cases(corpus.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    SchreierData const& d = corpus[i];
    LoopTable const l = schreier_loop(d);
    ProductCarrier const c = d.carrier();
    ElementSubset const g = embedded_subgroup(c);
    std::vector<Element> members;
    for (Element s = 0; s < c.k_order; ++s) members.push_back(c.index(s, 0));
    DataPair const pair{d.k(), FiniteMap::identity(c.k_order), ElementSubset(l.order(), members)};
    SchreierData const base = schreier_data_from_pair(l, g, pair);
    t.check(base == d, [&] { return "extraction does not return the original data: " + describe(d); });

    for_each_shift(c.k_order, c.g_order, [&](FiniteMap const& n) {
      SchreierData const formula = shift_data(base, n);
      std::vector<Element> shifted;
      for (Element s = 0; s < c.k_order; ++s) shifted.push_back(l.mul(c.index(s, 0), g[n(s)]));
      DataPair const moved{d.k(), pair.kappa, ElementSubset(l.order(), shifted)};
      SchreierData const extracted = schreier_data_from_pair(l, g, moved);
      t.check(formula == extracted, [&] {
        return "shift n = [" + emit_map_line(n) + "] differs from re-extraction for " + describe(d);
      });
    });

    for (FiniteMap const& mu : automorphisms(d.k())) {
      SchreierData const m = precompose_automorphism(base, mu);
      LoopTable const lm = schreier_loop(m);
      std::vector<Element> images(l.order());
      for (Element idx = 0; idx < l.order(); ++idx) images[idx] = c.index(mu(c.k_part(idx)), c.g_part(idx));
      FiniteMap const psi(l.order(), images);
      bool fixes = true;
      for (Element s = 0; s < c.g_order; ++s) fixes = fixes && psi(s) == s;
      t.check(fixes && psi.is_bijective() && is_homomorphism(lm, l, psi) && equivalence_oracle(m, base, true), [&] {
        return "precomposition with mu = [" + emit_map_line(mu) + "] is not G-fixing isomorphic: " + describe(d);
      });
    }
  });
  return tally.take();
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

std::vector<Element> data_key(SchreierData const& d) {
  std::vector<Element> key;
  for (auto const& t : d.thetas()) key.insert(key.end(), t.images().begin(), t.images().end());
  key.insert(key.end(), d.factor().begin(), d.factor().end());
  return key;
}

// Checks one (K, G) block of criterion 7 for one relation.
void equivalence_block(std::vector<SchreierData> const& data, std::vector<PreparedSchreier> const& prepared,
                       bool wide, std::mt19937_64& rng, Tally& t) {
  std::size_t const count = data.size();
  std::map<std::vector<Element>, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(data_key(data[i]), i);
  auto lookup = [&](SchreierData const& d) { return index.at(data_key(d)); };

  // Formula side: orbits of the transversal changes (and K-automorphisms).
  UnionFind orbits(count);
  std::size_t const nk = data.front().k().order(), ng = data.front().g().order();
  auto const kauts = automorphisms(data.front().k());
  for (std::size_t i = 0; i < count; ++i) {
    for_each_shift(nk, ng, [&](FiniteMap const& n) { orbits.unite(i, lookup(shift_data(data[i], n))); });
    if (wide)
      for (auto const& mu : kauts) orbits.unite(i, lookup(precompose_automorphism(data[i], mu)));
  }

  // Oracle side: isomorphism classes, searched within invariant buckets.
  std::map<std::uint64_t, std::vector<std::size_t>> reps;
  std::vector<std::size_t> oracle_class(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& bucket = reps[wide ? prepared[i].wide_invariant : prepared[i].narrow_invariant];
    auto it = std::find_if(bucket.begin(), bucket.end(), [&](std::size_t r) {
      return equivalence_oracle(prepared[r], prepared[i], wide);
    });
    if (it == bucket.end()) {
      bucket.push_back(i);
      oracle_class[i] = i;
    } else {
      oracle_class[i] = *it;
    }
    // Direct calls against every other class representative in the bucket.
    for (std::size_t r : bucket) {
      bool const same = r == oracle_class[i];
      bool const present = wide ? wide_equivalent(data[r], data[i]).has_value()
                                : equivalent(data[r], data[i]).has_value();
      t.check(present == same, [&] {
        return std::string(wide ? "wide_equivalent" : "equivalent") + " = " + std::to_string(present) +
               ", oracle = " + std::to_string(same) + " for " + describe(data[r]) + " vs " + describe(data[i]);
      });
    }
  }

  // The two partitions must coincide.
  std::map<std::size_t, std::size_t> to_oracle, to_formula;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t const f = orbits.find(i), o = oracle_class[i];
    auto [a, fresh_a] = to_oracle.emplace(f, o);
    auto [b, fresh_b] = to_formula.emplace(o, f);
    t.check(a->second == o && b->second == f, [&] {
      return std::string(wide ? "wide" : "narrow") + " classes disagree at " + describe(data[i]);
    });
  }

  // Relation laws on witnessed triples drawn from single classes.
  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < count; ++i) members[orbits.find(i)].push_back(i);
  std::vector<std::size_t> roots;
  for (auto const& [root, list] : members) roots.push_back(root);
  if (count >= 100)
    t.note(std::string(wide ? "wide" : "narrow") + " K = " + identify_group(data.front().k()) + ", G = " +
           identify_group(data.front().g()) + ": " + std::to_string(count) + " data, " +
           std::to_string(roots.size()) + " classes");
  auto related = [&](std::size_t a, std::size_t b) {
    return wide ? wide_equivalent(data[a], data[b]).has_value() : equivalent(data[a], data[b]).has_value();
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto const& list = members[roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)]];
    auto pick = [&] { return list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)]; };
    std::size_t const a = pick(), b = pick(), c = pick();
    bool const laws = related(a, a) && related(a, b) && related(b, c) && related(b, a) && related(a, c) &&
                      equivalence_oracle(prepared[a], prepared[b], wide) &&
                      equivalence_oracle(prepared[b], prepared[a], wide) &&
                      equivalence_oracle(prepared[a], prepared[c], wide);
    t.check(laws, [&] { return "relation laws fail on a witnessed triple starting at " + describe(data[a]); });
  }
}

CriterionResult equivalence_suite(VerifyOptions const& options) {
  Tally tally(7, "equivalence agreement");
  auto const ks = loops_up_to(3);
  auto const gs = groups_up_to(4);
  std::vector<std::pair<LoopTable, LoopTable>> blocks;
  for (auto const& k : ks)
    for (auto const& g : gs) blocks.emplace_back(k, g);

  run_cases(blocks.size() * 2, options.workers, tally, [&](std::size_t i, Tally& t) {
    LoopTable const& k = blocks[i / 2].first;
    LoopTable const& g = blocks[i / 2].second;
    bool const wide = i % 2 == 1;
    auto const data = exhaustive_schreier(k, g);
    std::vector<PreparedSchreier> prepared;
    prepared.reserve(data.size());
    for (auto const& d : data) prepared.emplace_back(d);
    std::mt19937_64 rng(options.seed + 7 + i);
    equivalence_block(data, prepared, wide, rng, t);
  });
  return tally.take();
}

CriterionResult proposition_suite(VerifyOptions const& options) {
  Tally tally(8, "inverse/alternative/flexible proposition");
  auto const& cases = small_cases();
  std::size_t loops_seen = 0;
  std::vector<std::size_t> flagged(cases.size(), 0);
  run_cases(cases.size(), options.workers, tally, [&](std::size_t i, Tally& t) {
    LoopTable const& l = cases[i].loop;
    ElementSubset const& g = cases[i].subgroup;
    LoopProperties const p = loop_properties(l);
    if (!(p.left_inverse || p.left_alternative || p.flexible)) return;
    flagged[i] = 1;
    if (!(scan_middle(l, g) && scan_right(l, g))) return;
    t.check(scan_left(l, g), [&] { return "counterexample: " + describe(l, g); });
  });
  loops_seen = std::accumulate(flagged.begin(), flagged.end(), std::size_t{0});
  tally.note(std::to_string(loops_seen) + " (L, G) pairs with a left inverse, left alternative or flexible L");
  return tally.take();
}

CriterionResult fixture_suite(VerifyOptions const&) {
  Tally tally(9, "fixtures");
  {
    LoopTable const z4 = cyclic_group(4);
    ElementSubset const g(4, {0, 2});
    Decomposition const d = decompose(z4, g, canonical_pair(z4, g, ElementSubset(4, {0, 1})));
    std::string const expected =
        "K:\n2\n0 1\n1 0\nG:\n2\n0 1\n1 0\nTheta:\n0 1\n0 1\nf:\n0 0\n0 1\niso:\n0 2 1 3\n";
    tally.check(emit_decomposition(d) == expected && g[d.data.f(1, 1)] == 2, [&] {
      return "E-Z4 decomposition differs:\n" + emit_decomposition(d);
    });
  }
  {
    SchreierData const d = fixture_s3f();
    LoopTable const l = schreier_loop(d);
    ElementSubset const g = embedded_subgroup(d.carrier());
    bool const shape = !is_associative(l) && scan_middle(l, g) && scan_right(l, g) && !scan_left(l, g);
    tally.check(shape, [] { return "E-S3f: expected nonassociative, middle+right but not left nuclear"; });
  }
  {
    SchreierData const d = fixture_v4();
    LoopTable const l = schreier_loop(d);
    bool const none = !has_automorphism_free_decomposition(l, embedded_subgroup(d.carrier())).exists;
    tally.check(none, [] { return "E-V4 has an automorphism-free decomposition"; });
  }
  {
    LoopTable const s3 = symmetric_group(3);
    SchreierData const d = example_commutator(s3, s3, FiniteMap(6, {0, 3, 4})).data;
    LoopTable const l = schreier_loop(d);
    tally.check(l.order() == 36 && !is_associative(l),
                [&] { return "commutator example S3, S3: order " + std::to_string(l.order()); });
  }
  return tally.take();
}

CriterionResult enumeration_suite(VerifyOptions const& options) {
  Tally tally(10, "enumeration sanity");
  std::size_t const many = std::max<std::size_t>(options.workers, 4);
  for (std::size_t n : {4u, 5u, 6u}) {
    auto const one = enumerate_loops(n, {}, {1});
    auto const parallel = enumerate_loops(n, {}, {many});
    tally.check(one == parallel, [&] { return "order " + std::to_string(n) + " differs across thread counts"; });
    bool distinct = true;
    for (std::size_t a = 0; a < one.size() && distinct; ++a)
      for (std::size_t b = a + 1; b < one.size() && distinct; ++b)
        distinct = !find_isomorphism(one[a], one[b]).has_value();
    tally.check(distinct, [&] { return "order " + std::to_string(n) + " has isomorphic representatives"; });
    auto const groups = std::count_if(one.begin(), one.end(), [](LoopTable const& l) { return is_associative(l); });
    if (n == 4)
      tally.check(one.size() == 2 && groups == 2,
                  [&] { return "order 4: " + std::to_string(one.size()) + " loops"; });
    if (n == 5)
      tally.check(one.size() == 6 && groups == 1, [&] {
        return "order 5: " + std::to_string(one.size()) + " loops, " + std::to_string(groups) + " groups";
      });
    tally.note("order " + std::to_string(n) + ": " + std::to_string(one.size()) + " loops, " +
               std::to_string(groups) + " groups");
  }
  return tally.take();
}

}  // namespace

CriterionResult verify_criterion(int id, VerifyOptions const& options) {
  switch (id) {
    case 1: return nuclearity_gate(options);
    case 2: return round_trip(options);
    case 3: return division_formulas(options);
    case 4: return group_conditions_suite(options);
    case 5: return inner_mapping_suite(options);
    case 6: return transform_suite(options);
    case 7: return equivalence_suite(options);
    case 8: return proposition_suite(options);
    case 9: return fixture_suite(options);
    case 10: return enumeration_suite(options);
    default: fail(ErrorKind::ParseError, "criteria are numbered 1..10");
  }
}

std::vector<CriterionResult> run_verification(VerifyOptions const& options,
                                              std::function<void(CriterionResult const&)> const& progress) {
  std::vector<int> ids = options.only;
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    CriterionResult r;
    try {
      r = verify_criterion(id, options);
    } catch (std::exception const& e) {
      r.id = id;
      r.title = "criterion " + std::to_string(id);
      r.mismatches = 1;
      r.notes.push_back(std::string("aborted: ") + e.what());
    }
    if (progress) progress(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(CriterionResult const& r) {
  std::ostringstream out;
  out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << ": " << r.cases << " cases, "
      << r.mismatches << " mismatches";
  for (auto const& note : r.notes) out << "\n    " << note;
  return out.str();
}

}  // namespace loopforge
