#include "loopforge/equivalence.hpp"

#include <algorithm>
#include <functional>

#include "loopforge/decomposition.hpp"
#include "loopforge/error.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"

namespace loopforge {

namespace {

void require_same_carrier(SchreierData const& a, SchreierData const& b) {
  if (!(a.k() == b.k()) || !(a.g() == b.g()))
    fail(ErrorKind::CarrierMismatch, "Schreier data are defined over different K or G");
}

using ThetaTarget = std::function<FiniteMap const&(Element)>;
using FactorTarget = std::function<Element(Element, Element)>;

// Lexicographically first n with n(e) = e turning `source` into the target
// under the transversal-change formulas. Candidates for each n(s) are first
// narrowed by the Theta equation, which only involves n(s).
std::optional<FiniteMap> find_shift(SchreierData const& source, ThetaTarget const& theta_target,
                                    FactorTarget const& f_target) {
  LoopTable const& k = source.k();
  LoopTable const& g = source.g();
  std::size_t const nk = k.order();
  std::size_t const ng = g.order();
  auto inv = [&](Element x) { return group_inverse(g, x); };

  std::vector<std::vector<Element>> candidates(nk);
  for (Element s = 0; s < nk; ++s) {
    FiniteMap const& want = theta_target(s);
    for (Element c = 0; c < ng; ++c) {
      if (s == 0 && c != 0) break;
      bool ok = true;
      for (Element t = 0; t < ng && ok; ++t)
        ok = g.mul(g.mul(inv(c), source.theta(s)(t)), c) == want(t);
      if (ok) candidates[s].push_back(c);
    }
    if (candidates[s].empty()) return std::nullopt;
  }

  std::vector<std::size_t> pick(nk, 0);
  std::vector<Element> n(nk);
  while (true) {
    for (Element s = 0; s < nk; ++s) n[s] = candidates[s][pick[s]];
    bool ok = true;
    for (Element s = 0; s < nk && ok; ++s)
      for (Element t = 0; t < nk; ++t) {
        Element v = inv(n[k.mul(s, t)]);
        v = g.mul(v, source.f(s, t));
        v = g.mul(v, source.theta(t)(n[s]));
        v = g.mul(v, n[t]);
        if (v != f_target(s, t)) {
          ok = false;
          break;
        }
      }
    if (ok) return FiniteMap(ng, n);
    std::size_t s = nk;
    while (true) {
      if (s == 1 || nk == 1) return std::nullopt;
      --s;
      if (++pick[s] < candidates[s].size()) break;
      pick[s] = 0;
    }
  }
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t fixing_invariant(LoopTable const& loop, ProductCarrier const& c, bool narrow) {
  std::size_t const ng = c.g_order;
  auto tag = [&](Element v) -> std::uint64_t {
    if (v < ng) return v;
    return narrow ? ng + 1 + c.k_part(v) : ng;
  };
  std::vector<std::uint64_t> profiles;
  profiles.reserve(loop.order());
  for (Element x = 0; x < loop.order(); ++x) {
    std::uint64_t h = narrow ? c.k_part(x) + 1 : 0;
    for (Element t = 0; t < ng; ++t) h = mix(h, tag(loop.rdiv(loop.mul(x, t), x)));
    Element const xx = loop.mul(x, x);
    h = mix(h, tag(xx));
    h = mix(h, tag(loop.mul(xx, x)));
    h = mix(h, tag(loop.mul(x, xx)));
    h = mix(h, tag(loop.ldiv(x, 0)));
    profiles.push_back(h);
  }
  std::sort(profiles.begin(), profiles.end());
  std::uint64_t out = loop.order();
  for (auto p : profiles) out = mix(out, p);
  return out;
}

}  // namespace

std::optional<FiniteMap> equivalent(SchreierData const& first, SchreierData const& second) {
  require_same_carrier(first, second);
  auto n = find_shift(
      first, [&](Element s) -> FiniteMap const& { return second.theta(s); },
      [&](Element s, Element t) { return second.f(s, t); });
  if (n) ensure(shift_data(first, *n) == second, "equivalence witness does not reproduce the data");
  return n;
}

SchreierData wide_transform(SchreierData const& d, FiniteMap const& mu, FiniteMap const& n) {
  return precompose_automorphism(shift_data(d, n), mu);
}

std::optional<WideWitness> wide_equivalent(SchreierData const& first, SchreierData const& second) {
  require_same_carrier(first, second);
  for (FiniteMap const& mu : automorphisms(first.k())) {
    FiniteMap const mu_inv = mu.inverse();
    // wide_transform(first, mu, n) == second  <=>  shift_data(first, n) == second reindexed by mu^-1.
    auto n = find_shift(
        first, [&](Element r) -> FiniteMap const& { return second.theta(mu_inv(r)); },
        [&](Element r, Element p) { return second.f(mu_inv(r), mu_inv(p)); });
    if (n) {
      ensure(wide_transform(first, mu, *n) == second, "wide witness does not reproduce the data");
      return WideWitness{mu, std::move(*n)};
    }
  }
  return std::nullopt;
}

PreparedSchreier::PreparedSchreier(SchreierData const& data)
    : k_order(data.k().order()), g_order(data.g().order()), loop(schreier_loop(data)) {
  ProductCarrier const c = data.carrier();
  wide_invariant = fixing_invariant(loop, c, false);
  narrow_invariant = fixing_invariant(loop, c, true);
}

std::optional<FiniteMap> equivalence_oracle_map(PreparedSchreier const& a, PreparedSchreier const& b,
                                                bool wide) {
  if (a.k_order != b.k_order || a.g_order != b.g_order)
    fail(ErrorKind::CarrierMismatch, "Schreier loops are defined over different carriers");
  if ((wide ? a.wide_invariant : a.narrow_invariant) != (wide ? b.wide_invariant : b.narrow_invariant))
    return std::nullopt;
  PartialMap fixed(a.loop.order());
  for (Element t = 0; t < a.g_order; ++t) fixed[t] = t;
  ProductCarrier const c{a.k_order, a.g_order};
  ImageFilter same_coset;
  if (!wide) same_coset = [c](Element x, Element y) { return c.k_part(x) == c.k_part(y); };
  return find_isomorphism_if(a.loop, b.loop, fixed, same_coset);
}

bool equivalence_oracle(PreparedSchreier const& a, PreparedSchreier const& b, bool wide) {
  return equivalence_oracle_map(a, b, wide).has_value();
}

bool equivalence_oracle(SchreierData const& first, SchreierData const& second, bool wide) {
  require_same_carrier(first, second);
  return equivalence_oracle(PreparedSchreier(first), PreparedSchreier(second), wide);
}

}  // namespace loopforge
