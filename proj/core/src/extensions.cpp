#include "loopforge/extensions.hpp"

#include "loopforge/error.hpp"
#include "loopforge/loops.hpp"
#include "loopforge/morphisms.hpp"

namespace loopforge {

namespace {

bool is_automorphism(LoopTable const& g, FiniteMap const& m) {
  return m.size() == g.order() && m.codomain_size() == g.order() && m.is_bijective() &&
         is_homomorphism(g, g, m);
}

}  // namespace

SchreierData::SchreierData(LoopTable k, LoopTable g, std::vector<FiniteMap> theta,
                           std::vector<Element> factor, std::string label)
    : k_(std::move(k)),
      g_(std::move(g)),
      theta_(std::move(theta)),
      factor_(std::move(factor)),
      label_(std::move(label)) {
  std::size_t const nk = k_.order();
  std::size_t const ng = g_.order();
  if (!is_associative(g_)) fail(ErrorKind::InvalidData, "G is not a group");
  if (theta_.size() != nk)
    fail(ErrorKind::InvalidData, "Theta has " + std::to_string(theta_.size()) + " entries, |K| = " +
                                     std::to_string(nk));
  for (std::size_t s = 0; s < nk; ++s)
    if (!is_automorphism(g_, theta_[s]))
      fail(ErrorKind::InvalidData, "Theta_" + std::to_string(s) + " is not an automorphism of G");
  if (!theta_[0].is_identity()) fail(ErrorKind::InvalidData, "Theta at the identity of K is not Id");
  if (factor_.size() != nk * nk) fail(ErrorKind::InvalidData, "f must have |K|^2 entries");
  for (Element v : factor_)
    if (v >= ng) fail(ErrorKind::InvalidData, "f value " + std::to_string(v) + " outside G");
  for (Element s = 0; s < nk; ++s)
    if (f(0, s) != 0 || f(s, 0) != 0)
      fail(ErrorKind::InvalidData, "f is not normalized at " + std::to_string(s));
  theta_inv_.reserve(nk);
  for (auto const& t : theta_) theta_inv_.push_back(t.inverse());
}

SchreierData SchreierData::direct_product(LoopTable k, LoopTable g, std::string label) {
  std::size_t const nk = k.order();
  std::size_t const ng = g.order();
  return SchreierData(std::move(k), std::move(g), std::vector<FiniteMap>(nk, FiniteMap::identity(ng)),
                      std::vector<Element>(nk * nk, 0), std::move(label));
}

bool SchreierData::automorphism_free() const noexcept {
  for (auto const& t : theta_)
    if (!t.is_identity()) return false;
  return true;
}

bool SchreierData::factor_free() const noexcept {
  for (Element v : factor_)
    if (v != 0) return false;
  return true;
}

ElementSubset embedded_subgroup(ProductCarrier const& carrier) {
  std::vector<Element> m(carrier.g_order);
  for (Element t = 0; t < carrier.g_order; ++t) m[t] = t;
  return ElementSubset(carrier.size(), std::move(m));
}

LoopTable bruck_extension(LoopTable const& k, LoopTable const& n, QuasigroupFamily const& family) {
  std::size_t const nk = k.order();
  std::size_t const nn = n.order();
  for (Element alpha = 0; alpha < nk; ++alpha)
    for (Element beta = 0; beta < nk; ++beta) {
      std::string const where = "(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
      for (Element a = 0; a < nn; ++a) {
        std::vector<bool> row(nn, false), col(nn, false);
        for (Element b = 0; b < nn; ++b) {
          Element const r = family(alpha, beta, a, b);
          Element const c = family(alpha, beta, b, a);
          if (r >= nn || c >= nn) fail(ErrorKind::BadFamily, "value out of range at " + where);
          if (row[r] || col[c]) fail(ErrorKind::BadFamily, "operation " + where + " is not a quasigroup");
          row[r] = col[c] = true;
        }
      }
    }
  for (Element alpha = 0; alpha < nk; ++alpha)
    for (Element x = 0; x < nn; ++x) {
      if (family(0, alpha, 0, x) != x)
        fail(ErrorKind::BadFamily, "e [e," + std::to_string(alpha) + "] x != x");
      if (family(alpha, 0, x, 0) != x)
        fail(ErrorKind::BadFamily, "x [" + std::to_string(alpha) + ",e] e != x");
    }
  ProductCarrier const c{nk, nn};
  LoopTable out = loop_from_function(c.size(), [&](Element i, Element j) {
    Element const alpha = c.k_part(i), beta = c.k_part(j);
    return c.index(k.mul(alpha, beta), family(alpha, beta, c.g_part(i), c.g_part(j)));
  });
  ElementSubset const embedded = embedded_subgroup(c);
  ensure(is_normal(out, embedded), "embedded N is not normal");
  ensure(restrict_to(out, embedded) == n, "embedded N differs from N");
  return out;
}

PsiExtension psi_extension(LoopTable const& k, LoopTable const& g, std::vector<FiniteMap> const& psi) {
  std::size_t const nk = k.order();
  std::size_t const ng = g.order();
  if (!is_associative(g)) fail(ErrorKind::BadPsi, "G is not a group");
  if (psi.size() != nk) fail(ErrorKind::BadPsi, "need one psi per element of K");
  for (std::size_t s = 0; s < nk; ++s) {
    if (psi[s].size() != ng || psi[s].codomain_size() != ng || !psi[s].is_bijective())
      fail(ErrorKind::BadPsi, "psi_" + std::to_string(s) + " is not a bijection of G");
    if (psi[s](0) != 0) fail(ErrorKind::BadPsi, "psi_" + std::to_string(s) + " moves the identity");
  }
  if (!psi[0].is_identity()) fail(ErrorKind::BadPsi, "psi at the identity of K is not Id");

  ProductCarrier const c{nk, ng};
  PsiExtension out;
  out.loop = loop_from_function(c.size(), [&](Element i, Element j) {
    Element const beta = c.k_part(j);
    return c.index(k.mul(c.k_part(i), beta), g.mul(psi[beta](c.g_part(i)), c.g_part(j)));
  });
  out.right_nuclear = out.middle_nuclear = out.left_nuclear = true;
  for (Element t = 0; t < ng; ++t) {
    out.right_nuclear = out.right_nuclear && is_right_nuclear(out.loop, t);
    out.middle_nuclear = out.middle_nuclear && is_middle_nuclear(out.loop, t);
    out.left_nuclear = out.left_nuclear && is_left_nuclear(out.loop, t);
  }
  out.psi_automorphic = true;
  for (auto const& p : psi) out.psi_automorphic = out.psi_automorphic && is_homomorphism(g, g, p);
  out.psi_multiplicative = true;
  for (Element a = 0; a < nk; ++a)
    for (Element b = 0; b < nk; ++b)
      if (!(psi[k.mul(a, b)] == compose(psi[b], psi[a]))) out.psi_multiplicative = false;

  ensure(out.right_nuclear, "embedded G is not right nuclear in a psi-extension");
  ensure(out.middle_nuclear == out.psi_automorphic, "middle nuclearity disagrees with psi automorphy");
  ensure(out.left_nuclear == (out.psi_automorphic && out.psi_multiplicative),
         "left nuclearity disagrees with psi multiplicativity");
  return out;
}

LoopTable schreier_loop(SchreierData const& d) {
  ProductCarrier const c = d.carrier();
  LoopTable const& k = d.k();
  LoopTable const& g = d.g();
  LoopTable out = loop_from_function(
      c.size(),
      [&](Element i, Element j) {
        Element const tau = c.k_part(i), t = c.g_part(i);
        Element const sigma = c.k_part(j), s = c.g_part(j);
        return c.index(k.mul(tau, sigma), g.mul(g.mul(d.f(tau, sigma), d.theta(sigma)(t)), s));
      },
      d.label());

  ElementSubset const embedded = embedded_subgroup(c);
  ensure(restrict_to(out, embedded) == g, "(e,t) -> t is not an isomorphism");
  FactorLoop const factor = factor_loop(out, embedded);
  ensure(factor.quotient == k, "tau -> (tau,e)G is not an isomorphism");
  for (Element tau = 0; tau < k.order(); ++tau)
    ensure(factor.projection(c.index(tau, 0)) == tau, "coset order differs from K");
  return out;
}

Element schreier_divide(SchreierData const& d, Side side, Element a, Element b) {
  ProductCarrier const c = d.carrier();
  LoopTable const& k = d.k();
  LoopTable const& g = d.g();
  auto inv = [&](Element x) { return group_inverse(g, x); };
  if (side == Side::right) {
    // (rho, r) / (sigma, s) = (rho/sigma, Theta_sigma^-1(f(rho/sigma, sigma)^-1 r s^-1))
    Element const rho = c.k_part(a), r = c.g_part(a);
    Element const sigma = c.k_part(b), s = c.g_part(b);
    Element const q = k.rdiv(rho, sigma);
    Element const inner = g.mul(g.mul(inv(d.f(q, sigma)), r), inv(s));
    return c.index(q, d.theta_inverse(sigma)(inner));
  }
  // (sigma, s) \ (rho, r) = (sigma\rho, Theta_{sigma\rho}(s)^-1 f(sigma, sigma\rho)^-1 r)
  Element const sigma = c.k_part(a), s = c.g_part(a);
  Element const rho = c.k_part(b), r = c.g_part(b);
  Element const q = k.ldiv(sigma, rho);
  return c.index(q, g.mul(g.mul(inv(d.theta(q)(s)), inv(d.f(sigma, q))), r));
}

GroupConditions group_conditions(SchreierData const& d) {
  LoopTable const& k = d.k();
  LoopTable const& g = d.g();
  std::size_t const nk = k.order();
  std::size_t const ng = g.order();
  auto inv = [&](Element x) { return group_inverse(g, x); };

  GroupConditions out{true, true};
  for (Element s = 0; s < nk && out.theta_condition; ++s)
    for (Element t = 0; t < nk && out.theta_condition; ++t) {
      Element const st = k.mul(s, t);
      Element const fst = d.f(s, t);
      for (Element u = 0; u < ng; ++u) {
        Element const lhs = d.theta(st)(d.theta_inverse(s)(d.theta_inverse(t)(u)));
        Element const rhs = g.mul(g.mul(fst, u), inv(fst));
        if (lhs != rhs) {
          out.theta_condition = false;
          break;
        }
      }
    }
  for (Element s = 0; s < nk && out.cocycle_condition; ++s)
    for (Element t = 0; t < nk && out.cocycle_condition; ++t)
      for (Element r = 0; r < nk; ++r) {
        Element v = inv(d.f(s, k.mul(t, r)));
        v = g.mul(v, d.f(k.mul(s, t), r));
        v = g.mul(v, d.theta(r)(d.f(s, t)));
        v = g.mul(v, inv(d.f(t, r)));
        if (v != 0) {
          out.cocycle_condition = false;
          break;
        }
      }
  return out;
}

SchreierClassification classify_schreier(SchreierData const& d) {
  return classify_schreier(d, schreier_loop(d));
}

SchreierClassification classify_schreier(SchreierData const& d, LoopTable const& loop) {
  SchreierClassification out;
  out.automorphism_free = d.automorphism_free();
  out.factor_free = d.factor_free();
  out.left_nuclear = out.middle_nuclear = out.right_nuclear = true;
  for (Element t = 0; t < d.g().order(); ++t) {
    out.left_nuclear = out.left_nuclear && is_left_nuclear(loop, t);
    out.middle_nuclear = out.middle_nuclear && is_middle_nuclear(loop, t);
    out.right_nuclear = out.right_nuclear && is_right_nuclear(loop, t);
  }
  out.fully_nuclear = out.left_nuclear && out.middle_nuclear && out.right_nuclear;
  out.associative = is_associative(loop);
  out.conditions = group_conditions(d);

  ensure(out.middle_nuclear && out.right_nuclear, "embedded G is not middle and right nuclear");
  ensure(out.fully_nuclear == out.conditions.theta_condition,
         "full nuclearity of G disagrees with the Theta condition");
  if (is_associative(d.k()))
    ensure(out.associative == (out.conditions.theta_condition && out.conditions.cocycle_condition),
           "associativity disagrees with the group conditions");
  if (out.automorphism_free) {
    ElementSubset const z = center(d.g());
    bool noncentral = false;
    for (Element v : d.factor()) noncentral = noncentral || !z.contains(v);
    if (noncentral) ensure(!out.left_nuclear, "G is left nuclear despite a noncentral factor value");
  }
  if (has_property(loop, Property::left_inverse) || has_property(loop, Property::left_alternative) ||
      has_property(loop, Property::flexible))
    ensure(out.fully_nuclear, "G is not nuclear in a LIP / left alternative / flexible Schreier loop");
  return out;
}

}  // namespace loopforge
