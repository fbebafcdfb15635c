#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "loopforge/loop_table.hpp"

namespace loopforge {

/// Pairs (sigma, s) of K x G flattened as sigma * |G| + s. The subgroup
/// {(e, t)} therefore occupies indices [0, |G|).
struct ProductCarrier {
  std::size_t k_order = 1;
  std::size_t g_order = 1;

  std::size_t size() const noexcept { return k_order * g_order; }
  Element index(Element sigma, Element s) const noexcept {
    return static_cast<Element>(sigma * g_order + s);
  }
  Element k_part(Element i) const noexcept { return static_cast<Element>(i / g_order); }
  Element g_part(Element i) const noexcept { return static_cast<Element>(i % g_order); }
};

/// The data (K, G, Theta, f) of a Schreier loop. Validated on construction:
/// G must be a group, each Theta_sigma an automorphism of G with
/// Theta_e = Id, and f(e, s) = f(s, e) = e. Violations throw InvalidData.
class SchreierData {
 public:
  /// factor holds f row-major: factor[tau * |K| + sigma] = f(tau, sigma).
  SchreierData(LoopTable k, LoopTable g, std::vector<FiniteMap> theta, std::vector<Element> factor,
               std::string label = {});

  /// Theta = Id, f = e.
  static SchreierData direct_product(LoopTable k, LoopTable g, std::string label = {});

  LoopTable const& k() const noexcept { return k_; }
  LoopTable const& g() const noexcept { return g_; }
  FiniteMap const& theta(Element sigma) const noexcept { return theta_[sigma]; }
  FiniteMap const& theta_inverse(Element sigma) const noexcept { return theta_inv_[sigma]; }
  std::vector<FiniteMap> const& thetas() const noexcept { return theta_; }
  Element f(Element tau, Element sigma) const noexcept { return factor_[tau * k_.order() + sigma]; }
  std::vector<Element> const& factor() const noexcept { return factor_; }
  ProductCarrier carrier() const noexcept { return {k_.order(), g_.order()}; }

  std::string const& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool automorphism_free() const noexcept;
  bool factor_free() const noexcept;

  friend bool operator==(SchreierData const& a, SchreierData const& b) noexcept {
    return a.k_ == b.k_ && a.g_ == b.g_ && a.theta_ == b.theta_ && a.factor_ == b.factor_;
  }

 private:
  LoopTable k_;
  LoopTable g_;
  std::vector<FiniteMap> theta_;
  std::vector<FiniteMap> theta_inv_;
  std::vector<Element> factor_;
  std::string label_;
};

/// A binary operation on N selected by a pair (alpha, beta) of K.
using QuasigroupFamily = std::function<Element(Element alpha, Element beta, Element a, Element b)>;

/// (alpha, a)(beta, b) = (alpha beta, a [alpha,beta] b) on K x N. Throws
/// BadFamily when a member is not a quasigroup or the boundary laws fail.
LoopTable bruck_extension(LoopTable const& k, LoopTable const& n, QuasigroupFamily const& family);

struct PsiExtension {
  LoopTable loop;
  bool right_nuclear = false;
  bool middle_nuclear = false;
  bool left_nuclear = false;
  /// Every psi_sigma is an automorphism of G.
  bool psi_automorphic = false;
  /// psi_{alpha beta} = psi_beta o psi_alpha for all alpha, beta.
  bool psi_multiplicative = false;
};

/// (alpha, a)(beta, b) = (alpha beta, psi_beta(a) b). The nuclearity flags
/// are measured on the built table and checked against the closed-form
/// criteria. Throws BadPsi.
PsiExtension psi_extension(LoopTable const& k, LoopTable const& g, std::vector<FiniteMap> const& psi);

/// (tau, t)(sigma, s) = (tau sigma, f(tau, sigma) Theta_sigma(t) s).
LoopTable schreier_loop(SchreierData const& data);

/// Closed-form divisions on the product carrier (flattened indices).
Element schreier_divide(SchreierData const& data, Side side, Element a, Element b);

struct GroupConditions {
  /// Theta_{st} Theta_s^-1 Theta_t^-1 = iota_{f(s,t)}.
  bool theta_condition = false;
  /// f(s,tr)^-1 f(st,r) Theta_r(f(s,t)) f(t,r)^-1 = e.
  bool cocycle_condition = false;
};

GroupConditions group_conditions(SchreierData const& data);

struct SchreierClassification {
  bool automorphism_free = false;
  bool factor_free = false;
  bool left_nuclear = false;
  bool middle_nuclear = false;
  bool right_nuclear = false;
  bool fully_nuclear = false;
  bool associative = false;
  GroupConditions conditions;
};

/// Flags plus a nuclearity survey of the embedded copy of G, with the
/// structural identities asserted on the way.
SchreierClassification classify_schreier(SchreierData const& data);
SchreierClassification classify_schreier(SchreierData const& data, LoopTable const& loop);

/// The subgroup {(e, t)} of a loop built on the product carrier.
ElementSubset embedded_subgroup(ProductCarrier const& carrier);

}  // namespace loopforge
