#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loopforge/extensions.hpp"
#include "loopforge/groups.hpp"
#include "loopforge/loop_table.hpp"

namespace loopforge {

struct GalleryExample {
  SchreierData data;
  /// Degenerate-but-legal inputs (central images, abelian K) are reported
  /// here instead of being rejected.
  std::vector<std::string> warnings;
};

/// Theta = Id, f(tau, sigma) = chi(R_{sigma,tau}) where R_{sigma,tau} is the
/// right inner mapping z -> ((z tau) sigma)/(tau sigma) of K, looked up in
/// right_inner_group(K). chi is given on that group's labels.
/// Throws NotRightBol, NotAGroup or NotAHomomorphism.
GalleryExample example_bol(LoopTable const& k, LoopTable const& g, FiniteMap const& chi);

/// Theta = Id, f(tau, sigma) = phi(sigma^-1 tau^-1 sigma tau). phi is given on
/// the positions of commutator_subgroup(K). Throws NotAGroup or NotAHomomorphism.
GalleryExample example_commutator(LoopTable const& k, LoopTable const& g, FiniteMap const& phi);

/// f = e, Theta_sigma(u) = phi(sigma)^-1 u phi(sigma).
/// Throws NotAGroup or NotAHomomorphism.
GalleryExample example_conjugation(LoopTable const& k, LoopTable const& g, FiniteMap const& phi);

/// K = Z2, G = Z2, Theta = Id, f(a, a) = g. The loop is Z4.
SchreierData fixture_z4();
/// K = Z2, G = S3, Theta = Id, f(a, a) = 2 (the transposition [1,0,2]).
SchreierData fixture_s3f();
/// K = Z2, G = V4, f = e, Theta_a swaps the generators 1 and 2.
SchreierData fixture_v4();
/// K = Z2, G = Z4 and psi_a swapping 1 and 2, which is not an automorphism.
std::vector<FiniteMap> fixture_psi_maps();
/// The first nonassociative right Bol loop of order 8 in enumeration order.
LoopTable fixture_bol8();

std::vector<std::string> fixture_names();
/// Data fixtures by name: E-Z4, E-S3f, E-V4. Throws ParseError.
SchreierData fixture_by_name(std::string_view name);

}  // namespace loopforge
