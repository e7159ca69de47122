#pragma once

#include <map>
#include <string>
#include <vector>

#include "lie/chevalley.hpp"
#include "lie/rootsys.hpp"
#include "lie/scalar.hpp"

namespace lie::lab {

/// Outcome of one finitely-checkable structural fact. pass == false
/// implies counterexample names the first violated instance.
struct LemmaReport {
  std::string lemma;
  std::string algebra;
  std::string params;
  bool pass = false;
  std::string counterexample;
};

enum class OrbitType { Point, Sphere };

std::string to_string(OrbitType t);

/// Positive weights on the positive roots outside <theta>, extended by
/// zero on <theta> for the additivity checks. theta holds sorted
/// 0-based simple-root indices.
struct LambdaSystem {
  std::vector<int> theta;
  std::map<Root, Rat> values;
};

/// Weights from the characteristic element of theta's complement:
/// lambda_alpha is the sum of the simple-root coefficients of alpha
/// outside theta. Additive on root sums, constant along <theta> shifts,
/// positive outside <theta>.
LambdaSystem lambda_from_theta(const RootSystem& rs, const std::vector<int>& theta);

/// Validates both structural conditions and positivity of a weight
/// system against a root system:
///   1. lambda_{a+b} = lambda_a + lambda_b whenever a, b, a+b are all
///      positive roots (zero-extended on <theta>);
///   2. lambda_{a+g} = lambda_a whenever a and a+g are positive roots
///      and g lies in <theta> (either sign);
///   3. lambda > 0 exactly on the positive roots outside <theta>, with
///      the value map keyed by exactly that set.
LemmaReport check_lambda_system(const RootSystem& rs, const LambdaSystem& lam);

/// One generator of the tangent space m at the base point: kind 'A' is
/// X_alpha - X_{-alpha}, kind 'S' is i(X_alpha + X_{-alpha}).
struct MGenerator {
  char kind = 'A';
  Root root;

  std::string to_string() const;
};

/// The invariant two-form at the base point of the flag space of
/// theta, over the ordered basis {A_a, S_a : a in Pi+ \ <theta>}.
/// The only nonzero pairings are Omega(A_a, S_a) = c_a lambda_a where
/// c_a is the Killing pairing of X_a and X_{-a}; c_a rescales the
/// paper-normalized weight to this integral basis (the unit-pairing
/// generators are X_a / sqrt(c_a), which exist only over R).
struct TwoForm {
  std::vector<int> theta;
  std::vector<MGenerator> m_basis;
  std::vector<std::vector<Rat>> matrix;  // skew-symmetric, 2m x 2m
};

TwoForm build_two_form(const LieAlgebra& lie, const LambdaSystem& lam);

/// Support of every dominant root is the full simple system.
LemmaReport check_dominant_support(const RootSystem& rs);

/// Orbit of the rank-one subgroup of beta through the base point of
/// theta's flag space: Point iff the full sl(2) of beta sits inside
/// the parabolic subalgebra of theta (complex codimension 0), Sphere
/// iff the codimension is 1. Also verifies that the Borel part
/// span{H_beta, X_beta} always lies in the intersection, and that the
/// codimension-derived answer matches membership of beta in <theta>.
/// Throws std::invalid_argument for non-positive beta and
/// std::logic_error if either internal cross-check fails.
OrbitType check_orbit_type(const LieAlgebra& lie, const std::vector<int>& theta,
                           const Root& beta);

/// Aggregate orbit-type scan over every positive root for one theta.
LemmaReport check_orbit_grid(const LieAlgebra& lie, const std::vector<int>& theta);

/// Root-arithmetic and structure-constant facts around the highest
/// root mu: for every root beta orthogonal to mu, mu +- beta are not
/// roots and [X_{+-mu}, X_beta] = 0 (both read independently and
/// compared), and the centralizer of H_mu normalizes the sl(2) of mu.
LemmaReport check_highest_root_centralizer(const LieAlgebra& lie);

/// For a dominant root mu: mu(H_mu) equals the Killing square of H_mu
/// and is positive; every root with a positive value on H_mu is a
/// positive root; and X_mu is an ad(H_mu) eigenvector with eigenvalue
/// mu(H_mu). Throws std::invalid_argument for non-dominant mu.
LemmaReport check_eigenspace_positivity(const LieAlgebra& lie, const Root& mu);

/// Checks a prescribed two-form (possibly tampered) against the
/// algebra: (i) infinitesimal isotropy invariance
/// Omega([Z,X]_m, Y) + Omega(X, [Z,Y]_m) = 0 for Z ranging over the
/// compact isotropy generators (iH_j and A_g, S_g for g in
/// <theta> inter Pi+) and X, Y over m; (ii) closedness cyclic sum
/// Omega([X,Y]_m, Z) + Omega([Y,Z]_m, X) + Omega([Z,X]_m, Y) = 0 over
/// all basis triples. [.,.]_m drops the isotropy component. Exact.
LemmaReport check_omega_form(const LieAlgebra& lie, const TwoForm& form);

/// Builds the two-form of lam and runs check_omega_form. Rejects a
/// weight system whose domain does not match lie's root system or
/// whose values are not positive (std::invalid_argument).
LemmaReport check_omega(const LieAlgebra& lie, const LambdaSystem& lam);

/// Parameter grid: families lo..hi, all valid ranks in
/// min_rank..max_rank, optionally every theta subset. Parsed from
/// strings like "type=A..G,rank<=4,theta=all" or "type=B3,theta=all"
/// (a bare type pins both the family and the rank).
struct GridSpec {
  char family_lo = 'A';
  char family_hi = 'G';
  int min_rank = 1;
  int max_rank = 4;
  bool all_theta = true;

  static GridSpec parse(const std::string& text);
  std::vector<DynkinType> types() const;
};

/// Every check above over the grid, deterministic order: per type,
/// dominant-support, eigenspace-positivity per dominant root,
/// highest-root-centralizer, then per theta subset (bitmask order)
/// lambda-system, omega, orbit-grid. Failures are collected in the
/// reports, never thrown.
std::vector<LemmaReport> run_all(const GridSpec& grid);

}  // namespace lie::lab
