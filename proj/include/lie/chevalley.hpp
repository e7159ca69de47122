#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie/policy.hpp"
#include "lie/rootsys.hpp"
#include "lie/scalar.hpp"

namespace lie {

class LieAlgebra;

/// Element of the Cartan subalgebra h over the coroot basis {H_1,...,H_l},
/// H_i = a_i^v, so [H_i, X_beta] = <beta, a_i^v> X_beta with integer
/// eigenvalues.
struct CartanVector {
  const LieAlgebra* algebra = nullptr;
  std::vector<Cx> coeffs;
  /// Policy the data was ingested with; decisions about this vector
  /// (vanishing of evaluations etc.) go through it.
  TolerancePolicy policy = TolerancePolicy::exact_mode();
};

/// Element of the full algebra in the fixed basis
/// H_1..H_l (simple coroots), then X_beta over all_roots() order.
struct AlgebraElement {
  const LieAlgebra* algebra = nullptr;
  std::vector<Cx> coords;
  TolerancePolicy policy = TolerancePolicy::exact_mode();
};

/// Bracket-closed subspace with a named role. Construction goes through
/// make_verified_subalgebra, which checks [basis, basis] <= span(basis).
struct Subalgebra {
  const LieAlgebra* parent = nullptr;
  std::vector<AlgebraElement> basis;
  std::string tag;

  int dim() const { return static_cast<int>(basis.size()); }
};

Subalgebra make_verified_subalgebra(const LieAlgebra& parent, std::vector<AlgebraElement> basis,
                                    std::string tag);

/// Complex simple Lie algebra over Gaussian rationals with explicit
/// structure constants. Basis layout: H_1..H_l spanning h (simple
/// coroots), then one X_beta per root beta (positives then negatives,
/// height-lex). Every structure constant is an integer.
///
/// Normalization: [X_a, X_{-a}] = a^v = kappa(X_a, X_{-a}) H_a where
/// kappa(H_a, .) = a(.), and m_{-a,-b} = -m_{a,b}, so the real span of
/// {i H_j, X_a - X_{-a}, i(X_a + X_{-a})} is a compact real form.
/// kappa(X_a, X_{-a}) = 2/(a,a) under the Killing-dual form; it is a
/// positive integer but rarely a perfect square, so the unit-pairing
/// rescale X_a / sqrt(kappa(X_a, X_{-a})) exists over R but not over
/// the rationals. Exact code therefore carries the pairing constants
/// explicitly. Signs of the m_{a,b} follow a fixed deterministic
/// convention; only the identities above and realness of m_{a,b} are
/// contractual.
class LieAlgebra {
 public:
  static LieAlgebra build(const RootSystem& rs);
  static LieAlgebra build(const DynkinType& type) { return build(RootSystem::build(type)); }

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return dim_; }

  /// Basis index of X_beta. Throws for non-roots.
  int x_index(const Root& beta) const;
  /// Basis index of H_{a_i} (just i, bounds-checked).
  int h_index(int i) const;
  /// The root labeling basis slot idx; throws for Cartan slots.
  const Root& root_of_index(int idx) const;
  /// "H1".."Hl", "X[1,0]", ... stable labels used by the dump format.
  std::string basis_label(int idx) const;

  /// Structure constants: [b_i, b_j] = sum_k c_k b_k as (k, c_k) pairs,
  /// sorted by k. All constants are real rationals.
  const std::vector<std::pair<int, Rat>>& bracket_basis(int i, int j) const;
  /// Bracket of coordinate vectors (bilinear extension of the table).
  std::vector<Cx> bracket(const std::vector<Cx>& x, const std::vector<Cx>& y) const;
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Exact Killing form kappa(b_i, b_j) = tr(ad b_i ad b_j). Integer
  /// matrix: a Gram block on h, kappa(X_a, X_{-a}) on opposite root
  /// pairs, zero elsewhere.
  const std::vector<std::vector<Rat>>& killing_matrix() const { return killing_; }
  Cx killing(const std::vector<Cx>& x, const std::vector<Cx>& y) const;

  /// Killing-dual form (a, b) on the root lattice: kappa(H_a, H_b).
  Rat dual_form(const Root& a, const Root& b) const;
  /// Constant ratio between rootsys' normalized form and the dual form:
  /// form(a,b) = ratio * dual_form(a,b) for all roots (= 2 * dual
  /// Coxeter number of the type).
  const Rat& normalized_to_killing_ratio() const { return form_ratio_; }

  /// beta(H) for H = sum_i z_i H_i: sum_i z_i <beta, a_i^v>.
  Cx root_eval(const Root& beta, const std::vector<Cx>& cartan_coeffs) const;
  Cx root_eval(const Root& beta, const CartanVector& h) const {
    return root_eval(beta, h.coeffs);
  }

  /// H_a (the Killing dual of a) as a CartanVector; rational
  /// coordinates, linear in a.
  CartanVector h_alpha(const Root& alpha) const;
  /// a^v = [X_a, X_{-a}] as a CartanVector; integer coordinates
  /// n_i (a_i, a_i)/(a, a) over the coroot basis.
  CartanVector coroot(const Root& alpha) const;
  /// kappa(X_a, X_{-a}) = 2/(a,a), a positive integer.
  Rat killing_pairing(const Root& alpha) const;

  AlgebraElement zero_element() const;
  AlgebraElement basis_element(int idx) const;
  CartanVector zero_cartan() const;
  /// Embeds h coordinates into full-algebra coordinates.
  AlgebraElement embed(const CartanVector& h) const;

  /// Matrix of y -> [x, y], columns indexed by the basis.
  std::vector<std::vector<Cx>> ad_matrix(const AlgebraElement& x) const;

  /// A_a = X_a - X_{-a}, S_a = i(X_a + X_{-a}); alpha must be positive.
  /// [A_a, S_a] = 2i a^v.
  std::pair<AlgebraElement, AlgebraElement> compact_generators(const Root& alpha) const;

  /// span{H_a, X_a, X_{-a}}, an sl(2) copy. alpha any root.
  Subalgebra g_alpha_subalgebra(const Root& alpha) const;
  /// h + all positive root spaces + negative ones with support in theta
  /// (0-based simple indices).
  Subalgebra parabolic(const std::vector<int>& theta) const;
  /// z_H = h + sum of root spaces with beta(H) = 0 (under H's policy;
  /// borderline decisions are flagged through sink).
  Subalgebra centralizer_of_cartan(const CartanVector& h, FlagSink sink = FlagSink()) const;
  /// Sum of root spaces with beta(H) < 0. Requires all evaluations
  /// real; throws otherwise.
  Subalgebra n_minus_of(const CartanVector& h, FlagSink sink = FlagSink()) const;
  /// The Cartan subalgebra as a Subalgebra (tag "h").
  Subalgebra cartan_subalgebra() const;

  /// Automorphism attached to a Weyl word: for each letter i,
  /// exp(ad X_{a_i}) exp(-ad X_{-a_i}) exp(ad X_{a_i}); letters compose
  /// left to right like WeylElement words. Returns a dim x dim integer
  /// matrix (Rat entries) that permutes root spaces according to the
  /// word and maps h by it.
  std::vector<std::vector<Rat>> weyl_automorphism(const std::vector<int>& word) const;

  /// Line-oriented dump of all nonzero constants plus a basis manifest;
  /// byte-stable for a given type.
  void dump_constants(std::ostream& os) const;

 private:
  explicit LieAlgebra(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  int dim_ = 0;
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> table_;  // [i][j] -> entries
  std::vector<std::vector<Rat>> killing_;
  std::vector<std::vector<Rat>> dual_gram_;  // (a_i, a_j) under the Killing dual form
  std::vector<Rat> scale_;                   // H_{a_i} = scale_[i] H_i
  Rat form_ratio_;
};

}  // namespace lie
