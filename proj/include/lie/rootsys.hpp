#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lie/scalar.hpp"

namespace lie {

/// Dynkin classification label. Valid pairs: A l>=1, B/C l>=2,
/// D l>=3 (D3 is accepted as an alias of A3), E 6..8, F 4, G 2.
struct DynkinType {
  char family = 'A';
  int rank = 0;

  DynkinType() = default;
  DynkinType(char fam, int rk);

  static bool is_valid(char family, int rank);
  /// Parses "A2", "G2", "E8". Throws std::invalid_argument otherwise.
  static DynkinType parse(const std::string& s);
  std::string to_string() const;

  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
  /// Number of positive roots of the type.
  int positive_root_count() const;
  /// dim of the corresponding simple algebra: rank + 2 * positive count.
  int algebra_dim() const;

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

/// A root in simple-root coordinates: alpha = n_1 a_1 + ... + n_l a_l.
/// Valid roots have all coefficients >= 0 or all <= 0.
struct Root {
  std::vector<int> coeffs;

  Root() = default;
  explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}

  int height() const;  // signed coefficient sum
  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;

  /// Serialization used everywhere: "[n1,...,nl]".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument on bad input.
  static Root parse(const std::string& s);

  friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  /// Height-then-lexicographic order; the deterministic order used for
  /// positive root lists, witness scans and report output.
  friend bool operator<(const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs < b.coeffs;
  }
};

struct WeylElement;

/// Abstract reduced root system built from the Cartan matrix of a
/// Dynkin type (Bourbaki labeling). Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(const DynkinType& type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan(i, j) = <a_i, a_j^v> = 2(a_i,a_j)/(a_j,a_j).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Positive roots in height-then-lex order.
  const std::vector<Root>& positive_roots() const { return positives_; }
  /// Positive roots followed by their negatives, each block height-lex.
  /// This ordering indexes the X part of the Chevalley basis.
  const std::vector<Root>& all_roots() const { return all_; }

  bool is_root(const Root& r) const;
  /// Index into all_roots(), or -1.
  int root_index(const Root& r) const;
  /// Index into positive_roots(); throws if r is not a positive root.
  int positive_index(const Root& r) const;

  /// Normalized invariant form with long roots of squared length 2.
  /// All downstream sign/vanishing/ratio predicates are invariant under
  /// the rescaling between this and the Killing form.
  const std::vector<std::vector<Rat>>& form_matrix() const { return form_; }
  Rat form(const Root& a, const Root& b) const;
  /// <beta, a_i^v>, the integer Cartan pairing against a simple root.
  int cartan_pairing(const Root& beta, int i) const;

  /// r_alpha(beta) = beta - (2<a,b>/<a,a>) a. Inputs must be roots.
  Root reflect(const Root& alpha, const Root& beta) const;

  /// Closure of {alpha} under simple reflections, sorted.
  std::vector<Root> weyl_orbit(const Root& alpha) const;

  /// 0-based indices i with n_i != 0 (against -coeffs for negatives).
  /// Rejects the zero vector.
  std::vector<int> support(const Root& alpha) const;

  /// Roots mu with <mu, a_i> >= 0 for all simple a_i, sorted by height
  /// descending (highest root first). One root for ADE, two otherwise.
  std::vector<Root> dominant_roots() const;
  /// The dominant root of maximal height.
  Root highest_root() const;

  /// Some w in the Weyl group with w(gamma) = beta, or nullopt when the
  /// two roots lie in different orbits.
  std::optional<WeylElement> conjugating_weyl_element(const Root& gamma, const Root& beta) const;

  /// rank x rank integer matrix of the simple reflection r_i acting on
  /// simple-root coordinates.
  std::vector<std::vector<int>> simple_reflection_matrix(int i) const;

  /// <Theta> for a set of 0-based simple indices: roots whose support
  /// (of the positive representative) lies inside theta.
  bool in_theta_span(const Root& r, const std::vector<int>& theta) const;

  void check_root_arg(const Root& r, const char* what) const;

 private:
  RootSystem() = default;

  DynkinType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> form_;
  std::vector<Root> positives_;
  std::vector<Root> all_;
  std::map<std::vector<int>, int> index_;  // coeffs -> index into all_
};

/// Weyl group element as a word in simple reflections plus its integer
/// matrix on root coordinates. word = [i1, i2, ..., ik] acts as
/// r_{ik} ∘ ... ∘ r_{i1}; matrix is the corresponding product.
struct WeylElement {
  std::vector<int> word;
  std::vector<std::vector<int>> matrix;

  static WeylElement identity(int rank);
  Root apply(const Root& r) const;
};

}  // namespace lie
