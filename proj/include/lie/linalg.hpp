#pragma once

#include <vector>

#include "lie/policy.hpp"
#include "lie/scalar.hpp"

namespace lie {

/// Incremental reduced row echelon form over Gaussian rationals.
/// Rows are kept mutually reduced with unit pivots, so basis() is the
/// canonical basis of the row space and is reproducible bit-for-bit.
///
/// Under a numeric policy, entries that the policy decides are zero
/// (relative to the norm fixed at construction) are dropped before
/// pivot selection; this is the "rank with tolerance" used by the
/// closure computations on floating-point inputs.
class SpanBuilder {
 public:
  explicit SpanBuilder(int ambient_dim, TolerancePolicy policy = TolerancePolicy::exact_mode(),
                       Rat input_norm = Rat(0), FlagSink sink = FlagSink());

  /// Reduces v against the current rows; if a nonzero residual remains
  /// it becomes a new (normalized, back-substituted) row. Returns true
  /// iff the rank grew.
  bool insert(std::vector<Cx> v);

  /// Membership in the current row space.
  bool contains(std::vector<Cx> v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }

  /// Rows ordered by pivot column.
  std::vector<std::vector<Cx>> basis() const;

 private:
  // Eliminates known pivots from v in place; zeroes policy-zero entries.
  void reduce(std::vector<Cx>& v) const;

  int ambient_;
  TolerancePolicy policy_;
  Rat input_norm_;
  FlagSink sink_;
  std::vector<int> pivot_of_row_;        // pivot column of rows_[k]
  std::vector<std::vector<Cx>> rows_;    // kept sorted by pivot column
};

/// dim(span(u_rows) ∩ span(v_rows)) via dim U + dim V - dim(U + V).
int intersection_dim(int ambient_dim, const std::vector<std::vector<Cx>>& u_rows,
                     const std::vector<std::vector<Cx>>& v_rows);

}  // namespace lie
