#include "lie/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lie {

SpanBuilder::SpanBuilder(int ambient_dim, TolerancePolicy policy, Rat input_norm, FlagSink sink)
    : ambient_(ambient_dim),
      policy_(std::move(policy)),
      input_norm_(std::move(input_norm)),
      sink_(sink) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
}

void SpanBuilder::reduce(std::vector<Cx>& v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Cx& coef = v[pivot_of_row_[k]];
    if (coef.is_zero()) continue;
    Cx c = coef;  // pivot entry of rows_[k] is 1
    const std::vector<Cx>& row = rows_[k];
    for (int j = pivot_of_row_[k]; j < ambient_; ++j) {
      if (!row[j].is_zero()) v[j] -= c * row[j];
    }
  }
  if (!policy_.exact) {
    for (Cx& z : v) {
      if (!z.is_zero() && is_zero_scalar(z, policy_, input_norm_, sink_, "span reduction")) {
        z = Cx(0);
      }
    }
  }
}

bool SpanBuilder::insert(std::vector<Cx> v) {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("vector/ambient dimension mismatch");
  reduce(v);
  int pivot = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  Cx inv = cx_div(Cx(1), v[pivot]);
  for (int j = pivot; j < ambient_; ++j) {
    if (!v[j].is_zero()) v[j] = v[j] * inv;
  }
  // Back-substitute into existing rows so the set stays fully reduced.
  for (size_t k = 0; k < rows_.size(); ++k) {
    Cx c = rows_[k][pivot];
    if (c.is_zero()) continue;
    for (int j = pivot; j < ambient_; ++j) {
      if (!v[j].is_zero()) rows_[k][j] -= c * v[j];
    }
  }
  auto pos = std::upper_bound(pivot_of_row_.begin(), pivot_of_row_.end(), pivot);
  size_t idx = static_cast<size_t>(pos - pivot_of_row_.begin());
  pivot_of_row_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
  return true;
}

bool SpanBuilder::contains(std::vector<Cx> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("vector/ambient dimension mismatch");
  reduce(v);
  for (const Cx& z : v) {
    if (!z.is_zero()) return false;
  }
  return true;
}

std::vector<std::vector<Cx>> SpanBuilder::basis() const {
  return rows_;
}

int intersection_dim(int ambient_dim, const std::vector<std::vector<Cx>>& u_rows,
                     const std::vector<std::vector<Cx>>& v_rows) {
  SpanBuilder u(ambient_dim), v(ambient_dim), sum(ambient_dim);
  for (const auto& r : u_rows) {
    u.insert(r);
    sum.insert(r);
  }
  for (const auto& r : v_rows) {
    v.insert(r);
    sum.insert(r);
  }
  return u.rank() + v.rank() - sum.rank();
}

}  // namespace lie
