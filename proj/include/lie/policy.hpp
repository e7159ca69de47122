#pragma once

#include <string>
#include <vector>

#include "lie/scalar.hpp"

namespace lie {

/// Zero/equality decisions on data that entered the engine as floating
/// point go through this policy: |z| <= eps * (1 + ||input||_inf).
/// Decisions within a factor 10^3 of the threshold are reported as
/// LOW_CONFIDENCE rather than silently resolved. Exact-mode policies
/// never flag and never tolerate.
struct TolerancePolicy {
  bool exact = true;
  Rat eps{0};

  static TolerancePolicy exact_mode() { return TolerancePolicy{}; }
  static TolerancePolicy numeric(double epsilon) {
    TolerancePolicy p;
    p.exact = false;
    p.eps = rat_from_double(epsilon);
    return p;
  }
  static TolerancePolicy numeric(Rat epsilon) {
    TolerancePolicy p;
    p.exact = false;
    p.eps = std::move(epsilon);
    return p;
  }

  bool operator==(const TolerancePolicy& o) const { return exact == o.exact && eps == o.eps; }
};

/// Collects confidence flags raised during a computation. A null sink
/// drops them.
class FlagSink {
 public:
  FlagSink() = default;
  explicit FlagSink(std::vector<std::string>* out) : out_(out) {}
  void add(std::string flag) {
    if (out_ != nullptr) out_->push_back(std::move(flag));
  }
  std::vector<std::string>* target() const { return out_; }

 private:
  std::vector<std::string>* out_ = nullptr;
};

/// Is z zero under the policy, relative to the given input magnitude?
/// Flags LOW_CONFIDENCE when |z| lands within a factor 10^3 of the
/// threshold (numeric mode only). `context` names the decision in flags.
bool is_zero_scalar(const Cx& z, const TolerancePolicy& policy, const Rat& input_norm,
                    FlagSink sink = FlagSink(), const std::string& context = "");

inline bool scalars_equal(const Cx& a, const Cx& b, const TolerancePolicy& policy,
                          const Rat& input_norm, FlagSink sink = FlagSink(),
                          const std::string& context = "") {
  return is_zero_scalar(a - b, policy, input_norm, std::move(sink), context);
}

}  // namespace lie
