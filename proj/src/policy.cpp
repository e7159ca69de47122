#include "lie/policy.hpp"

namespace lie {

bool is_zero_scalar(const Cx& z, const TolerancePolicy& policy, const Rat& input_norm,
                    FlagSink sink, const std::string& context) {
  if (policy.exact) return z.is_zero();
  Rat tau = policy.eps * (Rat(1) + input_norm);
  Rat n2 = z.norm2();
  Rat tau2 = tau * tau;
  bool zero = n2 <= tau2;
  if (!z.is_zero()) {
    // LOW_CONFIDENCE band: tau/1000 <= |z| <= 1000*tau.
    Rat lo2 = tau2 / Rat(1000000);
    Rat hi2 = tau2 * Rat(1000000);
    if (n2 >= lo2 && n2 <= hi2) {
      std::string what = context.empty() ? "comparison" : context;
      sink.add("LOW_CONFIDENCE " + what + ": |value|^2=" + rat_to_string(n2) +
               " near threshold^2=" + rat_to_string(tau2) +
               (zero ? " (treated as zero)" : " (treated as nonzero)"));
    } else if (zero) {
      std::string what = context.empty() ? "comparison" : context;
      sink.add("BELOW_TOLERANCE " + what + ": nonzero representation treated as zero");
    }
  }
  return zero;
}

}  // namespace lie
