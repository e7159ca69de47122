#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie/chevalley.hpp"
#include "lie/policy.hpp"
#include "lie/rootsys.hpp"
#include "lie/scalar.hpp"

namespace lie::ctrl {

/// Bilinear system dg = (A + u B) g on the group of the given algebra,
/// with a scalar unrestricted control u. All zero/equality decisions in
/// the checkers run through `policy`.
struct SystemSpec {
  const LieAlgebra* lie = nullptr;
  AlgebraElement A;
  AlgebraElement B;
  TolerancePolicy policy = TolerancePolicy::exact_mode();
};

enum class Verdict { CONTROLLABLE, NOT_CONTROLLABLE, INCONCLUSIVE, NOT_APPLICABLE };

std::string to_string(Verdict v);

/// One audited condition: a stable id, the outcome, and the exact
/// scalars that were compared (re-evaluating them from the system
/// reproduces the string).
struct ChecklistItem {
  std::string condition;
  bool passed = false;
  std::string evidence;
};

/// Bracket-closure result: the smallest bracket-closed subspace
/// containing {A, B}.
struct LarcResult {
  int generated_dim = 0;
  int dim_g = 0;
  std::vector<int> trace;               // rank after each sweep (first: after seeding)
  std::vector<std::vector<Cx>> basis;   // canonical row basis of the closure
  std::vector<std::string> flags;
};

/// Outcome of one sufficiency theorem's scan.
struct CertificateFragment {
  std::string theorem;  // "imaginary-case" or "real-case"
  bool applicable = false;
  bool passed = false;
  std::optional<Root> witness;
  std::vector<ChecklistItem> checklist;
  std::vector<std::string> flags;
};

struct Certificate {
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::optional<Root> witness_root;
  std::string theorem_used;  // empty unless a theorem's checklist passed
  std::vector<ChecklistItem> checklist;
  LarcResult larc;
  std::vector<std::string> confidence_flags;
  /// For CONTROLLABLE: the inference chain from the witness conditions
  /// to controllability, one step per line.
  std::vector<std::string> inference;
};

/// Smallest bracket-closed subspace containing {A, B}: seed a span with
/// A and B, then sweep pairwise brackets of the current basis until the
/// rank is stable. Exact rank in exact mode, rank-with-tolerance under
/// a numeric policy (borderline pivots flagged).
LarcResult larc_closure(const SystemSpec& sys);

/// Sufficiency scan for ad(B) with purely imaginary spectrum.
/// Applicable when B is in h and every Re beta(B) vanishes. A root
/// alpha certifies when alpha(B) != 0, the A-coefficients at alpha and
/// -alpha are both nonzero, and beta(B) != alpha(B) for every other
/// root beta carrying a nonzero A-coefficient. First witness in basis
/// root order wins.
CertificateFragment check_imaginary_case(const SystemSpec& sys);

/// Sufficiency scan for ad(B) with nonvanishing real spectrum part.
/// Applicable when B is in h and B_Re != 0. A root alpha (either sign)
/// certifies when Re alpha(B) > 0, Im alpha(B) != 0, the
/// A-coefficients at +-alpha are both nonzero, and every other root
/// gamma carrying a nonzero A-coefficient has Re gamma(B) strictly
/// inside (-Re alpha(B), Re alpha(B)). These are exactly the
/// hypotheses the flow-limit argument consumes: the band keeps
/// exp(t ad B) A bounded relative to e^{t Re alpha(B)}, strictness
/// kills every A-supported term except A_alpha (t -> +inf) and
/// A_{-alpha} (t -> -inf), and Re alpha(B) > 0 makes the A_{-alpha}
/// term decay in the forward limit. First witness in basis root order
/// wins.
CertificateFragment check_real_case(const SystemSpec& sys);

/// True iff alpha passes the imaginary-case witness conditions for
/// this system (the applicability gate is not included). Exposed so
/// property tests can audit the full witness set, not just the first
/// scan hit.
bool root_certifies_imaginary(const SystemSpec& sys, const Root& alpha);

/// True iff alpha passes the real-case witness conditions for this
/// system (the applicability gate is not included).
bool root_certifies_real(const SystemSpec& sys, const Root& alpha);

/// Full decision: NOT_APPLICABLE when B is not in h; NOT_CONTROLLABLE
/// when the bracket closure of {A, B} is proper (the closure subspace
/// is reported and re-verified); otherwise the case checker selected by
/// the B_Re = 0 test runs, yielding CONTROLLABLE with a witness and an
/// inference chain, or INCONCLUSIVE (the conditions are sufficient
/// only). Any LOW_CONFIDENCE decision downgrades CONTROLLABLE to
/// INCONCLUSIVE, never the reverse.
Certificate decide(const SystemSpec& sys);

}  // namespace lie::ctrl
