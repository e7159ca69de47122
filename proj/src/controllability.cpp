#include "lie/controllability.hpp"

#include <algorithm>
#include <stdexcept>

#include "lie/elements.hpp"
#include "lie/linalg.hpp"

namespace lie::ctrl {

namespace {

const LieAlgebra& validate(const SystemSpec& sys) {
  if (sys.lie == nullptr) throw std::invalid_argument("system has no algebra");
  const LieAlgebra& g = *sys.lie;
  if (static_cast<int>(sys.A.coords.size()) != g.dim() ||
      static_cast<int>(sys.B.coords.size()) != g.dim())
    throw std::invalid_argument("system element coordinates do not match the algebra dimension");
  if ((sys.A.algebra && sys.A.algebra != &g) || (sys.B.algebra && sys.B.algebra != &g))
    throw std::invalid_argument("A and B must belong to the system's algebra");
  return g;
}

Rat system_norm(const SystemSpec& sys) {
  Rat na = inf_norm(sys.A.coords);
  Rat nb = inf_norm(sys.B.coords);
  return na > nb ? na : nb;
}

std::string root_eval_evidence(const Root& beta, const Cx& value) {
  return beta.to_string() + "(B) = " + cx_to_string(value);
}

/// beta(B) for every root, in all_roots() order.
std::vector<Cx> spectrum_values(const LieAlgebra& g, const SystemSpec& sys) {
  std::vector<Cx> vals;
  vals.reserve(g.roots().all_roots().size());
  CartanVector h = cartan_part(sys.B);
  for (const Root& beta : g.roots().all_roots()) vals.push_back(g.root_eval(beta, h));
  return vals;
}

struct CandidateResult {
  bool passed = false;
  // Evidence of the first failing condition, or the full passing
  // checklist.
  std::string fail_evidence;
  std::vector<ChecklistItem> items;
};

CandidateResult imaginary_candidate(const LieAlgebra& g, const SystemSpec& sys,
                                    const std::vector<Cx>& vals, size_t r, const Rat& norm,
                                    FlagSink sink) {
  const auto& all = g.roots().all_roots();
  const Root& alpha = all[r];
  CandidateResult res;
  if (is_zero_scalar(vals[r], sys.policy, norm, sink, alpha.to_string() + "(B)")) {
    res.fail_evidence = root_eval_evidence(alpha, vals[r]) + " vanishes";
    return res;
  }
  const Cx& ap = sys.A.coords[g.x_index(alpha)];
  const Cx& am = sys.A.coords[g.x_index(-alpha)];
  if (is_zero_scalar(ap, sys.policy, norm, sink, "A-coefficient at " + alpha.to_string()) ||
      is_zero_scalar(am, sys.policy, norm, sink, "A-coefficient at " + (-alpha).to_string())) {
    res.fail_evidence = "A-coefficients at " + alpha.to_string() + ", " + (-alpha).to_string() +
                        " are " + cx_to_string(ap) + ", " + cx_to_string(am);
    return res;
  }
  for (size_t s = 0; s < all.size(); ++s) {
    if (s == r) continue;
    if (is_zero_scalar(sys.A.coords[g.x_index(all[s])], sys.policy, norm, sink,
                       "A-coefficient at " + all[s].to_string()))
      continue;
    if (scalars_equal(vals[s], vals[r], sys.policy, norm, sink,
                      all[s].to_string() + "(B) vs " + alpha.to_string() + "(B)")) {
      res.fail_evidence = root_eval_evidence(all[s], vals[s]) + " collides with " +
                          root_eval_evidence(alpha, vals[r]);
      return res;
    }
  }
  res.passed = true;
  res.items.push_back({"alpha(B)-nonzero", true, root_eval_evidence(alpha, vals[r])});
  res.items.push_back({"A-pair-nonzero", true,
                       "A-coefficients " + cx_to_string(ap) + " at " + alpha.to_string() + ", " +
                           cx_to_string(am) + " at " + (-alpha).to_string()});
  res.items.push_back({"eigenvalue-separated", true,
                       "beta(B) != " + cx_to_string(vals[r]) +
                           " for every other root beta with a nonzero A-coefficient"});
  return res;
}

CandidateResult real_candidate(const LieAlgebra& g, const SystemSpec& sys,
                               const std::vector<Cx>& vals, size_t r, const Rat& norm,
                               FlagSink sink) {
  const auto& all = g.roots().all_roots();
  const Root& alpha = all[r];
  CandidateResult res;
  Rat re = vals[r].re;
  if (re < 0 || is_zero_scalar(Cx(re), sys.policy, norm, sink,
                               "real part of " + alpha.to_string() + "(B)")) {
    res.fail_evidence = "Re " + root_eval_evidence(alpha, vals[r]) + " is not positive";
    return res;
  }
  if (is_zero_scalar(Cx(vals[r].im), sys.policy, norm, sink,
                     "imaginary part of " + alpha.to_string() + "(B)")) {
    res.fail_evidence = root_eval_evidence(alpha, vals[r]) + " has zero imaginary part";
    return res;
  }
  const Cx& ap = sys.A.coords[g.x_index(alpha)];
  const Cx& am = sys.A.coords[g.x_index(-alpha)];
  if (is_zero_scalar(ap, sys.policy, norm, sink, "A-coefficient at " + alpha.to_string()) ||
      is_zero_scalar(am, sys.policy, norm, sink, "A-coefficient at " + (-alpha).to_string())) {
    res.fail_evidence = "A-coefficients at " + alpha.to_string() + ", " + (-alpha).to_string() +
                        " are " + cx_to_string(ap) + ", " + cx_to_string(am);
    return res;
  }
  size_t neg = static_cast<size_t>(g.roots().root_index(-alpha));
  for (size_t s = 0; s < all.size(); ++s) {
    if (s == r || s == neg) continue;
    if (is_zero_scalar(sys.A.coords[g.x_index(all[s])], sys.policy, norm, sink,
                       "A-coefficient at " + all[s].to_string()))
      continue;
    // Strictly inside the open band: -Re alpha(B) < Re gamma(B) < Re alpha(B).
    Rat hi_gap = re - vals[s].re;
    Rat lo_gap = vals[s].re + re;
    if (hi_gap < 0 || lo_gap < 0 ||
        is_zero_scalar(Cx(hi_gap), sys.policy, norm, sink,
                       "band edge at " + all[s].to_string()) ||
        is_zero_scalar(Cx(lo_gap), sys.policy, norm, sink,
                       "band edge at " + all[s].to_string())) {
      res.fail_evidence = "A-coefficient " + cx_to_string(sys.A.coords[g.x_index(all[s])]) +
                          " at " + all[s].to_string() + " with Re " +
                          root_eval_evidence(all[s], vals[s]) +
                          " not strictly inside the band of " + alpha.to_string();
      return res;
    }
  }
  res.passed = true;
  res.items.push_back({"Re-alpha(B)-positive", true, root_eval_evidence(alpha, vals[r])});
  res.items.push_back({"Im-alpha(B)-nonzero", true,
                       "Im " + alpha.to_string() + "(B) = " + cx_to_string(Cx(vals[r].im))});
  res.items.push_back({"A-pair-nonzero", true,
                       "A-coefficients " + cx_to_string(ap) + " at " + alpha.to_string() + ", " +
                           cx_to_string(am) + " at " + (-alpha).to_string()});
  res.items.push_back({"A-support-in-open-band", true,
                       "every other root with a nonzero A-coefficient has Re gamma(B) in (" +
                           cx_to_string(Cx(-re)) + ", " + cx_to_string(Cx(re)) + ")"});
  return res;
}

bool gate_in_cartan(const SystemSpec& sys, CertificateFragment& frag, FlagSink sink) {
  AlgebraElement b = sys.B;
  b.policy = sys.policy;
  if (!is_in_cartan(b, sink)) {
    frag.checklist.push_back({"B-in-cartan", false, "B has a nonzero root-space coordinate"});
    return false;
  }
  frag.checklist.push_back({"B-in-cartan", true, "all root-space coordinates of B vanish"});
  return true;
}

/// True iff Re beta(B) vanishes (under policy) for every root.
bool spectrum_is_imaginary(const LieAlgebra& g, const SystemSpec& sys,
                           const std::vector<Cx>& vals, const Rat& norm, FlagSink sink) {
  const auto& all = g.roots().all_roots();
  for (size_t r = 0; r < all.size(); ++r)
    if (!is_zero_scalar(Cx(vals[r].re), sys.policy, norm, sink,
                        "real part of " + all[r].to_string() + "(B)"))
      return false;
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CONTROLLABLE: return "CONTROLLABLE";
    case Verdict::NOT_CONTROLLABLE: return "NOT_CONTROLLABLE";
    case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    case Verdict::NOT_APPLICABLE: return "NOT_APPLICABLE";
  }
  return "INCONCLUSIVE";
}

LarcResult larc_closure(const SystemSpec& sys) {
  const LieAlgebra& g = validate(sys);
  LarcResult out;
  out.dim_g = g.dim();
  FlagSink sink(&out.flags);
  SpanBuilder span(g.dim(), sys.policy, system_norm(sys), sink);
  span.insert(sys.A.coords);
  span.insert(sys.B.coords);
  out.trace.push_back(span.rank());
  // Sweep pairwise brackets of the current canonical basis until the
  // rank stops growing. Each sweep brackets a frozen snapshot, so the
  // loop adds at least one dimension per iteration or stops.
  while (true) {
    auto rows = span.basis();
    bool grew = false;
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = i + 1; j < rows.size(); ++j)
        if (span.insert(g.bracket(rows[i], rows[j]))) grew = true;
    out.trace.push_back(span.rank());
    if (!grew) break;
  }
  out.generated_dim = span.rank();
  out.basis = span.basis();
  return out;
}

CertificateFragment check_imaginary_case(const SystemSpec& sys) {
  const LieAlgebra& g = validate(sys);
  CertificateFragment frag;
  frag.theorem = "imaginary-case";
  FlagSink sink(&frag.flags);
  Rat norm = system_norm(sys);
  if (!gate_in_cartan(sys, frag, sink)) return frag;

  std::vector<Cx> vals = spectrum_values(g, sys);
  if (!spectrum_is_imaginary(g, sys, vals, norm, sink)) {
    frag.checklist.push_back(
        {"spectrum-imaginary", false, "some root value on B has a nonzero real part"});
    return frag;
  }
  frag.checklist.push_back({"spectrum-imaginary", true, "Re beta(B) = 0 over all roots"});
  frag.applicable = true;

  const auto& all = g.roots().all_roots();
  for (size_t r = 0; r < all.size(); ++r) {
    CandidateResult res = imaginary_candidate(g, sys, vals, r, norm, sink);
    if (!res.passed) {
      frag.checklist.push_back({"candidate " + all[r].to_string(), false, res.fail_evidence});
      continue;
    }
    frag.passed = true;
    frag.witness = all[r];
    for (ChecklistItem& item : res.items) frag.checklist.push_back(std::move(item));
    return frag;
  }
  return frag;
}

CertificateFragment check_real_case(const SystemSpec& sys) {
  const LieAlgebra& g = validate(sys);
  CertificateFragment frag;
  frag.theorem = "real-case";
  FlagSink sink(&frag.flags);
  Rat norm = system_norm(sys);
  if (!gate_in_cartan(sys, frag, sink)) return frag;

  std::vector<Cx> vals = spectrum_values(g, sys);
  if (spectrum_is_imaginary(g, sys, vals, norm, sink)) {
    frag.checklist.push_back({"B-real-part-nonzero", false, "Re beta(B) = 0 over all roots"});
    return frag;
  }
  frag.checklist.push_back({"B-real-part-nonzero", true, "some Re beta(B) is nonzero"});
  frag.applicable = true;

  const auto& all = g.roots().all_roots();
  for (size_t r = 0; r < all.size(); ++r) {
    CandidateResult res = real_candidate(g, sys, vals, r, norm, sink);
    if (!res.passed) {
      frag.checklist.push_back({"candidate " + all[r].to_string(), false, res.fail_evidence});
      continue;
    }
    frag.passed = true;
    frag.witness = all[r];
    for (ChecklistItem& item : res.items) frag.checklist.push_back(std::move(item));
    return frag;
  }
  return frag;
}

bool root_certifies_imaginary(const SystemSpec& sys, const Root& alpha) {
  const LieAlgebra& g = validate(sys);
  int r = g.roots().root_index(alpha);
  if (r < 0)
    throw std::invalid_argument("not a root of the system's algebra: " + alpha.to_string());
  std::vector<Cx> vals = spectrum_values(g, sys);
  return imaginary_candidate(g, sys, vals, static_cast<size_t>(r), system_norm(sys), FlagSink())
      .passed;
}

bool root_certifies_real(const SystemSpec& sys, const Root& alpha) {
  const LieAlgebra& g = validate(sys);
  int r = g.roots().root_index(alpha);
  if (r < 0)
    throw std::invalid_argument("not a root of the system's algebra: " + alpha.to_string());
  std::vector<Cx> vals = spectrum_values(g, sys);
  return real_candidate(g, sys, vals, static_cast<size_t>(r), system_norm(sys), FlagSink())
      .passed;
}

Certificate decide(const SystemSpec& sys) {
  const LieAlgebra& g = validate(sys);
  Certificate cert;
  FlagSink sink(&cert.confidence_flags);
  Rat norm = system_norm(sys);

  AlgebraElement b = sys.B;
  b.policy = sys.policy;
  if (!is_in_cartan(b, sink)) {
    cert.verdict = Verdict::NOT_APPLICABLE;
    cert.checklist.push_back(
        {"B-in-cartan", false,
         "B has a nonzero root-space coordinate; the checkers need B in the Cartan subalgebra"});
    cert.larc.dim_g = g.dim();
    return cert;
  }
  cert.checklist.push_back({"B-in-cartan", true, "all root-space coordinates of B vanish"});

  cert.larc = larc_closure(sys);
  for (const std::string& f : cert.larc.flags) cert.confidence_flags.push_back(f);
  if (cert.larc.generated_dim < cert.larc.dim_g) {
    cert.verdict = Verdict::NOT_CONTROLLABLE;
    cert.checklist.push_back(
        {"rank-condition", false,
         "brackets of {A, B} generate a proper subspace of dimension " +
             std::to_string(cert.larc.generated_dim) + " < " + std::to_string(cert.larc.dim_g)});
    cert.inference.push_back("the reachable set stays inside the proper connected subgroup of "
                             "the bracket closure of {A, B}");
    if (sys.policy.exact) {
      // Independent re-verification that the reported subspace is
      // bracket-closed (throws on failure).
      std::vector<AlgebraElement> rows;
      for (const auto& row : cert.larc.basis) {
        AlgebraElement e = g.zero_element();
        e.coords = row;
        rows.push_back(std::move(e));
      }
      make_verified_subalgebra(g, std::move(rows), "larc-closure");
    }
    return cert;
  }
  cert.checklist.push_back({"rank-condition", true,
                            "brackets of {A, B} generate the full algebra, dimension " +
                                std::to_string(cert.larc.dim_g)});

  std::vector<Cx> vals = spectrum_values(g, sys);
  bool imaginary = spectrum_is_imaginary(g, sys, vals, norm, sink);
  CertificateFragment frag = imaginary ? check_imaginary_case(sys) : check_real_case(sys);
  for (const std::string& f : frag.flags) cert.confidence_flags.push_back(f);
  for (const ChecklistItem& item : frag.checklist) cert.checklist.push_back(item);

  if (frag.passed) {
    cert.verdict = Verdict::CONTROLLABLE;
    cert.witness_root = frag.witness;
    cert.theorem_used = frag.theorem;
    const std::string w = frag.witness->to_string();
    cert.inference.push_back("conditions of the " + frag.theorem + " checklist hold at " + w);
    cert.inference.push_back("=> the flow of ad(B) isolates the A-components at " + w + " and " +
                             (-*frag.witness).to_string() +
                             ", so both root spaces lie in the system's Lie wedge");
    cert.inference.push_back("=> the rank-one subgroup generated by those root spaces lies in "
                             "the closure of the system semigroup");
    cert.inference.push_back(
        "=> the invariant control set of that subgroup is every full flag manifold, so with "
        "the rank condition the system semigroup is the whole group");
  } else {
    cert.verdict = Verdict::INCONCLUSIVE;
    cert.inference.push_back(
        "no witness root satisfied a full sufficiency checklist; the conditions are "
        "sufficient, not necessary");
  }

  bool low_confidence = false;
  for (const std::string& f : cert.confidence_flags)
    if (f.rfind("LOW_CONFIDENCE", 0) == 0) low_confidence = true;
  if (low_confidence && cert.verdict == Verdict::CONTROLLABLE) {
    cert.verdict = Verdict::INCONCLUSIVE;
    cert.confidence_flags.push_back(
        "DOWNGRADED verdict CONTROLLABLE -> INCONCLUSIVE: a comparison fell in the "
        "low-confidence band");
  }
  return cert;
}

}  // namespace lie::ctrl
