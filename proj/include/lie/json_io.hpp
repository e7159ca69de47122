#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lie/chevalley.hpp"
#include "lie/controllability.hpp"
#include "lie/elements.hpp"
#include "lie/lemma_lab.hpp"
#include "lie/policy.hpp"
#include "lie/rootsys.hpp"
#include "lie/scalar.hpp"

namespace lie::io {

/// All documents use insertion-ordered JSON so serialized field order
/// is canonical: dumping, parsing and dumping again is byte-identical.
using Json = nlohmann::ordered_json;

/// Rejected input document. what() is "<path>: <message>" where path
/// locates the offending node ("/A/roots/[1,0]", "/algebra/rank", ...).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Complex scalar as a [re, im] pair. Exact mode renders rationals as
/// strings ("3/2"); numeric mode renders IEEE doubles. Parsing accepts
/// either representation in either mode (numbers are read exactly as
/// the dyadic rationals they are).
Json cx_to_json(const Cx& z, bool exact);
Cx cx_from_json(const Json& node, const std::string& path);

/// Element document {"cartan": [[re,im] x rank], "roots": {"[n1,..,nl]":
/// [re,im], ...}}. Only coordinates with nonzero representation are
/// written, in basis order, so output is canonical and lossless even
/// for below-tolerance values.
Json element_to_json(const AlgebraElement& x);
Json coords_to_json(const LieAlgebra& lie, const std::vector<Cx>& coords, bool exact);
AlgebraElement element_from_json(const LieAlgebra& lie, const Json& node,
                                 const TolerancePolicy& policy, const std::string& path);

/// "exact" or the epsilon as a number.
Json tolerance_to_json(const TolerancePolicy& policy);
TolerancePolicy tolerance_from_json(const Json& node, const std::string& path);

/// Reads the {"type": ..., "rank": ...} descriptor under /algebra of a
/// system document. type may be a family letter ("A", rank required) or
/// a full label ("A2", rank optional but checked).
DynkinType system_type(const Json& doc);

/// Full system document {"algebra": {...}, "A": <element>, "B":
/// <element>, "tolerance": 1e-9 | "exact"}; tolerance defaults to
/// exact. The algebra descriptor must match `lie`.
ctrl::SystemSpec system_from_json(const LieAlgebra& lie, const Json& doc);
Json system_to_json(const ctrl::SystemSpec& sys);

/// Certificate document with stable field order: verdict, theorem,
/// witness, checklist, larc (including the closure basis rows as
/// element documents), flags, inference.
Json certificate_to_json(const LieAlgebra& lie, const ctrl::Certificate& cert,
                         const TolerancePolicy& policy);

/// Spectrum document: nonzero eigenvalues with multiplicities plus the
/// kernel dimension.
Json spectrum_to_json(const Spectrum& spec, bool exact);

/// Lemma reports, singly and as the deterministic array run_all yields.
Json report_to_json(const lab::LemmaReport& rep);
Json reports_to_json(const std::vector<lab::LemmaReport>& reps);

}  // namespace lie::io
