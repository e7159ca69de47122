#include "lie/json_io.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lie::io {
namespace {

const Json& need(const Json& node, const char* key, const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  auto it = node.find(key);
  if (it == node.end()) throw ParseError(path + "/" + key, "missing field");
  return *it;
}

void reject_unknown(const Json& node, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  if (!node.is_object()) throw ParseError(path, "expected an object");
  for (const auto& item : node.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ParseError(path + "/" + item.key(), "unknown field");
  }
}

Rat rat_from_node(const Json& node, const std::string& path) {
  if (node.is_string()) {
    try {
      return rat_from_string(node.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  if (node.is_number()) return rat_from_double(node.get<double>());
  throw ParseError(path, "expected a number or a rational string");
}

Json rat_to_node(const Rat& r, bool exact) {
  if (exact) return Json(rat_to_string(r));
  return Json(r.get_d());
}

}  // namespace

Json cx_to_json(const Cx& z, bool exact) {
  Json pair = Json::array();
  pair.push_back(rat_to_node(z.re, exact));
  pair.push_back(rat_to_node(z.im, exact));
  return pair;
}

Cx cx_from_json(const Json& node, const std::string& path) {
  if (!node.is_array() || node.size() != 2) {
    throw ParseError(path, "expected a [re, im] pair");
  }
  return Cx(rat_from_node(node[0], path + "/0"), rat_from_node(node[1], path + "/1"));
}

Json coords_to_json(const LieAlgebra& lie, const std::vector<Cx>& coords, bool exact) {
  if (static_cast<int>(coords.size()) != lie.dim()) {
    throw std::invalid_argument("coordinate vector does not match the algebra dimension");
  }
  Json out = Json::object();
  Json cartan = Json::array();
  for (int j = 0; j < lie.rank(); ++j) cartan.push_back(cx_to_json(coords[j], exact));
  out["cartan"] = std::move(cartan);
  Json roots = Json::object();
  for (const Root& beta : lie.roots().all_roots()) {
    const Cx& z = coords[lie.x_index(beta)];
    if (!z.is_zero()) roots[beta.to_string()] = cx_to_json(z, exact);
  }
  out["roots"] = std::move(roots);
  return out;
}

Json element_to_json(const AlgebraElement& x) {
  if (x.algebra == nullptr) throw std::invalid_argument("element has no algebra");
  return coords_to_json(*x.algebra, x.coords, x.policy.exact);
}

AlgebraElement element_from_json(const LieAlgebra& lie, const Json& node,
                                 const TolerancePolicy& policy, const std::string& path) {
  reject_unknown(node, {"cartan", "roots"}, path);
  const Json& cartan = need(node, "cartan", path);
  if (!cartan.is_array() || static_cast<int>(cartan.size()) != lie.rank()) {
    throw ParseError(path + "/cartan", "expected an array of " + std::to_string(lie.rank()) +
                                           " coordinate pairs");
  }
  AlgebraElement x = lie.zero_element();
  x.policy = policy;
  for (int j = 0; j < lie.rank(); ++j) {
    x.coords[j] = cx_from_json(cartan[j], path + "/cartan/" + std::to_string(j));
  }
  const Json& roots = need(node, "roots", path);
  if (!roots.is_object()) throw ParseError(path + "/roots", "expected an object");
  for (const auto& item : roots.items()) {
    const std::string key_path = path + "/roots/" + item.key();
    Root beta;
    try {
      beta = Root::parse(item.key());
    } catch (const std::invalid_argument& e) {
      throw ParseError(key_path, e.what());
    }
    if (lie.roots().root_index(beta) < 0) {
      throw ParseError(key_path, "not a root of " + lie.roots().type().to_string());
    }
    x.coords[lie.x_index(beta)] = cx_from_json(item.value(), key_path);
  }
  return x;
}

Json tolerance_to_json(const TolerancePolicy& policy) {
  if (policy.exact) return Json("exact");
  return Json(policy.eps.get_d());
}

TolerancePolicy tolerance_from_json(const Json& node, const std::string& path) {
  if (node.is_string()) {
    if (node.get<std::string>() == "exact") return TolerancePolicy::exact_mode();
    throw ParseError(path, "expected \"exact\" or a positive number");
  }
  if (node.is_number()) {
    double eps = node.get<double>();
    if (!(eps > 0)) throw ParseError(path, "tolerance must be positive");
    return TolerancePolicy::numeric(eps);
  }
  throw ParseError(path, "expected \"exact\" or a positive number");
}

DynkinType system_type(const Json& doc) {
  const Json& alg = need(doc, "algebra", "");
  reject_unknown(alg, {"type", "rank"}, "/algebra");
  const Json& type_node = need(alg, "type", "/algebra");
  if (!type_node.is_string()) throw ParseError("/algebra/type", "expected a string");
  std::string label = type_node.get<std::string>();
  int rank = -1;
  if (alg.contains("rank")) {
    const Json& rank_node = alg["rank"];
    if (!rank_node.is_number_integer()) throw ParseError("/algebra/rank", "expected an integer");
    rank = rank_node.get<int>();
  }
  try {
    if (label.size() == 1) {
      if (rank < 0) throw ParseError("/algebra/rank", "missing field");
      return DynkinType(label[0], rank);
    }
    DynkinType parsed = DynkinType::parse(label);
    if (rank >= 0 && rank != parsed.rank) {
      throw ParseError("/algebra/rank",
                       "rank " + std::to_string(rank) + " contradicts type " + label);
    }
    return parsed;
  } catch (const std::invalid_argument& e) {
    throw ParseError("/algebra/type", e.what());
  }
}

ctrl::SystemSpec system_from_json(const LieAlgebra& lie, const Json& doc) {
  reject_unknown(doc, {"algebra", "A", "B", "tolerance"}, "");
  DynkinType type = system_type(doc);
  if (!(type == lie.roots().type())) {
    throw ParseError("/algebra", "document is for " + type.to_string() +
                                     " but the session algebra is " +
                                     lie.roots().type().to_string());
  }
  TolerancePolicy policy = TolerancePolicy::exact_mode();
  if (doc.contains("tolerance")) policy = tolerance_from_json(doc["tolerance"], "/tolerance");
  ctrl::SystemSpec sys;
  sys.lie = &lie;
  sys.policy = policy;
  sys.A = element_from_json(lie, need(doc, "A", ""), policy, "/A");
  sys.B = element_from_json(lie, need(doc, "B", ""), policy, "/B");
  return sys;
}

Json system_to_json(const ctrl::SystemSpec& sys) {
  if (sys.lie == nullptr) throw std::invalid_argument("system has no algebra");
  Json out = Json::object();
  Json alg = Json::object();
  alg["type"] = std::string(1, sys.lie->roots().type().family);
  alg["rank"] = sys.lie->roots().type().rank;
  out["algebra"] = std::move(alg);
  out["A"] = coords_to_json(*sys.lie, sys.A.coords, sys.policy.exact);
  out["B"] = coords_to_json(*sys.lie, sys.B.coords, sys.policy.exact);
  out["tolerance"] = tolerance_to_json(sys.policy);
  return out;
}

Json certificate_to_json(const LieAlgebra& lie, const ctrl::Certificate& cert,
                         const TolerancePolicy& policy) {
  Json out = Json::object();
  out["verdict"] = ctrl::to_string(cert.verdict);
  out["theorem"] = cert.theorem_used.empty() ? Json() : Json(cert.theorem_used);
  out["witness"] = cert.witness_root ? Json(cert.witness_root->to_string()) : Json();
  Json checklist = Json::array();
  for (const auto& item : cert.checklist) {
    Json entry = Json::object();
    entry["condition"] = item.condition;
    entry["passed"] = item.passed;
    entry["evidence"] = item.evidence;
    checklist.push_back(std::move(entry));
  }
  out["checklist"] = std::move(checklist);
  Json larc = Json::object();
  larc["generated_dim"] = cert.larc.generated_dim;
  larc["dim_g"] = cert.larc.dim_g;
  larc["trace"] = cert.larc.trace;
  Json basis = Json::array();
  for (const auto& row : cert.larc.basis) {
    basis.push_back(coords_to_json(lie, row, policy.exact));
  }
  larc["basis"] = std::move(basis);
  out["larc"] = std::move(larc);
  out["flags"] = cert.confidence_flags;
  out["inference"] = cert.inference;
  return out;
}

Json spectrum_to_json(const Spectrum& spec, bool exact) {
  Json out = Json::object();
  Json entries = Json::array();
  for (const auto& e : spec.entries) {
    Json entry = Json::object();
    entry["value"] = cx_to_json(e.value, exact);
    entry["multiplicity"] = e.multiplicity;
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  out["kernel_dim"] = spec.kernel_dim;
  return out;
}

Json report_to_json(const lab::LemmaReport& rep) {
  Json out = Json::object();
  out["lemma"] = rep.lemma;
  out["algebra"] = rep.algebra;
  out["params"] = rep.params;
  out["pass"] = rep.pass;
  out["counterexample"] = rep.counterexample;
  return out;
}

Json reports_to_json(const std::vector<lab::LemmaReport>& reps) {
  Json out = Json::array();
  for (const auto& rep : reps) out.push_back(report_to_json(rep));
  return out;
}

}  // namespace lie::io
