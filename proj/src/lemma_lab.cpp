#include "lie/lemma_lab.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lie/linalg.hpp"

namespace lie::lab {
namespace {

std::vector<int> normalize_theta(const RootSystem& rs, std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  for (int i : theta) {
    if (i < 0 || i >= rs.rank()) {
      throw std::invalid_argument("theta index " + std::to_string(i) +
                                  " outside the simple-root range 0.." +
                                  std::to_string(rs.rank() - 1));
    }
  }
  return theta;
}

/// Human label; simple roots are numbered 1..l as in the basis labels.
std::string theta_label(const std::vector<int>& theta) {
  std::string s = "theta={";
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(theta[k] + 1);
  }
  return s + "}";
}

/// "" when the value map is keyed by exactly the positive roots outside
/// <theta>; otherwise a description of the first mismatch.
std::string domain_error(const RootSystem& rs, const LambdaSystem& lam) {
  for (const auto& [r, v] : lam.values) {
    if (rs.root_index(r) < 0 || !r.is_positive()) {
      return "value keyed by " + r.to_string() + ", which is not a positive root";
    }
    if (rs.in_theta_span(r, lam.theta)) {
      return "value keyed by " + r.to_string() + ", which lies in the span of theta";
    }
  }
  for (const Root& r : rs.positive_roots()) {
    if (rs.in_theta_span(r, lam.theta)) continue;
    if (!lam.values.count(r)) return "missing value for " + r.to_string();
  }
  return "";
}

/// Weight of a positive root under the zero-extension on <theta>.
/// Caller guarantees the domain is valid.
Rat weight_of(const RootSystem& rs, const LambdaSystem& lam, const Root& r) {
  if (rs.in_theta_span(r, lam.theta)) return Rat(0);
  return lam.values.at(r);
}

LemmaReport base_report(std::string lemma, const RootSystem& rs, std::string params) {
  LemmaReport rep;
  rep.lemma = std::move(lemma);
  rep.algebra = rs.type().to_string();
  rep.params = std::move(params);
  rep.pass = true;
  return rep;
}

void fail(LemmaReport& rep, std::string why) {
  if (!rep.pass) return;  // keep the first counterexample
  rep.pass = false;
  rep.counterexample = std::move(why);
}

std::vector<std::vector<Cx>> subalgebra_rows(const Subalgebra& s) {
  std::vector<std::vector<Cx>> rows;
  rows.reserve(s.basis.size());
  for (const auto& e : s.basis) rows.push_back(e.coords);
  return rows;
}

}  // namespace

std::string to_string(OrbitType t) { return t == OrbitType::Point ? "Point" : "Sphere"; }

std::string MGenerator::to_string() const { return std::string(1, kind) + "_" + root.to_string(); }

LambdaSystem lambda_from_theta(const RootSystem& rs, const std::vector<int>& theta_in) {
  std::vector<int> theta = normalize_theta(rs, theta_in);
  std::set<int> inside(theta.begin(), theta.end());
  LambdaSystem lam;
  lam.theta = theta;
  for (const Root& r : rs.positive_roots()) {
    if (rs.in_theta_span(r, theta)) continue;
    int total = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!inside.count(i)) total += r.coeffs[i];
    }
    lam.values[r] = Rat(total);
  }
  return lam;
}

LemmaReport check_lambda_system(const RootSystem& rs, const LambdaSystem& lam_in) {
  LambdaSystem lam{normalize_theta(rs, lam_in.theta), lam_in.values};
  LemmaReport rep = base_report("lambda-system", rs, theta_label(lam.theta));

  if (std::string err = domain_error(rs, lam); !err.empty()) {
    fail(rep, err);
    return rep;
  }
  for (const auto& [r, v] : lam.values) {
    if (!(v > 0)) {
      fail(rep, "lambda(" + r.to_string() + ") = " + rat_to_string(v) + " is not positive");
      return rep;
    }
  }

  const auto& pos = rs.positive_roots();
  // Additivity on root sums (values on <theta> extended by zero).
  for (std::size_t i = 0; i < pos.size() && rep.pass; ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      Root sum = pos[i] + pos[j];
      if (rs.root_index(sum) < 0) continue;
      Rat lhs = weight_of(rs, lam, sum);
      Rat rhs = weight_of(rs, lam, pos[i]) + weight_of(rs, lam, pos[j]);
      if (lhs != rhs) {
        fail(rep, "lambda(" + sum.to_string() + ") = " + rat_to_string(lhs) +
                      " but lambda(" + pos[i].to_string() + ") + lambda(" + pos[j].to_string() +
                      ") = " + rat_to_string(rhs));
        break;
      }
    }
  }
  // Constancy along shifts by roots in <theta> (either sign).
  std::vector<Root> theta_roots;
  for (const Root& r : rs.all_roots()) {
    if (rs.in_theta_span(r, lam.theta)) theta_roots.push_back(r);
  }
  for (const Root& a : pos) {
    if (!rep.pass) break;
    for (const Root& g : theta_roots) {
      Root shifted = a + g;
      if (rs.root_index(shifted) < 0 || !shifted.is_positive()) continue;
      Rat lhs = weight_of(rs, lam, shifted);
      Rat rhs = weight_of(rs, lam, a);
      if (lhs != rhs) {
        fail(rep, "lambda(" + shifted.to_string() + ") = " + rat_to_string(lhs) +
                      " differs from lambda(" + a.to_string() + ") = " + rat_to_string(rhs) +
                      " across the theta shift " + g.to_string());
        break;
      }
    }
  }
  return rep;
}

TwoForm build_two_form(const LieAlgebra& lie, const LambdaSystem& lam_in) {
  const RootSystem& rs = lie.roots();
  LambdaSystem lam{normalize_theta(rs, lam_in.theta), lam_in.values};
  if (std::string err = domain_error(rs, lam); !err.empty()) {
    throw std::invalid_argument("weight system does not match the root system: " + err);
  }
  for (const auto& [r, v] : lam.values) {
    if (!(v > 0)) {
      throw std::invalid_argument("weight at " + r.to_string() + " is " + rat_to_string(v) +
                                  ", not positive");
    }
  }

  TwoForm form;
  form.theta = lam.theta;
  for (const Root& a : rs.positive_roots()) {
    if (rs.in_theta_span(a, lam.theta)) continue;
    form.m_basis.push_back({'A', a});
    form.m_basis.push_back({'S', a});
  }
  const int n = static_cast<int>(form.m_basis.size());
  form.matrix.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int k = 0; k < n; k += 2) {
    const Root& a = form.m_basis[k].root;
    Rat w = lie.killing_pairing(a) * lam.values.at(a);
    form.matrix[k][k + 1] = w;
    form.matrix[k + 1][k] = -w;
  }
  return form;
}

LemmaReport check_dominant_support(const RootSystem& rs) {
  LemmaReport rep = base_report("dominant-support", rs, "");
  for (const Root& d : rs.dominant_roots()) {
    std::vector<int> sup = rs.support(d);
    if (static_cast<int>(sup.size()) == rs.rank()) continue;
    std::set<int> have(sup.begin(), sup.end());
    for (int i = 0; i < rs.rank(); ++i) {
      if (!have.count(i)) {
        fail(rep, "dominant root " + d.to_string() + " has zero coefficient at simple root " +
                      std::to_string(i + 1));
        break;
      }
    }
    break;
  }
  return rep;
}

OrbitType check_orbit_type(const LieAlgebra& lie, const std::vector<int>& theta_in,
                           const Root& beta) {
  const RootSystem& rs = lie.roots();
  std::vector<int> theta = normalize_theta(rs, theta_in);
  rs.check_root_arg(beta, "beta");
  if (!beta.is_positive()) {
    throw std::invalid_argument("orbit type is defined for positive roots; got " +
                                beta.to_string());
  }

  std::vector<std::vector<Cx>> sl2_rows = subalgebra_rows(lie.g_alpha_subalgebra(beta));
  std::vector<std::vector<Cx>> par_rows = subalgebra_rows(lie.parabolic(theta));
  int inter = intersection_dim(lie.dim(), sl2_rows, par_rows);
  int codim = static_cast<int>(sl2_rows.size()) - inter;
  if (codim < 0 || codim > 1) {
    throw std::logic_error("orbit of " + beta.to_string() + " has codimension " +
                           std::to_string(codim) + "; expected 0 or 1");
  }

  // The Borel half span{H_beta, X_beta} must land in the parabolic for
  // every beta, not just the Point ones.
  SpanBuilder par_span(lie.dim());
  for (auto& row : par_rows) par_span.insert(std::move(row));
  if (!par_span.contains(lie.embed(lie.coroot(beta)).coords)) {
    throw std::logic_error("H_" + beta.to_string() + " escapes the parabolic of " +
                           theta_label(theta));
  }
  if (!par_span.contains(lie.basis_element(lie.x_index(beta)).coords)) {
    throw std::logic_error("X_" + beta.to_string() + " escapes the parabolic of " +
                           theta_label(theta));
  }

  bool point = codim == 0;
  if (point != rs.in_theta_span(beta, theta)) {
    throw std::logic_error("orbit of " + beta.to_string() + " is " +
                           to_string(point ? OrbitType::Point : OrbitType::Sphere) +
                           " yet membership of the root in the span of " + theta_label(theta) +
                           " says otherwise");
  }
  return point ? OrbitType::Point : OrbitType::Sphere;
}

LemmaReport check_orbit_grid(const LieAlgebra& lie, const std::vector<int>& theta_in) {
  const RootSystem& rs = lie.roots();
  std::vector<int> theta = normalize_theta(rs, theta_in);
  LemmaReport rep = base_report("orbit-type-grid", rs, theta_label(theta));
  int points = 0, spheres = 0;
  for (const Root& beta : rs.positive_roots()) {
    try {
      (check_orbit_type(lie, theta, beta) == OrbitType::Point ? points : spheres)++;
    } catch (const std::logic_error& e) {
      fail(rep, e.what());
      return rep;
    }
  }
  rep.params += ", points=" + std::to_string(points) + ", spheres=" + std::to_string(spheres);
  return rep;
}

LemmaReport check_highest_root_centralizer(const LieAlgebra& lie) {
  const RootSystem& rs = lie.roots();
  Root mu = rs.highest_root();
  LemmaReport rep = base_report("highest-root-centralizer", rs, "mu=" + mu.to_string());

  int x_plus = lie.x_index(mu);
  int x_minus = lie.x_index(-mu);
  for (const Root& b : rs.all_roots()) {
    if (rs.form(b, mu) != 0) continue;
    int xb = lie.x_index(b);
    bool sum_is_root = rs.root_index(mu + b) >= 0;
    bool dif_is_root = rs.root_index(b - mu) >= 0;
    bool bracket_plus = !lie.bracket_basis(x_plus, xb).empty();
    bool bracket_minus = !lie.bracket_basis(x_minus, xb).empty();
    if (bracket_plus != sum_is_root) {
      fail(rep, "root arithmetic and structure constants disagree about mu + " + b.to_string());
      return rep;
    }
    if (bracket_minus != dif_is_root) {
      fail(rep, "root arithmetic and structure constants disagree about " + b.to_string() +
                    " - mu");
      return rep;
    }
    if (sum_is_root || bracket_plus) {
      fail(rep, "mu + " + b.to_string() + " is a root despite orthogonality to mu");
      return rep;
    }
    if (dif_is_root || bracket_minus) {
      fail(rep, b.to_string() + " - mu is a root despite orthogonality to mu");
      return rep;
    }
  }

  // The centralizer of H_mu must normalize the rank-one subalgebra of mu.
  Subalgebra center = lie.centralizer_of_cartan(lie.h_alpha(mu));
  Subalgebra sl2 = lie.g_alpha_subalgebra(mu);
  SpanBuilder sl2_span(lie.dim());
  for (const auto& e : sl2.basis) sl2_span.insert(e.coords);
  for (const auto& z : center.basis) {
    for (const auto& s : sl2.basis) {
      if (!sl2_span.contains(lie.bracket(z.coords, s.coords))) {
        fail(rep, "bracketing a centralizer element of H_mu into the rank-one subalgebra of mu "
                  "leaves that subalgebra");
        return rep;
      }
    }
  }
  return rep;
}

LemmaReport check_eigenspace_positivity(const LieAlgebra& lie, const Root& mu) {
  const RootSystem& rs = lie.roots();
  rs.check_root_arg(mu, "mu");
  const auto& dom = rs.dominant_roots();
  if (std::find(dom.begin(), dom.end(), mu) == dom.end()) {
    throw std::invalid_argument("eigenspace positivity is stated for dominant roots; " +
                                mu.to_string() + " is not dominant");
  }
  LemmaReport rep = base_report("eigenspace-positivity", rs, "mu=" + mu.to_string());

  CartanVector h_mu = lie.h_alpha(mu);
  Cx self = lie.root_eval(mu, h_mu);
  Rat square = lie.dual_form(mu, mu);
  if (self != Cx(square)) {
    fail(rep, "mu(H_mu) = " + cx_to_string(self) + " differs from kappa(H_mu, H_mu) = " +
                  rat_to_string(square));
    return rep;
  }
  if (!(square > 0)) {
    fail(rep, "kappa(H_mu, H_mu) = " + rat_to_string(square) + " is not positive");
    return rep;
  }
  for (const Root& g : rs.all_roots()) {
    Cx v = lie.root_eval(g, h_mu);
    if (v.im != 0) {
      fail(rep, "non-real evaluation " + cx_to_string(v) + " at " + g.to_string());
      return rep;
    }
    if (v.re > 0 && !g.is_positive()) {
      fail(rep, "root " + g.to_string() + " has value " + cx_to_string(v) +
                    " on H_mu yet is not positive");
      return rep;
    }
  }
  std::vector<Cx> x_mu(lie.dim(), Cx());
  x_mu[lie.x_index(mu)] = Cx(1);
  std::vector<Cx> image = lie.bracket(lie.embed(h_mu).coords, x_mu);
  for (int k = 0; k < lie.dim(); ++k) {
    if (image[k] != x_mu[k] * self) {
      fail(rep, "ad(H_mu) X_mu is not mu(H_mu) X_mu at basis slot " + lie.basis_label(k));
      return rep;
    }
  }
  return rep;
}

LemmaReport check_omega_form(const LieAlgebra& lie, const TwoForm& form) {
  const RootSystem& rs = lie.roots();
  std::vector<int> theta = normalize_theta(rs, form.theta);
  LemmaReport rep = base_report("omega-form", rs, theta_label(theta));

  const int n = static_cast<int>(form.m_basis.size());
  if (static_cast<int>(form.matrix.size()) != n) {
    throw std::invalid_argument("two-form matrix has " + std::to_string(form.matrix.size()) +
                                " rows for " + std::to_string(n) + " generators");
  }
  for (const auto& row : form.matrix) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("two-form matrix is not square");
    }
  }

  // Complex coordinates of the m generators, with the root-space slots
  // cached for the projection below.
  const int dim = lie.dim();
  std::vector<std::vector<Cx>> gen(n, std::vector<Cx>(dim, Cx()));
  std::vector<int> slot_plus(n), slot_minus(n);
  const Cx half(Rat(1, 2));
  const Cx minus_half_i(Rat(0), Rat(-1, 2));
  for (int p = 0; p < n; ++p) {
    const MGenerator& g = form.m_basis[p];
    slot_plus[p] = lie.x_index(g.root);
    slot_minus[p] = lie.x_index(-g.root);
    if (g.kind == 'A') {
      gen[p][slot_plus[p]] = Cx(1);
      gen[p][slot_minus[p]] = Cx(-1);
    } else {
      gen[p][slot_plus[p]] = Cx::unit_i();
      gen[p][slot_minus[p]] = Cx::unit_i();
    }
  }

  // Expansion of an algebra element over the m generators; the Cartan
  // and <theta> root-space components are dropped (that is [.]_m).
  auto project_m = [&](const std::vector<Cx>& c) {
    std::vector<Cx> out(n);
    for (int p = 0; p < n; ++p) {
      const Cx& cp = c[slot_plus[p]];
      const Cx& cm = c[slot_minus[p]];
      out[p] = form.m_basis[p].kind == 'A' ? (cp - cm) * half : (cp + cm) * minus_half_i;
    }
    return out;
  };

  // Sparse views of the matrix: Omega(u, e_q) sums a column,
  // Omega(e_p, v) sums a row.
  std::vector<std::vector<std::pair<int, Rat>>> by_row(n), by_col(n);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (form.matrix[p][q] != 0) {
        by_row[p].push_back({q, form.matrix[p][q]});
        by_col[q].push_back({p, form.matrix[p][q]});
      }
    }
  }
  auto omega_vec_basis = [&](const std::vector<Cx>& u, int q) {
    Cx s;
    for (const auto& [p, w] : by_col[q]) s += u[p] * Cx(w);
    return s;
  };
  auto omega_basis_vec = [&](int p, const std::vector<Cx>& v) {
    Cx s;
    for (const auto& [q, w] : by_row[p]) s += Cx(w) * v[q];
    return s;
  };

  // Infinitesimal invariance under the isotropy algebra.
  struct IsoGen {
    std::string name;
    std::vector<Cx> coords;
  };
  std::vector<IsoGen> iso;
  for (int j = 0; j < rs.rank(); ++j) {
    std::vector<Cx> c(dim, Cx());
    c[j] = Cx::unit_i();
    iso.push_back({"iH" + std::to_string(j + 1), std::move(c)});
  }
  for (const Root& g : rs.positive_roots()) {
    if (!rs.in_theta_span(g, theta)) continue;
    auto [a, s] = lie.compact_generators(g);
    iso.push_back({"A_" + g.to_string(), std::move(a.coords)});
    iso.push_back({"S_" + g.to_string(), std::move(s.coords)});
  }
  for (const IsoGen& z : iso) {
    std::vector<std::vector<Cx>> moved(n);
    for (int p = 0; p < n; ++p) moved[p] = project_m(lie.bracket(z.coords, gen[p]));
    for (int p = 0; p < n && rep.pass; ++p) {
      for (int q = p; q < n; ++q) {
        Cx total = omega_vec_basis(moved[p], q) + omega_basis_vec(p, moved[q]);
        if (!total.is_zero()) {
          fail(rep, "Omega([Z,X]_m, Y) + Omega(X, [Z,Y]_m) = " + cx_to_string(total) +
                        " for Z = " + z.name + ", X = " + form.m_basis[p].to_string() +
                        ", Y = " + form.m_basis[q].to_string());
          break;
        }
      }
    }
    if (!rep.pass) return rep;
  }

  // Closedness: the cyclic sum over every basis triple.
  std::vector<std::vector<std::vector<Cx>>> pair_m(n, std::vector<std::vector<Cx>>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) pair_m[p][q] = project_m(lie.bracket(gen[p], gen[q]));
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      for (int r = q + 1; r < n; ++r) {
        Cx total = omega_vec_basis(pair_m[p][q], r) + omega_vec_basis(pair_m[q][r], p) -
                   omega_vec_basis(pair_m[p][r], q);
        if (!total.is_zero()) {
          fail(rep, "cyclic sum = " + cx_to_string(total) + " on (" +
                        form.m_basis[p].to_string() + ", " + form.m_basis[q].to_string() + ", " +
                        form.m_basis[r].to_string() + ")");
          return rep;
        }
      }
    }
  }
  return rep;
}

LemmaReport check_omega(const LieAlgebra& lie, const LambdaSystem& lam) {
  return check_omega_form(lie, build_two_form(lie, lam));
}

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) {
      if (comma == std::string::npos) break;
      throw std::invalid_argument("empty token in grid description");
    }
    std::size_t eq = token.find('=');
    if (token.rfind("rank<=", 0) == 0) {
      grid.min_rank = 1;
      grid.max_rank = std::stoi(token.substr(6));
      continue;
    }
    if (eq == std::string::npos) {
      throw std::invalid_argument("unrecognized grid token '" + token + "'");
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "theta") {
      if (value == "all") {
        grid.all_theta = true;
      } else if (value == "none") {
        grid.all_theta = false;
      } else {
        throw std::invalid_argument("theta must be 'all' or 'none', got '" + value + "'");
      }
    } else if (key == "type") {
      std::size_t dots = value.find("..");
      if (dots != std::string::npos) {
        if (dots != 1 || value.size() != 4) {
          throw std::invalid_argument("family range must look like 'A..G', got '" + value + "'");
        }
        grid.family_lo = value[0];
        grid.family_hi = value[3];
      } else {
        DynkinType t = DynkinType::parse(value);
        grid.family_lo = grid.family_hi = t.family;
        grid.min_rank = grid.max_rank = t.rank;
      }
    } else {
      throw std::invalid_argument("unrecognized grid key '" + key + "'");
    }
  }
  if (grid.family_lo < 'A' || grid.family_hi > 'G' || grid.family_lo > grid.family_hi) {
    throw std::invalid_argument("family range out of order");
  }
  if (grid.min_rank < 1 || grid.min_rank > grid.max_rank) {
    throw std::invalid_argument("rank range out of order");
  }
  return grid;
}

std::vector<DynkinType> GridSpec::types() const {
  std::vector<DynkinType> out;
  for (char f = family_lo; f <= family_hi; ++f) {
    for (int r = min_rank; r <= max_rank; ++r) {
      if (DynkinType::is_valid(f, r)) out.push_back(DynkinType(f, r));
    }
  }
  return out;
}

std::vector<LemmaReport> run_all(const GridSpec& grid) {
  std::vector<LemmaReport> out;
  for (const DynkinType& t : grid.types()) {
    LieAlgebra lie = LieAlgebra::build(t);
    const RootSystem& rs = lie.roots();
    out.push_back(check_dominant_support(rs));
    for (const Root& mu : rs.dominant_roots()) {
      out.push_back(check_eigenspace_positivity(lie, mu));
    }
    out.push_back(check_highest_root_centralizer(lie));
    if (!grid.all_theta) continue;
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
      std::vector<int> theta;
      for (int i = 0; i < rs.rank(); ++i) {
        if (mask & (1u << i)) theta.push_back(i);
      }
      LambdaSystem lam = lambda_from_theta(rs, theta);
      out.push_back(check_lambda_system(rs, lam));
      out.push_back(check_omega(lie, lam));
      out.push_back(check_orbit_grid(lie, theta));
    }
  }
  return out;
}

}  // namespace lie::lab
