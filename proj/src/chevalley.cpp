#include "lie/chevalley.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lie/linalg.hpp"

namespace lie {

namespace {

Rat entry_coeff(const std::vector<std::pair<int, Rat>>& entries, int k) {
  for (const auto& [idx, c] : entries) {
    if (idx == k) return c;
    if (idx > k) break;  // sorted by index
  }
  return Rat(0);
}

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("structure construction failed: ") + what);
}

}  // namespace

LieAlgebra LieAlgebra::build(const RootSystem& rs) {
  LieAlgebra g(rs);
  const int l = rs.rank();
  const auto& pos = rs.positive_roots();
  const auto& all = rs.all_roots();
  const int npos = static_cast<int>(pos.size());
  const int nroots = 2 * npos;
  g.dim_ = l + nroots;

  // --- Chevalley constants for positive special pairs -------------------
  // For each non-simple positive gamma, processed by increasing height,
  // pick the decomposition gamma = eps + delta with minimal eps; there
  // N = p + 1 with p the depth of the eps-string through delta. Every
  // other decomposition is reduced to constants of lower height via the
  // standard four-root identity, so the fill order is well founded.
  std::vector<std::vector<Rat>> npp(npos, std::vector<Rat>(npos, Rat(0)));

  std::function<Rat(const Root&, const Root&)> nval = [&](const Root& x, const Root& y) -> Rat {
    bool xp = x.is_positive(), yp = y.is_positive();
    if (xp && yp) return npp[rs.root_index(x)][rs.root_index(y)];
    if (!xp && !yp) return -nval(-x, -y);
    if (!xp) return -nval(y, x);
    // x positive, y negative, x + y a nonzero root.
    Root s = x + y;
    if (s.is_positive()) return rs.form(s, s) / rs.form(x, x) * nval(y, -s);
    Root z = -s;
    return rs.form(z, z) / rs.form(y, y) * nval(z, x);
  };

  for (int gi = 0; gi < npos; ++gi) {
    const Root& gamma = pos[gi];
    if (gamma.height() == 1) continue;
    // Decompositions gamma = a + b with a < b, in increasing a.
    std::vector<std::pair<int, int>> pairs;
    for (int ai = 0; ai < npos; ++ai) {
      if (!(pos[ai] < gamma)) break;  // sorted: heights beyond gamma's cannot contribute
      Root b = gamma - pos[ai];
      if (!b.is_positive() || !rs.is_root(b)) continue;
      int bi = rs.root_index(b);
      if (pos[ai] < pos[bi]) pairs.emplace_back(ai, bi);
    }
    require(!pairs.empty(), "no decomposition for a non-simple positive root");
    const auto [ei, di] = pairs.front();
    const Root& eps = pos[ei];
    const Root& del = pos[di];
    int p = 0;
    for (Root down = del - eps; rs.is_root(down); down = down - eps) ++p;
    npp[ei][di] = Rat(p + 1);
    npp[di][ei] = Rat(-(p + 1));

    for (size_t t = 1; t < pairs.size(); ++t) {
      const auto [ai, bi] = pairs[t];
      const Root& a = pos[ai];
      const Root& b = pos[bi];
      Rat acc(0);
      Root s2 = del - a;
      if (rs.is_root(s2)) acc += nval(del, -a) * nval(eps, -b) / rs.form(s2, s2);
      Root s3 = eps - a;
      if (rs.is_root(s3)) acc += -nval(eps, -a) * nval(del, -b) / rs.form(s3, s3);
      Rat val = rs.form(gamma, gamma) * acc / npp[ei][di];
      require(val != 0, "vanishing constant for a root sum");
      require(val.get_den() == 1, "non-integral constant");
      npp[ai][bi] = val;
      npp[bi][ai] = -val;
    }
  }

  // --- coroot coordinates ------------------------------------------------
  // [x_a, x_{-a}] in the unnormalized basis is the coroot of a, whose
  // coordinates over the simple coroots are n_i (a_i, a_i)/(a, a).
  std::vector<std::vector<Rat>> coroot(npos, std::vector<Rat>(l));
  for (int r = 0; r < npos; ++r) {
    Rat aa = rs.form(pos[r], pos[r]);
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(l, 0);
      e[i] = 1;
      Root ai{e};
      coroot[r][i] = Rat(pos[r].coeffs[i]) * rs.form(ai, ai) / aa;
      require(coroot[r][i].get_den() == 1, "non-integral coroot coordinate");
    }
  }

  // Bracket in the unnormalized basis (h_i = simple coroots, then x_beta),
  // computed on demand; only needed for the kappa(x_a, x_{-a}) traces.
  auto borig = [&](int i, int j) -> std::vector<std::pair<int, Rat>> {
    std::vector<std::pair<int, Rat>> out;
    if (i < l && j < l) return out;
    if (i < l) {
      int c = rs.cartan_pairing(all[j - l], i);
      if (c != 0) out.emplace_back(j, Rat(c));
      return out;
    }
    if (j < l) {
      int c = rs.cartan_pairing(all[i - l], j);
      if (c != 0) out.emplace_back(i, Rat(-c));
      return out;
    }
    const Root& a = all[i - l];
    const Root& b = all[j - l];
    Root s = a + b;
    if (s == -s) {  // a + b = 0
      int r = rs.root_index(a.is_positive() ? a : b);
      Rat sign = a.is_positive() ? Rat(1) : Rat(-1);
      for (int k = 0; k < l; ++k) {
        if (coroot[r][k] != 0) out.emplace_back(k, sign * coroot[r][k]);
      }
      return out;
    }
    if (rs.is_root(s)) out.emplace_back(l + rs.root_index(s), nval(a, b));
    return out;
  };

  // kappa(x_gamma, x_{-gamma}) as an adjoint trace.
  std::vector<Rat> cpair(npos, Rat(0));
  for (int r = 0; r < npos; ++r) {
    int xi = l + r;
    int xni = l + npos + r;
    Rat acc(0);
    for (int k = 0; k < g.dim_; ++k) {
      for (const auto& [m, c1] : borig(xni, k)) acc += c1 * entry_coeff(borig(xi, m), k);
    }
    cpair[r] = acc;
    require(cpair[r] > 0, "kappa(x_a, x_{-a}) not positive");
  }

  // kappa on the coroot part: ad h is diagonal, so the trace is a sum of
  // products of root evaluations.
  std::vector<std::vector<Rat>> gh(l, std::vector<Rat>(l, Rat(0)));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      Rat acc(0);
      for (const Root& beta : all)
        acc += Rat(rs.cartan_pairing(beta, i)) * Rat(rs.cartan_pairing(beta, j));
      gh[i][j] = acc;
    }
  }

  // H_{a_i} = s_i h_i, fixed by kappa(H_{a_i}, h) = a_i(h) for all h.
  std::vector<Rat> scale(l);
  for (int i = 0; i < l; ++i) {
    require(gh[i][i] > 0, "kappa(h_i, h_i) not positive");
    scale[i] = Rat(2) / gh[i][i];
    for (int j = 0; j < l; ++j)
      require(scale[i] * gh[i][j] == Rat(rs.cartan_matrix()[i][j]),
              "Killing dual of a simple root is not proportional to its coroot");
  }
  g.dual_gram_.assign(l, std::vector<Rat>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) g.dual_gram_[i][j] = scale[i] * scale[j] * gh[i][j];

  // The normalized form of rootsys is a constant multiple of the dual
  // Killing form; fix and check the constant.
  g.form_ratio_ = rs.form_matrix()[0][0] / g.dual_gram_[0][0];
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      require(rs.form_matrix()[i][j] == g.form_ratio_ * g.dual_gram_[i][j],
              "normalized and Killing-dual forms are not proportional");

  auto dual_on_roots = [&](const Root& a, const Root& b) {
    Rat acc(0);
    for (int i = 0; i < l; ++i) {
      if (a.coeffs[i] == 0) continue;
      for (int j = 0; j < l; ++j) {
        if (b.coeffs[j] == 0) continue;
        acc += Rat(a.coeffs[i]) * g.dual_gram_[i][j] * Rat(b.coeffs[j]);
      }
    }
    return acc;
  };

  // [x_a, x_{-a}] = a^v = kappa(x_a, x_{-a}) H_a pins the trace pairing
  // at 2/(a,a). Cross-check against the dual form.
  for (int r = 0; r < npos; ++r)
    require(cpair[r] * dual_on_roots(pos[r], pos[r]) == Rat(2),
            "trace pairing disagrees with the dual form");

  // --- final table: the integral basis itself -----------------------------
  // The diagonal h-action, the coroot brackets and the resolved mixed
  // constants are exactly borig; freeze it and assert integrality.
  g.scale_ = scale;
  g.table_.assign(g.dim_, std::vector<std::vector<std::pair<int, Rat>>>(g.dim_));
  for (int i = 0; i < g.dim_; ++i) {
    for (int j = 0; j < g.dim_; ++j) {
      g.table_[i][j] = borig(i, j);
      for (const auto& [k, c] : g.table_[i][j]) {
        (void)k;
        require(c != 0, "stored zero constant");
        require(c.get_den() == 1, "non-integral structure constant");
      }
    }
  }

  // --- Killing matrix of the final basis, as an adjoint trace ------------
  g.killing_.assign(g.dim_, std::vector<Rat>(g.dim_, Rat(0)));
  for (int i = 0; i < g.dim_; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat acc(0);
      for (int k = 0; k < g.dim_; ++k) {
        const auto& step = g.table_[j][k];
        if (step.empty()) continue;
        for (const auto& [m, c1] : step) {
          const auto& back = g.table_[i][m];
          if (!back.empty()) acc += c1 * entry_coeff(back, k);
        }
      }
      g.killing_[i][j] = acc;
      g.killing_[j][i] = acc;
    }
  }
  // Expected shape: coroot Gram on h, kappa(x_a, x_{-a}) on opposite
  // root pairs, 0 elsewhere.
  for (int i = 0; i < g.dim_; ++i) {
    for (int j = 0; j < g.dim_; ++j) {
      Rat expect(0);
      if (i < l && j < l) {
        expect = gh[i][j];
      } else if (i >= l && j >= l && all[i - l] == -all[j - l]) {
        expect = cpair[rs.positive_index(all[i - l].is_positive() ? all[i - l] : all[j - l])];
      }
      require(g.killing_[i][j] == expect, "Killing matrix has unexpected shape");
    }
  }
  return g;
}

// --- basis bookkeeping ----------------------------------------------------

int LieAlgebra::x_index(const Root& beta) const {
  rs_.check_root_arg(beta, "x_index");
  return rank() + rs_.root_index(beta);
}

int LieAlgebra::h_index(int i) const {
  if (i < 0 || i >= rank()) throw std::invalid_argument("Cartan basis index out of range");
  return i;
}

const Root& LieAlgebra::root_of_index(int idx) const {
  if (idx < rank() || idx >= dim_)
    throw std::invalid_argument("basis slot " + std::to_string(idx) + " is not a root vector");
  return rs_.all_roots()[idx - rank()];
}

std::string LieAlgebra::basis_label(int idx) const {
  if (idx < 0 || idx >= dim_) throw std::invalid_argument("basis index out of range");
  if (idx < rank()) return "H" + std::to_string(idx + 1);
  return "X" + rs_.all_roots()[idx - rank()].to_string();
}

// --- bracket and Killing form ----------------------------------------------

const std::vector<std::pair<int, Rat>>& LieAlgebra::bracket_basis(int i, int j) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
    throw std::invalid_argument("basis index out of range");
  return table_[i][j];
}

std::vector<Cx> LieAlgebra::bracket(const std::vector<Cx>& x, const std::vector<Cx>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("coordinate length does not match algebra dimension");
  std::vector<Cx> out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const auto& entries = table_[i][j];
      if (entries.empty()) continue;
      Cx coef = x[i] * y[j];
      for (const auto& [k, c] : entries) out[k] += coef * Cx(c);
    }
  }
  return out;
}

AlgebraElement LieAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  out.algebra = this;
  out.coords = bracket(x.coords, y.coords);
  out.policy = x.policy.exact ? y.policy : x.policy;
  return out;
}

Cx LieAlgebra::killing(const std::vector<Cx>& x, const std::vector<Cx>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("coordinate length does not match algebra dimension");
  Cx acc;
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || killing_[i][j] == 0) continue;
      acc += x[i] * y[j] * Cx(killing_[i][j]);
    }
  }
  return acc;
}

Rat LieAlgebra::dual_form(const Root& a, const Root& b) const {
  rs_.check_root_arg(a, "dual_form");
  rs_.check_root_arg(b, "dual_form");
  Rat acc(0);
  for (int i = 0; i < rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b.coeffs[j] == 0) continue;
      acc += Rat(a.coeffs[i]) * dual_gram_[i][j] * Rat(b.coeffs[j]);
    }
  }
  return acc;
}

Cx LieAlgebra::root_eval(const Root& beta, const std::vector<Cx>& cartan_coeffs) const {
  rs_.check_root_arg(beta, "root_eval");
  if (static_cast<int>(cartan_coeffs.size()) != rank())
    throw std::invalid_argument("Cartan coordinate length does not match rank");
  Cx acc;
  for (int i = 0; i < rank(); ++i) {
    if (cartan_coeffs[i].is_zero()) continue;
    int pairing = rs_.cartan_pairing(beta, i);
    if (pairing != 0) acc += cartan_coeffs[i] * Cx(Rat(pairing));
  }
  return acc;
}

CartanVector LieAlgebra::h_alpha(const Root& alpha) const {
  rs_.check_root_arg(alpha, "h_alpha");
  CartanVector h;
  h.algebra = this;
  h.coeffs.resize(rank());
  for (int i = 0; i < rank(); ++i) h.coeffs[i] = Cx(scale_[i] * Rat(alpha.coeffs[i]));
  return h;
}

CartanVector LieAlgebra::coroot(const Root& alpha) const {
  rs_.check_root_arg(alpha, "coroot");
  const auto& entries = table_[x_index(alpha)][x_index(-alpha)];
  CartanVector h = zero_cartan();
  for (const auto& [k, c] : entries) h.coeffs[k] = Cx(c);
  return h;
}

Rat LieAlgebra::killing_pairing(const Root& alpha) const {
  rs_.check_root_arg(alpha, "killing_pairing");
  return killing_[x_index(alpha)][x_index(-alpha)];
}

AlgebraElement LieAlgebra::zero_element() const {
  AlgebraElement e;
  e.algebra = this;
  e.coords.assign(dim_, Cx(0));
  return e;
}

AlgebraElement LieAlgebra::basis_element(int idx) const {
  if (idx < 0 || idx >= dim_) throw std::invalid_argument("basis index out of range");
  AlgebraElement e = zero_element();
  e.coords[idx] = Cx(1);
  return e;
}

CartanVector LieAlgebra::zero_cartan() const {
  CartanVector h;
  h.algebra = this;
  h.coeffs.assign(rank(), Cx(0));
  return h;
}

AlgebraElement LieAlgebra::embed(const CartanVector& h) const {
  if (static_cast<int>(h.coeffs.size()) != rank())
    throw std::invalid_argument("Cartan coordinate length does not match rank");
  AlgebraElement e = zero_element();
  for (int i = 0; i < rank(); ++i) e.coords[i] = h.coeffs[i];
  e.policy = h.policy;
  return e;
}

std::vector<std::vector<Cx>> LieAlgebra::ad_matrix(const AlgebraElement& x) const {
  if (static_cast<int>(x.coords.size()) != dim_)
    throw std::invalid_argument("coordinate length does not match algebra dimension");
  std::vector<std::vector<Cx>> m(dim_, std::vector<Cx>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : table_[i][j]) m[k][j] += x.coords[i] * Cx(c);
    }
  }
  return m;
}

std::pair<AlgebraElement, AlgebraElement> LieAlgebra::compact_generators(const Root& alpha) const {
  rs_.check_root_arg(alpha, "compact_generators");
  if (!alpha.is_positive())
    throw std::invalid_argument("compact_generators: " + alpha.to_string() +
                                " is not a positive root (positive convention)");
  AlgebraElement a = zero_element();
  AlgebraElement s = zero_element();
  int xp = x_index(alpha);
  int xn = x_index(-alpha);
  a.coords[xp] = Cx(1);
  a.coords[xn] = Cx(-1);
  s.coords[xp] = Cx::unit_i();
  s.coords[xn] = Cx::unit_i();
  return {std::move(a), std::move(s)};
}

// --- subalgebras ------------------------------------------------------------

Subalgebra make_verified_subalgebra(const LieAlgebra& parent, std::vector<AlgebraElement> basis,
                                    std::string tag) {
  for (const AlgebraElement& e : basis) {
    if (static_cast<int>(e.coords.size()) != parent.dim())
      throw std::invalid_argument("subalgebra basis element of wrong dimension");
  }
  // Fast path: basis of coordinate vectors closes iff every bracket's
  // support stays inside the index set.
  std::set<int> support;
  bool coordinate_basis = true;
  for (const AlgebraElement& e : basis) {
    int nz = -1;
    for (int k = 0; k < parent.dim() && coordinate_basis; ++k) {
      if (e.coords[k].is_zero()) continue;
      if (nz >= 0 || e.coords[k] != Cx(1)) coordinate_basis = false;
      nz = k;
    }
    if (nz < 0) coordinate_basis = false;
    if (coordinate_basis) support.insert(nz);
  }
  bool closed = true;
  std::string witness;
  if (coordinate_basis) {
    for (int i : support) {
      for (int j : support) {
        for (const auto& [k, c] : parent.bracket_basis(i, j)) {
          (void)c;
          if (support.count(k) == 0) {
            closed = false;
            witness = "[" + parent.basis_label(i) + ", " + parent.basis_label(j) + "]";
            break;
          }
        }
        if (!closed) break;
      }
      if (!closed) break;
    }
  } else {
    SpanBuilder span(parent.dim());
    for (const AlgebraElement& e : basis) span.insert(e.coords);
    for (size_t i = 0; i < basis.size() && closed; ++i) {
      for (size_t j = 0; j < basis.size() && closed; ++j) {
        if (!span.contains(parent.bracket(basis[i].coords, basis[j].coords))) {
          closed = false;
          witness = "bracket of basis elements " + std::to_string(i) + ", " + std::to_string(j);
        }
      }
    }
  }
  if (!closed)
    throw std::logic_error("subalgebra \"" + tag + "\" is not bracket-closed: " + witness +
                           " leaves the span");
  Subalgebra s;
  s.parent = &parent;
  s.basis = std::move(basis);
  s.tag = std::move(tag);
  return s;
}

Subalgebra LieAlgebra::g_alpha_subalgebra(const Root& alpha) const {
  rs_.check_root_arg(alpha, "g_alpha_subalgebra");
  std::vector<AlgebraElement> basis;
  basis.push_back(embed(h_alpha(alpha)));
  basis.push_back(basis_element(x_index(alpha)));
  basis.push_back(basis_element(x_index(-alpha)));
  return make_verified_subalgebra(*this, std::move(basis), "g(alpha)");
}

Subalgebra LieAlgebra::parabolic(const std::vector<int>& theta) const {
  for (int i : theta)
    if (i < 0 || i >= rank())
      throw std::invalid_argument("parabolic: simple index " + std::to_string(i) +
                                  " out of range");
  std::vector<AlgebraElement> basis;
  for (int i = 0; i < rank(); ++i) basis.push_back(basis_element(i));
  for (const Root& b : rs_.positive_roots()) basis.push_back(basis_element(x_index(b)));
  for (const Root& b : rs_.positive_roots()) {
    if (rs_.in_theta_span(b, theta)) basis.push_back(basis_element(x_index(-b)));
  }
  return make_verified_subalgebra(*this, std::move(basis), "p_theta");
}

Subalgebra LieAlgebra::centralizer_of_cartan(const CartanVector& h, FlagSink sink) const {
  if (static_cast<int>(h.coeffs.size()) != rank())
    throw std::invalid_argument("Cartan coordinate length does not match rank");
  Rat norm = inf_norm(h.coeffs);
  std::vector<AlgebraElement> basis;
  for (int i = 0; i < rank(); ++i) basis.push_back(basis_element(i));
  for (const Root& b : rs_.all_roots()) {
    Cx ev = root_eval(b, h.coeffs);
    if (is_zero_scalar(ev, h.policy, norm, sink, "centralizer evaluation at " + b.to_string()))
      basis.push_back(basis_element(x_index(b)));
  }
  return make_verified_subalgebra(*this, std::move(basis), "z_H");
}

Subalgebra LieAlgebra::n_minus_of(const CartanVector& h, FlagSink sink) const {
  if (static_cast<int>(h.coeffs.size()) != rank())
    throw std::invalid_argument("Cartan coordinate length does not match rank");
  Rat norm = inf_norm(h.coeffs);
  std::vector<AlgebraElement> basis;
  for (const Root& b : rs_.all_roots()) {
    Cx ev = root_eval(b, h.coeffs);
    if (!is_zero_scalar(Cx(ev.im), h.policy, norm, sink,
                        "imaginary part of evaluation at " + b.to_string()))
      throw std::invalid_argument("evaluation at " + b.to_string() +
                                  " is not real: " + cx_to_string(ev));
    if (is_zero_scalar(ev, h.policy, norm, sink, "evaluation at " + b.to_string())) continue;
    if (ev.re < 0) basis.push_back(basis_element(x_index(b)));
  }
  return make_verified_subalgebra(*this, std::move(basis), "n_H-");
}

Subalgebra LieAlgebra::cartan_subalgebra() const {
  std::vector<AlgebraElement> basis;
  for (int i = 0; i < rank(); ++i) basis.push_back(basis_element(i));
  return make_verified_subalgebra(*this, std::move(basis), "h");
}

// --- Weyl automorphisms -----------------------------------------------------

namespace {

std::vector<std::vector<Rat>> rat_identity(int n) {
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::vector<Rat>> rat_mul(const std::vector<std::vector<Rat>>& a,
                                      const std::vector<std::vector<Rat>>& b) {
  int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

bool rat_is_zero(const std::vector<std::vector<Rat>>& a) {
  for (const auto& row : a)
    for (const Rat& v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace

std::vector<std::vector<Rat>> LieAlgebra::weyl_automorphism(const std::vector<int>& word) const {
  // exp of a nilpotent rational ad matrix.
  auto exp_ad = [&](int root_index_in_basis, const Rat& coeff) {
    int n = dim_;
    std::vector<std::vector<Rat>> ad(n, std::vector<Rat>(n, Rat(0)));
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : table_[root_index_in_basis][j]) ad[k][j] = coeff * c;
    std::vector<std::vector<Rat>> result = rat_identity(n);
    std::vector<std::vector<Rat>> term = ad;
    int order = 1;
    while (!rat_is_zero(term)) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) result[i][j] += term[i][j];
      ++order;
      if (order > 2 * n) throw std::logic_error("ad matrix is not nilpotent");
      term = rat_mul(term, ad);
      for (auto& row : term)
        for (Rat& v : row) v /= order;
    }
    return result;
  };

  std::vector<std::vector<Rat>> acc = rat_identity(dim_);
  for (int i : word) {
    if (i < 0 || i >= rank()) throw std::invalid_argument("Weyl word letter out of range");
    std::vector<int> e(rank(), 0);
    e[i] = 1;
    Root ai{e};
    int ep = x_index(ai);
    int en = x_index(-ai);
    auto phi = rat_mul(exp_ad(ep, Rat(1)),
                       rat_mul(exp_ad(en, Rat(-1)), exp_ad(ep, Rat(1))));
    acc = rat_mul(phi, acc);
  }
  return acc;
}

// --- dump --------------------------------------------------------------------

void LieAlgebra::dump_constants(std::ostream& os) const {
  os << "# algebra " << rs_.type().to_string() << " dim " << dim_ << "\n";
  for (int idx = 0; idx < dim_; ++idx) os << "# basis " << idx << " " << basis_label(idx) << "\n";
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (const auto& [k, c] : table_[i][j]) {
        os << i << " " << j << " " << k << " " << c.get_num().get_str() << "/"
           << c.get_den().get_str() << " 0/1\n";
      }
    }
  }
}

}  // namespace lie
