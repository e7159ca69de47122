#include "lie/elements.hpp"

#include <algorithm>
#include <stdexcept>

namespace lie {

namespace {

const LieAlgebra& algebra_of(const AlgebraElement& x) {
  if (x.algebra == nullptr) throw std::invalid_argument("element is not attached to an algebra");
  if (static_cast<int>(x.coords.size()) != x.algebra->dim())
    throw std::invalid_argument("coordinate length does not match algebra dimension");
  return *x.algebra;
}

const LieAlgebra& algebra_of(const CartanVector& h) {
  if (h.algebra == nullptr)
    throw std::invalid_argument("Cartan vector is not attached to an algebra");
  if (static_cast<int>(h.coeffs.size()) != h.algebra->rank())
    throw std::invalid_argument("Cartan coordinate length does not match rank");
  return *h.algebra;
}

}  // namespace

std::pair<CartanVector, std::map<Root, Cx>> decompose(const AlgebraElement& x) {
  const LieAlgebra& g = algebra_of(x);
  CartanVector h;
  h.algebra = &g;
  h.policy = x.policy;
  h.coeffs.assign(x.coords.begin(), x.coords.begin() + g.rank());
  std::map<Root, Cx> components;
  for (int idx = g.rank(); idx < g.dim(); ++idx) {
    if (!x.coords[idx].is_zero()) components[g.root_of_index(idx)] = x.coords[idx];
  }
  return {std::move(h), std::move(components)};
}

AlgebraElement reassemble(const LieAlgebra& lie, const CartanVector& h,
                          const std::map<Root, Cx>& components) {
  AlgebraElement out = lie.embed(h);
  for (const auto& [root, coeff] : components) out.coords[lie.x_index(root)] = coeff;
  out.policy = h.policy;
  return out;
}

std::pair<CartanVector, CartanVector> split_real_imaginary(const CartanVector& b) {
  const LieAlgebra& g = algebra_of(b);
  CartanVector re = g.zero_cartan();
  CartanVector im = g.zero_cartan();
  re.policy = b.policy;
  im.policy = b.policy;
  for (int i = 0; i < g.rank(); ++i) {
    re.coeffs[i] = Cx(b.coeffs[i].re);
    im.coeffs[i] = Cx(Rat(0), b.coeffs[i].im);
  }
  return {std::move(re), std::move(im)};
}

Spectrum ad_spectrum(const CartanVector& b, FlagSink sink) {
  const LieAlgebra& g = algebra_of(b);
  Rat norm = inf_norm(b.coeffs);
  Spectrum sp;
  sp.kernel_dim = g.rank();
  std::vector<Cx> values;
  for (const Root& beta : g.roots().all_roots()) {
    Cx ev = g.root_eval(beta, b.coeffs);
    if (is_zero_scalar(ev, b.policy, norm, sink, "eigenvalue at " + beta.to_string())) {
      ++sp.kernel_dim;
    } else {
      values.push_back(ev);
    }
  }
  std::sort(values.begin(), values.end(), cx_less);
  for (const Cx& v : values) {
    if (!sp.entries.empty() && sp.entries.back().value == v) {
      ++sp.entries.back().multiplicity;
    } else {
      sp.entries.push_back({v, 1});
    }
  }
  return sp;
}

RegularityReport is_strong_regular(const CartanVector& b, FlagSink sink) {
  const LieAlgebra& g = algebra_of(b);
  Rat norm = inf_norm(b.coeffs);
  RegularityReport report;
  const auto& all = g.roots().all_roots();
  std::vector<Cx> evals;
  evals.reserve(all.size());
  for (const Root& beta : all) evals.push_back(g.root_eval(beta, b.coeffs));

  for (size_t i = 0; i < all.size(); ++i) {
    if (is_zero_scalar(evals[i], b.policy, norm, sink, "eigenvalue at " + all[i].to_string())) {
      report.reasons.push_back("ad(B) kills the root space at " + all[i].to_string() +
                               "; kernel exceeds the Cartan subalgebra");
    } else if (is_zero_scalar(Cx(evals[i].im), b.policy, norm, sink,
                              "imaginary part at " + all[i].to_string())) {
      report.reasons.push_back("eigenvalue " + cx_to_string(evals[i]) + " at " +
                               all[i].to_string() + " is real");
    }
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (scalars_equal(evals[i], evals[j], b.policy, norm, sink,
                        "eigenvalue collision " + all[i].to_string() + " vs " +
                            all[j].to_string())) {
        report.reasons.push_back("roots " + all[i].to_string() + " and " + all[j].to_string() +
                                 " share the eigenvalue " + cx_to_string(evals[i]));
      }
    }
  }
  report.strong_regular = report.reasons.empty();
  return report;
}

bool is_in_cartan(const AlgebraElement& x, FlagSink sink) {
  const LieAlgebra& g = algebra_of(x);
  Rat norm = inf_norm(x.coords);
  bool in = true;
  for (int idx = g.rank(); idx < g.dim(); ++idx) {
    if (!is_zero_scalar(x.coords[idx], x.policy, norm, sink,
                        "root coordinate at " + g.root_of_index(idx).to_string()))
      in = false;
  }
  return in;
}

CartanVector cartan_part(const AlgebraElement& x) {
  const LieAlgebra& g = algebra_of(x);
  CartanVector h;
  h.algebra = &g;
  h.policy = x.policy;
  h.coeffs.assign(x.coords.begin(), x.coords.begin() + g.rank());
  return h;
}

}  // namespace lie
