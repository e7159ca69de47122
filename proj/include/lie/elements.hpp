#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lie/chevalley.hpp"
#include "lie/policy.hpp"
#include "lie/rootsys.hpp"
#include "lie/scalar.hpp"

namespace lie {

/// Eigenvalue data of ad(B) for B in the Cartan subalgebra: the nonzero
/// eigenvalues beta(B) with multiplicities, plus the kernel dimension.
/// Multiplicities and kernel always account for the full algebra:
/// sum of multiplicities + kernel_dim = dim g.
struct Spectrum {
  struct Entry {
    Cx value;
    int multiplicity = 0;
  };
  std::vector<Entry> entries;  // sorted by (re, im), nonzero values only
  int kernel_dim = 0;
};

/// Splits x into its h-part and root-space coefficients. Coefficients
/// with nonzero representation are all reported; reassembly is exact.
std::pair<CartanVector, std::map<Root, Cx>> decompose(const AlgebraElement& x);

/// Reassembles the output of decompose.
AlgebraElement reassemble(const LieAlgebra& lie, const CartanVector& h,
                          const std::map<Root, Cx>& components);

/// B = B_Re + B_Im with B_Re in the real span of the H_{a_i} and B_Im
/// in i times that span; beta(B_Re) = Re beta(B) for every root.
std::pair<CartanVector, CartanVector> split_real_imaginary(const CartanVector& b);

/// Eigenvalues {beta(B)} of ad(B) with zero decisions under B's policy;
/// borderline decisions are flagged through sink.
Spectrum ad_spectrum(const CartanVector& b, FlagSink sink = FlagSink());

/// Verdict with human-readable reasons for failure (empty when true).
struct RegularityReport {
  bool strong_regular = false;
  std::vector<std::string> reasons;
};

/// Strong regularity of B in h: ad(B) has kernel of dimension exactly
/// rank, the values beta(B) are pairwise distinct over roots, and no
/// nonzero eigenvalue is real.
RegularityReport is_strong_regular(const CartanVector& b, FlagSink sink = FlagSink());

/// True iff every root-vector coordinate of x vanishes under x's policy.
bool is_in_cartan(const AlgebraElement& x, FlagSink sink = FlagSink());

/// The h-part of x as a CartanVector (coordinate readout).
CartanVector cartan_part(const AlgebraElement& x);

}  // namespace lie
