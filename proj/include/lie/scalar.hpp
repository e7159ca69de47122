#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lie {

/// Exact rational scalar. All structural data of the engine lives over
/// these (or their Gaussian extension below), so every predicate the
/// checkers evaluate is exactly decidable.
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);

/// Parses "p", "-p/q" or a decimal literal such as "0.25". Throws
/// std::invalid_argument on malformed input.
Rat rat_from_string(std::string_view s);

/// Exact image of an IEEE double (doubles are dyadic rationals).
Rat rat_from_double(double x);

/// Gaussian rational: re + im*i with exact rational parts.
struct Cx {
  Rat re{0};
  Rat im{0};

  Cx() = default;
  Cx(int v) : re(v) {}                      // NOLINT(google-explicit-constructor)
  Cx(Rat r) : re(std::move(r)) {}           // NOLINT(google-explicit-constructor)
  Cx(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static Cx unit_i() { return Cx(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Cx conj() const { return Cx(re, -im); }
  /// |z|^2, exact.
  Rat norm2() const { return re * re + im * im; }

  Cx operator-() const { return Cx(-re, -im); }
  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx& operator*=(const Cx& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }
};

/// Division by a nonzero Gaussian rational. Throws on zero divisor.
Cx cx_div(const Cx& a, const Cx& b);

/// Canonical rendering: "3/2", "-1+2i", "i", "0". Used in evidence
/// fields, so it must be stable.
std::string cx_to_string(const Cx& z);

/// max(|re|, |im|) over all coordinates; 0 for an empty vector.
Rat inf_norm(const std::vector<Cx>& v);

/// Exact total order on Gaussian rationals (re, then im); used to make
/// spectra and report orderings deterministic.
bool cx_less(const Cx& a, const Cx& b);

}  // namespace lie
