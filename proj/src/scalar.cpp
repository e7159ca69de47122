#include "lie/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace lie {

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string text(s);
  // Decimal literals are accepted for convenience: "0.25" -> 1/4.
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || frac_len == 0) throw std::invalid_argument("malformed decimal: " + text);
    Rat num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("malformed decimal: " + text);
    Rat den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    num /= den;
    num.canonicalize();
    return num;
  }
  Rat r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite numeric value");
  return Rat(x);
}

Cx cx_div(const Cx& a, const Cx& b) {
  Rat n = b.norm2();
  if (n == 0) throw std::invalid_argument("division by zero scalar");
  Cx num = a * b.conj();
  return Cx(num.re / n, num.im / n);
}

std::string cx_to_string(const Cx& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = rat_to_string(z.im) + "i";
  }
  if (z.re == 0) return imag;
  if (z.im > 0) return rat_to_string(z.re) + "+" + imag;
  return rat_to_string(z.re) + imag;
}

Rat inf_norm(const std::vector<Cx>& v) {
  Rat m(0);
  for (const Cx& z : v) {
    Rat ar = abs(z.re);
    Rat ai = abs(z.im);
    if (ar > m) m = ar;
    if (ai > m) m = ai;
  }
  return m;
}

bool cx_less(const Cx& a, const Cx& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

}  // namespace lie
