#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie/linalg.hpp"
#include "lie/policy.hpp"
#include "lie/scalar.hpp"

using namespace lie;

TEST_CASE("rational parsing") {
  CHECK(rat_from_string("3/2") == Rat(3, 2));
  CHECK(rat_from_string("-3/2") == Rat(-3, 2));
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("0.25") == Rat(1, 4));
  CHECK(rat_from_string("-0.5") == Rat(-1, 2));
  CHECK(rat_from_string("6/4") == Rat(3, 2));  // canonicalized
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1."), std::invalid_argument);
}

TEST_CASE("rational formatting round trip") {
  for (const char* s : {"0", "1", "-1", "3/2", "-22/7"}) {
    CHECK(rat_to_string(rat_from_string(s)) == s);
  }
}

TEST_CASE("doubles map to exact dyadic rationals") {
  CHECK(rat_from_double(0.25) == Rat(1, 4));
  CHECK(rat_from_double(-3.0) == Rat(-3));
  // 0.1 is not exactly representable; its image is the actual dyadic.
  Rat tenth = rat_from_double(0.1);
  CHECK(tenth != Rat(1, 10));
  CHECK(tenth.get_den() == 36028797018963968L);  // 2^55
  CHECK_THROWS_AS(rat_from_double(1.0 / 0.0), std::invalid_argument);
}

TEST_CASE("complex arithmetic and division") {
  Cx a(Rat(1), Rat(1));
  Cx b(Rat(1), Rat(-1));
  CHECK(cx_div(a, b) == Cx::unit_i());
  CHECK(a * b == Cx(Rat(2), Rat(0)));
  CHECK((a - a).is_zero());
  CHECK(a.conj() == b);
  CHECK(a.norm2() == Rat(2));
  CHECK_THROWS_AS(cx_div(a, Cx(0)), std::invalid_argument);
}

TEST_CASE("complex formatting is canonical") {
  CHECK(cx_to_string(Cx(0)) == "0");
  CHECK(cx_to_string(Cx(Rat(3, 2))) == "3/2");
  CHECK(cx_to_string(Cx::unit_i()) == "i");
  CHECK(cx_to_string(Cx(Rat(0), Rat(-1))) == "-i");
  CHECK(cx_to_string(Cx(Rat(-1), Rat(2))) == "-1+2i");
  CHECK(cx_to_string(Cx(Rat(1), Rat(-1, 2))) == "1-1/2i");
}

TEST_CASE("inf norm and scalar order") {
  CHECK(inf_norm({}) == Rat(0));
  CHECK(inf_norm({Cx(Rat(-3), Rat(1)), Cx(Rat(0), Rat(2))}) == Rat(3));
  CHECK(cx_less(Cx(0), Cx(1)));
  CHECK(cx_less(Cx(Rat(1), Rat(-1)), Cx(Rat(1), Rat(0))));
  CHECK_FALSE(cx_less(Cx(1), Cx(1)));
}

TEST_CASE("exact policy never tolerates") {
  TolerancePolicy p = TolerancePolicy::exact_mode();
  std::vector<std::string> flags;
  FlagSink sink(&flags);
  CHECK(is_zero_scalar(Cx(0), p, Rat(100), sink));
  CHECK_FALSE(is_zero_scalar(Cx(Rat(1, 1000000000000)), p, Rat(100), sink));
  CHECK(flags.empty());
}

TEST_CASE("numeric policy thresholds scale with input norm") {
  TolerancePolicy p = TolerancePolicy::numeric(Rat(1, 1000000000));  // 1e-9
  // tau = eps * (1 + 1) = 2e-9.
  std::vector<std::string> flags;
  FlagSink sink(&flags);
  CHECK(is_zero_scalar(Cx(Rat(1, 1000000000000000)), p, Rat(1), sink));  // 1e-15, below threshold
  CHECK_FALSE(is_zero_scalar(Cx(Rat(1, 1000)), p, Rat(1), sink));

  // Inside the confidence band on either side of the threshold.
  flags.clear();
  CHECK(is_zero_scalar(Cx(Rat(1, 1000000000)), p, Rat(1), sink, "band test"));  // 1e-9 < 2e-9
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].find("LOW_CONFIDENCE band test") == 0);
  CHECK(flags[0].find("treated as zero") != std::string::npos);

  flags.clear();
  CHECK_FALSE(is_zero_scalar(Cx(Rat(1, 100000000)), p, Rat(1), sink));  // 1e-8 > 2e-9
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].find("LOW_CONFIDENCE") == 0);
  CHECK(flags[0].find("treated as nonzero") != std::string::npos);

  // Nonzero representation collapsed to zero well below the band.
  flags.clear();
  Rat tiny(1);
  for (int i = 0; i < 20; ++i) tiny /= 1000;  // 1e-60
  CHECK(is_zero_scalar(Cx(tiny), p, Rat(1), sink, "residual"));
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].find("BELOW_TOLERANCE residual") == 0);
}

TEST_CASE("span builder computes canonical reduced bases") {
  SpanBuilder sb(3);
  CHECK(sb.insert({Cx(1), Cx(2), Cx(3)}));
  CHECK(sb.insert({Cx(0), Cx(1), Cx(1)}));
  CHECK_FALSE(sb.insert({Cx(1), Cx(3), Cx(4)}));  // sum of the first two
  CHECK(sb.rank() == 2);
  CHECK(sb.contains({Cx(2), Cx(5), Cx(7)}));
  CHECK_FALSE(sb.contains({Cx(0), Cx(0), Cx(1)}));

  // Fully reduced rows with unit pivots, sorted by pivot column.
  auto basis = sb.basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Cx>{Cx(1), Cx(0), Cx(1)});
  CHECK(basis[1] == std::vector<Cx>{Cx(0), Cx(1), Cx(1)});

  // The same span fed in a different order yields identical rows.
  SpanBuilder sb2(3);
  sb2.insert({Cx(1), Cx(3), Cx(4)});
  sb2.insert({Cx(1), Cx(2), Cx(3)});
  CHECK(sb2.basis() == basis);
}

TEST_CASE("span builder over complex entries") {
  SpanBuilder sb(2);
  CHECK(sb.insert({Cx::unit_i(), Cx(1)}));
  CHECK_FALSE(sb.insert({Cx(-1), Cx::unit_i()}));  // i * first row
  CHECK(sb.rank() == 1);
  CHECK(sb.insert({Cx(0), Cx::unit_i()}));
  CHECK(sb.rank() == 2);
}

TEST_CASE("numeric span rank ignores noise-level residuals") {
  TolerancePolicy p = TolerancePolicy::numeric(Rat(1, 1000000000));
  SpanBuilder sb(2, p, Rat(1));
  CHECK(sb.insert({Cx(1), Cx(0)}));
  Rat noise(1);
  for (int i = 0; i < 10; ++i) noise /= 1000;  // 1e-30
  CHECK_FALSE(sb.insert({Cx(1), Cx(noise)}));
  CHECK(sb.rank() == 1);
  // The same vector is genuinely independent in exact mode.
  SpanBuilder ex(2);
  ex.insert({Cx(1), Cx(0)});
  CHECK(ex.insert({Cx(1), Cx(noise)}));
}

TEST_CASE("intersection dimension") {
  std::vector<std::vector<Cx>> u = {{Cx(1), Cx(0), Cx(0)}, {Cx(0), Cx(1), Cx(0)}};
  std::vector<std::vector<Cx>> v = {{Cx(0), Cx(1), Cx(1)}, {Cx(0), Cx(0), Cx(1)}};
  CHECK(intersection_dim(3, u, v) == 1);  // spanned by e2
  CHECK(intersection_dim(3, u, u) == 2);
  CHECK(intersection_dim(3, u, {}) == 0);
}
