#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lie/chevalley.hpp"
#include "lie/lemma_lab.hpp"
#include "lie/rootsys.hpp"

using namespace lie;

namespace {

Root R(std::vector<int> c) { return Root(std::move(c)); }

std::vector<std::vector<int>> all_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < rank; ++i) {
      if (mask & (1u << i)) theta.push_back(i);
    }
    out.push_back(theta);
  }
  return out;
}

bool mentions(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("derived weights reproduce the frozen tables") {
  RootSystem a2 = RootSystem::build(DynkinType::parse("A2"));

  SUBCASE("empty theta counts simple coefficients") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    REQUIRE(lam.values.size() == 3);
    CHECK(lam.values.at(R({1, 0})) == 1);
    CHECK(lam.values.at(R({0, 1})) == 1);
    CHECK(lam.values.at(R({1, 1})) == 2);
    CHECK(lab::check_lambda_system(a2, lam).pass);
  }
  SUBCASE("theta covering the second simple root removes it from the domain") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {1});
    REQUIRE(lam.values.size() == 2);
    CHECK(lam.values.at(R({1, 0})) == 1);
    CHECK(lam.values.at(R({1, 1})) == 1);
    CHECK(lam.values.count(R({0, 1})) == 0);
    CHECK(lab::check_lambda_system(a2, lam).pass);
  }
  SUBCASE("full theta leaves an empty domain") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {0, 1});
    CHECK(lam.values.empty());
    CHECK(lab::check_lambda_system(a2, lam).pass);
  }
  SUBCASE("every flag choice on the rank-3 types validates") {
    for (const char* name : {"A3", "B3", "C3", "G2"}) {
      RootSystem rs = RootSystem::build(DynkinType::parse(name));
      for (const auto& theta : all_subsets(rs.rank())) {
        lab::LemmaReport rep = lab::check_lambda_system(rs, lab::lambda_from_theta(rs, theta));
        CHECK(rep.lemma == "lambda-system");
        CHECK(rep.pass);
        CHECK(rep.counterexample.empty());
      }
    }
  }
}

TEST_CASE("weight validation catches each defect class") {
  RootSystem a2 = RootSystem::build(DynkinType::parse("A2"));

  SUBCASE("missing value") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    lam.values.erase(R({1, 1}));
    lab::LemmaReport rep = lab::check_lambda_system(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "missing value"));
    CHECK(mentions(rep.counterexample, "[1,1]"));
  }
  SUBCASE("value keyed inside the span of theta") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {1});
    lam.values[R({0, 1})] = Rat(1);
    lab::LemmaReport rep = lab::check_lambda_system(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "span of theta"));
  }
  SUBCASE("value keyed by a non-root") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    lam.values[R({2, 1})] = Rat(1);
    lab::LemmaReport rep = lab::check_lambda_system(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "not a positive root"));
  }
  SUBCASE("value keyed by a negative root") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    lam.values[R({-1, 0})] = Rat(1);
    lab::LemmaReport rep = lab::check_lambda_system(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "not a positive root"));
  }
  SUBCASE("weight that is not positive") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    lam.values[R({1, 0})] = Rat(0);
    lab::LemmaReport rep = lab::check_lambda_system(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "not positive"));
  }
  SUBCASE("weight that breaks additivity") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    lam.values[R({1, 1})] = Rat(3);
    lab::LemmaReport rep = lab::check_lambda_system(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "lambda([1,1]) = 3"));
    CHECK(mentions(rep.counterexample, "= 2"));
  }
  SUBCASE("theta index out of range") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2, {});
    lam.theta = {7};
    CHECK_THROWS_AS(lab::check_lambda_system(a2, lam), std::invalid_argument);
    CHECK_THROWS_AS(lab::lambda_from_theta(a2, {-1}), std::invalid_argument);
  }
}

TEST_CASE("the invariant two-form has the pinned pairing blocks") {
  SUBCASE("rank one") {
    LieAlgebra a1 = LieAlgebra::build(DynkinType::parse("A1"));
    lab::TwoForm form = lab::build_two_form(a1, lab::lambda_from_theta(a1.roots(), {}));
    REQUIRE(form.m_basis.size() == 2);
    CHECK(form.m_basis[0].to_string() == "A_[1]");
    CHECK(form.m_basis[1].to_string() == "S_[1]");
    CHECK(form.matrix[0][1] == Rat(4));
    CHECK(form.matrix[1][0] == Rat(-4));
  }
  SUBCASE("rank two with a doubled weight on the long diagonal") {
    LieAlgebra a2 = LieAlgebra::build(DynkinType::parse("A2"));
    lab::TwoForm form = lab::build_two_form(a2, lab::lambda_from_theta(a2.roots(), {}));
    REQUIRE(form.m_basis.size() == 6);
    CHECK(form.matrix[0][1] == Rat(6));
    CHECK(form.matrix[2][3] == Rat(6));
    CHECK(form.matrix[4][5] == Rat(12));
    for (int p = 0; p < 6; ++p) {
      for (int q = 0; q < 6; ++q) {
        CHECK(form.matrix[p][q] == -form.matrix[q][p]);
        if (p / 2 != q / 2) CHECK(form.matrix[p][q] == 0);
      }
    }
  }
  SUBCASE("block weights agree with the pairing-rescaled lambda everywhere") {
    LieAlgebra b3 = LieAlgebra::build(DynkinType::parse("B3"));
    lab::LambdaSystem lam = lab::lambda_from_theta(b3.roots(), {2});
    lab::TwoForm form = lab::build_two_form(b3, lam);
    for (std::size_t k = 0; k < form.m_basis.size(); k += 2) {
      const Root& a = form.m_basis[k].root;
      CHECK(form.m_basis[k].kind == 'A');
      CHECK(form.m_basis[k + 1].kind == 'S');
      CHECK(form.m_basis[k + 1].root == a);
      CHECK(form.matrix[k][k + 1] == b3.killing_pairing(a) * lam.values.at(a));
    }
  }
  SUBCASE("a weight system for the wrong theta is rejected") {
    LieAlgebra a2 = LieAlgebra::build(DynkinType::parse("A2"));
    lab::LambdaSystem lam = lab::lambda_from_theta(a2.roots(), {});
    lam.theta = {0};
    CHECK_THROWS_AS(lab::build_two_form(a2, lam), std::invalid_argument);
    CHECK_THROWS_AS(lab::check_omega(a2, lam), std::invalid_argument);
  }
  SUBCASE("a non-positive weight is rejected") {
    LieAlgebra a2 = LieAlgebra::build(DynkinType::parse("A2"));
    lab::LambdaSystem lam = lab::lambda_from_theta(a2.roots(), {});
    lam.values[R({1, 0})] = Rat(-1);
    CHECK_THROWS_AS(lab::build_two_form(a2, lam), std::invalid_argument);
  }
}

TEST_CASE("isotropy invariance and closedness hold for derived weights") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    LieAlgebra lie = LieAlgebra::build(DynkinType::parse(name));
    for (const auto& theta : all_subsets(lie.rank())) {
      lab::LemmaReport rep = lab::check_omega(lie, lab::lambda_from_theta(lie.roots(), theta));
      CHECK(rep.lemma == "omega-form");
      CHECK(rep.algebra == name);
      CHECK(rep.pass);
      CHECK(rep.counterexample.empty());
    }
  }
}

TEST_CASE("corrupted weights and matrices are detected") {
  LieAlgebra a2 = LieAlgebra::build(DynkinType::parse("A2"));

  SUBCASE("breaking additivity breaks closedness on a named triple") {
    lab::LambdaSystem lam = lab::lambda_from_theta(a2.roots(), {});
    lam.values[R({1, 1})] = Rat(3);
    lab::LemmaReport rep = lab::check_omega(a2, lam);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "cyclic sum"));
    CHECK(mentions(rep.counterexample, "[1,0]"));
    CHECK(mentions(rep.counterexample, "[0,1]"));
    CHECK(mentions(rep.counterexample, "[1,1]"));
  }
  SUBCASE("a sign-corrupted diagonal block breaks isotropy invariance") {
    lab::TwoForm form = lab::build_two_form(a2, lab::lambda_from_theta(a2.roots(), {}));
    form.matrix[0][1] = -form.matrix[0][1];
    lab::LemmaReport rep = lab::check_omega_form(a2, form);
    CHECK_FALSE(rep.pass);
    CHECK(mentions(rep.counterexample, "Omega([Z,X]_m, Y)"));
  }
  SUBCASE("a spurious cross-block pairing is detected") {
    lab::TwoForm form = lab::build_two_form(a2, lab::lambda_from_theta(a2.roots(), {}));
    form.matrix[0][2] = Rat(1);
    form.matrix[2][0] = Rat(-1);
    CHECK_FALSE(lab::check_omega_form(a2, form).pass);
  }
  SUBCASE("a malformed matrix is rejected") {
    lab::TwoForm form = lab::build_two_form(a2, lab::lambda_from_theta(a2.roots(), {}));
    form.matrix.pop_back();
    CHECK_THROWS_AS(lab::check_omega_form(a2, form), std::invalid_argument);
  }
}

TEST_CASE("orbit types match the flag-manifold classification") {
  LieAlgebra a2 = LieAlgebra::build(DynkinType::parse("A2"));

  SUBCASE("rank-two spot checks") {
    CHECK(lab::check_orbit_type(a2, {0}, R({1, 0})) == lab::OrbitType::Point);
    CHECK(lab::check_orbit_type(a2, {0}, R({0, 1})) == lab::OrbitType::Sphere);
    CHECK(lab::check_orbit_type(a2, {0}, R({1, 1})) == lab::OrbitType::Sphere);
    for (const Root& beta : a2.roots().positive_roots()) {
      CHECK(lab::check_orbit_type(a2, {0, 1}, beta) == lab::OrbitType::Point);
      CHECK(lab::check_orbit_type(a2, {}, beta) == lab::OrbitType::Sphere);
    }
  }
  SUBCASE("rank-three spot checks") {
    LieAlgebra b3 = LieAlgebra::build(DynkinType::parse("B3"));
    CHECK(lab::check_orbit_type(b3, {0, 1}, R({1, 1, 0})) == lab::OrbitType::Point);
    CHECK(lab::check_orbit_type(b3, {0, 1}, R({0, 1, 1})) == lab::OrbitType::Sphere);
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(lab::check_orbit_type(a2, {0}, R({-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(lab::check_orbit_type(a2, {0}, R({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(lab::check_orbit_type(a2, {5}, R({1, 0})), std::invalid_argument);
  }
  SUBCASE("the aggregated grid counts both kinds") {
    lab::LemmaReport rep = lab::check_orbit_grid(a2, {0});
    CHECK(rep.pass);
    CHECK(rep.lemma == "orbit-type-grid");
    CHECK(mentions(rep.params, "points=1"));
    CHECK(mentions(rep.params, "spheres=2"));
  }
}

TEST_CASE("highest-root centralizer facts hold on the small types") {
  for (const char* name : {"A2", "A3", "B3", "C3", "D4", "G2"}) {
    lab::LemmaReport rep = lab::check_highest_root_centralizer(LieAlgebra::build(DynkinType::parse(name)));
    CHECK(rep.lemma == "highest-root-centralizer");
    CHECK(rep.pass);
  }
  // A3 exercises the orthogonal loop: the middle simple root is
  // orthogonal to the highest root, so the checks there are not vacuous.
  RootSystem a3 = RootSystem::build(DynkinType::parse("A3"));
  CHECK(a3.form(R({0, 1, 0}), a3.highest_root()) == 0);
}

TEST_CASE("eigenspace positivity holds for dominant roots and rejects others") {
  SUBCASE("rank one") {
    LieAlgebra a1 = LieAlgebra::build(DynkinType::parse("A1"));
    lab::LemmaReport rep = lab::check_eigenspace_positivity(a1, R({1}));
    CHECK(rep.pass);
    CHECK(rep.params == "mu=[1]");
    CHECK(a1.dual_form(R({1}), R({1})) == Rat(1, 2));
  }
  SUBCASE("both dominant roots of a doubly-laced type") {
    LieAlgebra b3 = LieAlgebra::build(DynkinType::parse("B3"));
    const auto& dom = b3.roots().dominant_roots();
    REQUIRE(dom.size() == 2);
    for (const Root& mu : dom) {
      CHECK(lab::check_eigenspace_positivity(b3, mu).pass);
    }
  }
  SUBCASE("non-dominant and invalid roots are rejected") {
    LieAlgebra a2 = LieAlgebra::build(DynkinType::parse("A2"));
    CHECK_THROWS_AS(lab::check_eigenspace_positivity(a2, R({1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(lab::check_eigenspace_positivity(a2, R({5, 5})), std::invalid_argument);
  }
}

TEST_CASE("dominant roots have full support on every small type") {
  for (const char* name : {"A1", "A4", "B2", "B4", "C3", "D4", "F4", "G2"}) {
    lab::LemmaReport rep = lab::check_dominant_support(RootSystem::build(DynkinType::parse(name)));
    CHECK(rep.lemma == "dominant-support");
    CHECK(rep.algebra == name);
    CHECK(rep.pass);
  }
}

TEST_CASE("grid parsing is strict and the full run is reproducible") {
  SUBCASE("parsing") {
    lab::GridSpec grid = lab::GridSpec::parse("type=A..G,rank<=4,theta=all");
    CHECK(grid.family_lo == 'A');
    CHECK(grid.family_hi == 'G');
    CHECK(grid.min_rank == 1);
    CHECK(grid.max_rank == 4);
    CHECK(grid.all_theta);

    lab::GridSpec single = lab::GridSpec::parse("type=B3,theta=none");
    REQUIRE(single.types().size() == 1);
    CHECK(single.types()[0] == DynkinType::parse("B3"));
    CHECK_FALSE(single.all_theta);

    CHECK(lab::GridSpec::parse("rank<=2,theta=all").types().size() == 5);

    CHECK_THROWS_AS(lab::GridSpec::parse("type=Q5"), std::invalid_argument);
    CHECK_THROWS_AS(lab::GridSpec::parse("frobnicate"), std::invalid_argument);
    CHECK_THROWS_AS(lab::GridSpec::parse("theta=some"), std::invalid_argument);
    CHECK_THROWS_AS(lab::GridSpec::parse("type=G..A"), std::invalid_argument);
  }
  SUBCASE("two runs agree report by report") {
    lab::GridSpec grid = lab::GridSpec::parse("type=A..G,rank<=2,theta=all");
    std::vector<lab::LemmaReport> first = lab::run_all(grid);
    std::vector<lab::LemmaReport> second = lab::run_all(grid);
    REQUIRE(first.size() == 72);
    REQUIRE(second.size() == first.size());
    for (std::size_t k = 0; k < first.size(); ++k) {
      CHECK(first[k].lemma == second[k].lemma);
      CHECK(first[k].algebra == second[k].algebra);
      CHECK(first[k].params == second[k].params);
      CHECK(first[k].pass == second[k].pass);
      CHECK(first[k].counterexample == second[k].counterexample);
      CHECK(first[k].pass);
    }
  }
}
