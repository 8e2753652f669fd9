#include "oracles.hpp"

#include <evidence/likelihood.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace evidence;

namespace {

const LocationNormalData kData(2, 1.47, 1.0);

double dens1_mass(double psi, int sgn, const LocationNormalData& d) {
    const double upper = psi + 14.0 * d.standard_error();
    return oracle::simpson(
        [&](double t) { return abs_mean_density(psi, sgn, d.with_xbar(t)); }, 0.0, upper, 40000);
}

}  // namespace

TEST_SUITE("likelihood") {

TEST_CASE("profile and integrated argmaxes agree at |xbar|") {
    const auto grid = default_abs_grid(kData, 0.01);
    const LikelihoodCurve prof = profile_curve(kData, grid);
    const LikelihoodCurve integ = integrated_curve(kData, 0.5, grid);
    CHECK(std::abs(prof.argmax_psi() - 1.47) <= 0.01);
    CHECK(std::abs(integ.argmax_psi() - 1.47) <= 0.01);
    CHECK(prof.kind == CurveKind::profile);
    CHECK(integ.kind == CurveKind::integrated);
}

TEST_CASE("relative curve peaks at one") {
    const auto grid = default_abs_grid(kData, 0.01);
    const LikelihoodCurve rel = integrated_curve(kData, 0.5, grid).relative();
    CHECK(*std::max_element(rel.value.begin(), rel.value.end()) == 1.0);
    CHECK(rel.kind == CurveKind::relative);
}

TEST_CASE("default grid covers |xbar| + 6 se") {
    const auto grid = default_abs_grid(kData, 0.01);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() >= 1.47 + 6.0 / std::sqrt(2.0));
    CHECK_THROWS_AS(default_abs_grid(kData, 0.0), std::domain_error);
}

TEST_CASE("density of |xbar| integrates to one") {
    for (double psi : {0.0, 0.3, 1.47, 3.0}) {
        INFO("psi = " << psi);
        CHECK(dens1_mass(psi, 1, kData) == doctest::Approx(1.0).epsilon(1e-9));
    }
    CHECK(dens1_mass(0.8, 1, LocationNormalData(25, 0.0, 2.0)) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("density of |xbar| does not depend on the sign") {
    for (double psi : {0.2, 1.0, 2.5}) {
        CHECK(abs_mean_density(psi, 1, kData) == doctest::Approx(abs_mean_density(psi, -1, kData)));
    }
    CHECK_THROWS_AS(abs_mean_density(1.0, 0, kData), std::domain_error);
    CHECK_THROWS_AS(abs_mean_density(-1.0, 1, kData), std::domain_error);
}

TEST_CASE("integrated likelihood is not proportional to the profile") {
    const auto grid = default_abs_grid(kData, 0.01);
    double lo = INFINITY;
    double hi = 0.0;
    for (double psi : grid) {
        const double prof = profile_likelihood_abs(kData, psi);
        if (prof < 1e-12) continue;
        const double r = integrated_likelihood_abs(kData, psi, 0.5) / prof;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(hi / lo > 1.01);
}

TEST_CASE("integrated likelihood tends to the location likelihood as p -> 1") {
    for (double psi : {0.0, 0.7, 1.47, 2.4}) {
        CHECK(integrated_likelihood_abs(kData, psi, 1.0 - 1e-12) ==
              doctest::Approx(relative_likelihood_location(kData, psi)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(integrated_likelihood_abs(kData, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(integrated_likelihood_abs(kData, 1.0, 1.0), std::domain_error);
}

TEST_CASE("likelihood regions sit at 1/r and nest") {
    const IntervalSet r8 = likelihood_region(kData, kRoyallVeryStrong);
    const IntervalSet r32 = likelihood_region(kData, kRoyallQuiteStrong);
    REQUIRE(r8.size() == 1);
    CHECK(relative_likelihood_location(kData, r8[0].lo) == doctest::Approx(1.0 / 8.0));
    CHECK(relative_likelihood_location(kData, r8[0].hi) == doctest::Approx(1.0 / 8.0));
    CHECK(relative_likelihood_location(kData, r32[0].hi) == doctest::Approx(1.0 / 32.0));
    CHECK(r8.subset_of(r32));
    CHECK(likelihood_region(kData, 1.0).empty());
    CHECK_THROWS_AS(likelihood_region(kData, 0.5), std::domain_error);
}

TEST_CASE("scale-normal estimates") {
    const ScaleNormalMles m = scale_normal_mles(ScaleNormalData(10, 12.5, 5));
    CHECK(m.mle == doctest::Approx(1.25));
    CHECK(m.profile_mle == doctest::Approx(12.5 / 15.0));
    CHECK(m.predictive_y == 0.0);
    CHECK(scale_normal_mles(ScaleNormalData(4, 8.0, 0)).profile_mle == doctest::Approx(2.0));
    CHECK_THROWS_AS(ScaleNormalData(0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(ScaleNormalData(3, -1.0, 1), std::domain_error);
    CHECK_THROWS_AS(ScaleNormalData(3, 1.0, -1), std::domain_error);
}

TEST_CASE("curves csv") {
    const std::vector<double> grid{0.0, 0.5, 1.0};
    std::ostringstream os;
    write_curves_csv(os, {profile_curve(kData, grid), integrated_curve(kData, 0.5, grid)});
    const std::string s = os.str();
    CHECK(s.rfind("psi,value,kind\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 7);
    CHECK(s.find("0.5,") != std::string::npos);
    CHECK(s.find(",integrated\n") != std::string::npos);
}

}  // TEST_SUITE
