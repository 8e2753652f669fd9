#include "oracles.hpp"

#include <evidence/interval_set.hpp>
#include <evidence/monte_carlo.hpp>
#include <evidence/numeric.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

using namespace evidence;

TEST_SUITE("numeric") {

TEST_CASE("oracle self-check: series and continued fraction meet") {
    for (long double x : {2.4L, 2.5L, 2.6L}) {
        CHECK(oracle::rel_close(double(1.0L - oracle::erf_series(x)),
                                double(oracle::erfc_cf(x)), 1e-12));
    }
}

TEST_CASE("normal_cdf matches the oracle") {
    for (double z = -9.0; z <= 9.0; z += 0.125) {
        INFO("z = " << z);
        CHECK(oracle::rel_close(normal_cdf(z), oracle::phi(z), 1e-13));
        CHECK(oracle::rel_close(normal_sf(z), oracle::upper_tail(z), 1e-13));
    }
}

TEST_CASE("normal_cdf symmetry") {
    for (double z = 0.0; z <= 8.0; z += 0.1) {
        CHECK(normal_cdf(z) + normal_cdf(-z) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(normal_sf(z) == normal_cdf(-z));
    }
    CHECK(normal_cdf(0.0) == 0.5);
}

TEST_CASE("tail value at z = 5") {
    CHECK(oracle::rel_close(2.0 * normal_sf(5.0), 2.0 * oracle::upper_tail(5.0), 1e-13));
}

TEST_CASE("normal_quantile inverts the cdf") {
    for (double p : {1e-12, 1e-8, 1e-4, 0.01, 0.025, 0.3, 0.5, 0.7, 0.975, 0.99, 1 - 1e-8}) {
        INFO("p = " << p);
        CHECK(normal_quantile(p) == doctest::Approx(oracle::quantile(p)).epsilon(1e-10));
    }
    for (double z = -8.0; z <= 3.0; z += 0.25) {
        CHECK(normal_quantile(normal_cdf(z)) == doctest::Approx(z).epsilon(1e-12));
    }
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
    CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
}

TEST_CASE("non-finite input is rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(normal_cdf(nan), std::domain_error);
    CHECK_THROWS_AS(normal_pdf(nan), std::domain_error);
    CHECK_THROWS_AS(NormalParams(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(NormalParams(0.0, -1.0), std::domain_error);
}

TEST_CASE("normal_pdf") {
    CHECK(normal_pdf(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)));
    CHECK(normal_pdf(1.3) == doctest::Approx(oracle::normal_density(1.3, 0.0, 1.0)));
}

TEST_CASE("normal_interval_mass uses the accurate tail") {
    const NormalParams law(1.0, 2.0);
    CHECK(normal_interval_mass(-1.0, 3.0, law) ==
          doctest::Approx(oracle::phi(1.0) - oracle::phi(-1.0)).epsilon(1e-14));
    // Far right tail: 1 - cdf would lose every digit.
    const double far = normal_interval_mass(1.0 + 2.0 * 12.0, 1.0 + 2.0 * 12.5, law);
    CHECK(oracle::rel_close(far, oracle::upper_tail(12.0) - oracle::upper_tail(12.5), 1e-12));
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(normal_interval_mass(-inf, inf, law) == 1.0);
    CHECK(normal_interval_mass(1.0, inf, law) == doctest::Approx(0.5));
    CHECK(normal_interval_mass(2.0, 1.0, law) == 0.0);
}

TEST_CASE("integrate_simpson") {
    CHECK(integrate_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1000) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Exact for cubics, odd interval counts are rounded up.
    CHECK(integrate_simpson([](double x) { return x * x * x; }, 0.0, 2.0, 3) ==
          doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("rng streams are deterministic and distinct") {
    Rng a = make_rng(RngSeed{7}, 3, 2);
    Rng b = make_rng(RngSeed{7}, 3, 2);
    Rng c = make_rng(RngSeed{7}, 4, 2);
    Rng d = make_rng(RngSeed{7}, 3, 1);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
    CHECK(rng_name().find("mt19937_64") != std::string_view::npos);
}

TEST_CASE("sample_normal moments") {
    const auto v = sample_normal(NormalParams(3.0, 2.0), 100000, RngSeed{11});
    const McMean m = make_mean(v);
    CHECK(std::abs(m.mean - 3.0) < 5.0 * m.std_error);
    CHECK(m.std_error * std::sqrt(100000.0) == doctest::Approx(2.0).epsilon(0.02));
    CHECK_THROWS_AS(sample_normal(NormalParams(0.0, 1.0), 0, RngSeed{1}), std::domain_error);
}

TEST_CASE("run_blocks is independent of the worker count") {
    auto body = [](Rng& rng, std::uint64_t count) {
        HitCount h;
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (std::uint64_t i = 0; i < count; ++i) h.hits += u(rng) < 0.3;
        h.reps = count;
        return h;
    };
    const auto one = run_blocks<HitCount>(RngSeed{5}, 9, 50000, 1, body);
    const auto four = run_blocks<HitCount>(RngSeed{5}, 9, 50000, 4, body);
    CHECK(one.hits == four.hits);
    CHECK(one.reps == 50000);
}

TEST_CASE("proportion standard error") {
    const McProbability p = make_proportion(25, 100);
    CHECK(p.estimate == 0.25);
    CHECK(p.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 100.0)));
}

}  // TEST_SUITE

TEST_SUITE("interval_set") {

TEST_CASE("adjacent pieces merge") {
    IntervalSet s;
    s.add(0.0, 1.0);
    s.add(2.0, 3.0);
    s.add(1.0, 2.0);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Interval{0.0, 3.0});
}

TEST_CASE("disjoint pieces stay sorted") {
    IntervalSet s;
    s.add(5.0, 6.0);
    s.add(0.0, 1.0);
    s.add(2.0, 3.0);
    REQUIRE(s.size() == 3);
    CHECK(s[0].lo == 0.0);
    CHECK(s[2].hi == 6.0);
    CHECK(s.total_length() == doctest::Approx(3.0));
}

TEST_CASE("half-open membership") {
    IntervalSet s;
    s.add(0.0, 1.0);
    CHECK(s.contains(0.0));
    CHECK(s.contains(0.5));
    CHECK_FALSE(s.contains(1.0));
    CHECK_FALSE(s.contains(-0.1));
}

TEST_CASE("subset") {
    IntervalSet big;
    big.add(0.0, 10.0);
    IntervalSet small;
    small.add(1.0, 2.0);
    small.add(3.0, 4.0);
    CHECK(small.subset_of(big));
    CHECK_FALSE(big.subset_of(small));
    CHECK(IntervalSet{}.subset_of(small));
}

TEST_CASE("empty piece is rejected") {
    IntervalSet s;
    CHECK_THROWS_AS(s.add(1.0, 1.0), std::domain_error);
}

}  // TEST_SUITE
