#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <limits>

#include "photofpt/params.hpp"

using namespace photofpt;

TEST_CASE("DetectorParams rejects values outside their domain") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_NOTHROW(DetectorParams{}.validate());
    CHECK_THROWS_AS((DetectorParams{0.0, 1.0, 0.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((DetectorParams{1.0, 0.0, 0.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((DetectorParams{1.0, 1.0, -1e-12, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((DetectorParams{1.0, 1.0, 0.0, 0.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((DetectorParams{nan, 1.0, 0.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((DetectorParams{1.0, 1.0, INFINITY, 1.0}.validate()), InvalidParameter);
}

TEST_CASE("dimensionless intensity") {
    CHECK_THROWS_AS(DimensionlessIntensity(-0.5), InvalidParameter);
    CHECK(DimensionlessIntensity().value() == 0.0);

    const DetectorParams p{2.0, 0.5, 3.0, 1.0};
    CHECK(p.x().value() == doctest::Approx(3.0 * 2.0 / 0.25).epsilon(1e-15));
    CHECK(p.time_unit() == doctest::Approx(16.0).epsilon(1e-15));

    SUBCASE("from_x round-trips for any (e_m, sigma)") {
        for (double em : {0.3, 1.0, 7.0}) {
            for (double s : {0.2, 1.0, 3.0}) {
                const auto q = DetectorParams::from_x(DimensionlessIntensity(2.5), em, s, 4.0);
                CHECK(q.x().value() == doctest::Approx(2.5).epsilon(1e-14));
                CHECK(q.i_s == doctest::Approx(2.5 * s * s / em).epsilon(1e-15));
                CHECK(q.cross_section == 4.0);
            }
        }
    }
}

TEST_CASE("SeriesControl") {
    CHECK_NOTHROW(SeriesControl{}.validate());
    SeriesControl c;
    CHECK(c.n_images == 30);
    CHECK(c.kl_max == 60);
    CHECK(c.abs_tol == 1e-12);

    c.n_images = 0;
    CHECK_THROWS_AS(c.validate(), InvalidParameter);
    c = {};
    c.kl_max = 0;
    CHECK_THROWS_AS(c.validate(), InvalidParameter);
    c = {};
    c.rel_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), InvalidParameter);

    const SeriesControl d;
    CHECK(d.accepts(1.0, 1e-10));
    CHECK_FALSE(d.accepts(1.0, 1e-9));
    CHECK(d.accepts(0.0, 1e-12));
    CHECK_FALSE(d.accepts(0.0, 2e-12));
}

TEST_CASE("SeriesValue::require") {
    SeriesValue ok{1.5, 0.0, 3, true};
    CHECK(ok.require("x") == 1.5);
    SeriesValue bad{1.5, 1.0, 3, false};
    CHECK_THROWS_AS(bad.require("x"), TruncationError);
}

TEST_CASE("quantum detector constants") {
    CHECK(QuantumDetectorParams{0.5, 2.0}.equivalent_threshold() == 1.0);
    CHECK_THROWS_AS((QuantumDetectorParams{0.0, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((QuantumDetectorParams{1.5, 1.0}.validate()), InvalidParameter);
    CHECK_THROWS_AS((QuantumDetectorParams{1.0, -1.0}.validate()), InvalidParameter);
}
