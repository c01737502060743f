#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spirallike/domain.hpp"
#include "spirallike/spiral.hpp"

using namespace spirallike;

namespace {

constexpr double pi = 3.14159265358979323846;

// Parameter pairs spanning both signs of lambda and a range of orders.
const std::vector<SpiralParams> param_grid = {
    SpiralParams(0.0, 0.25), SpiralParams(0.0, 0.8),   SpiralParams(0.3, 0.5),
    SpiralParams(-0.3, 0.5), SpiralParams(0.6, 0.8),   SpiralParams(-0.6, 0.8),
    SpiralParams(0.3, 0.7),  SpiralParams(-0.25, 0.4), SpiralParams(0.1, 0.25),
};

}  // namespace

TEST_CASE("SpiralParams validation") {
    CHECK_THROWS_AS(SpiralParams(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SpiralParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(SpiralParams(0.0, -0.5), std::invalid_argument);
    // |lambda| < pi*alpha/2 is required, not just |lambda| < pi/2
    CHECK_THROWS_AS(SpiralParams(0.5, 0.3), std::invalid_argument);
    CHECK_NOTHROW(SpiralParams(0.3, 0.7));
    const SpiralParams p(0.3, 0.7);
    CHECK(p.tan_half_order() == doctest::Approx(std::tan(0.35 * pi)).epsilon(1e-15));
    CHECK(p.dilatation_bound() == doctest::Approx(std::sin(0.35 * pi)).epsilon(1e-15));
}

TEST_CASE("domain constants") {
    SUBCASE("lambda = 0 degenerates to the symmetric case") {
        for (double alpha : {0.25, 0.5, 0.8}) {
            const DomainConstants dc = constants(SpiralParams(0.0, alpha));
            CHECK(dc.a == doctest::Approx(std::tan(pi * alpha / 2)).epsilon(1e-15));
            CHECK(dc.b == doctest::Approx(-dc.a).epsilon(1e-15));
            CHECK(dc.theta_star == doctest::Approx(pi).epsilon(1e-14));
        }
    }
    SUBCASE("signs and algebraic identities") {
        for (const SpiralParams& p : param_grid) {
            const DomainConstants dc = constants(p);
            CHECK(dc.a > 0.0);
            CHECK(dc.b < 0.0);
            CHECK(dc.theta_star > 0.0);
            CHECK(dc.theta_star < two_pi);
            // A + B = -sin(2*lambda)
            CHECK(dc.a + dc.b == doctest::Approx(-std::sin(2.0 * p.lambda())).epsilon(1e-13));
            // theta* = pi * (1 - tan(lambda) / tan(pi*alpha/2))
            const double closed =
                pi * (1.0 - std::tan(p.lambda()) / std::tan(pi * p.alpha() / 2));
            CHECK(dc.theta_star == doctest::Approx(closed).epsilon(1e-12));
        }
    }
}

TEST_CASE("standard radius") {
    for (const SpiralParams& p : param_grid) {
        const DomainConstants dc = constants(p);
        CHECK(standard_radius(p, 0.0) == 1.0);
        // the tip radius, where the two exponential branches cross
        CHECK(standard_radius(p, dc.theta_star) ==
              doctest::Approx(std::exp(dc.b * dc.theta_star)).epsilon(1e-13));
        // crossover identity defining theta*
        CHECK(std::abs(std::exp(dc.b * dc.theta_star) -
                       std::exp(-dc.a * (two_pi - dc.theta_star))) < 1e-12);
        // continuity at the crossover
        const double eps = 1e-9;
        CHECK(std::abs(standard_radius(p, dc.theta_star - eps) -
                       standard_radius(p, dc.theta_star + eps)) < 1e-8);
        // periodicity
        CHECK(standard_radius(p, 1.0) ==
              doctest::Approx(standard_radius(p, 1.0 + two_pi)).epsilon(1e-14));
    }
}

TEST_CASE("standard boundary parametrization") {
    for (const SpiralParams& p : param_grid) {
        const DomainConstants dc = constants(p);
        CHECK(standard_boundary(p, 0.0) == Complex(1.0, 0.0));

        // modulus agrees with the radius formula across the window
        for (int i = -40; i <= 40; ++i) {
            const double theta =
                dc.theta_star - two_pi + (static_cast<double>(i + 40) / 80.0) * two_pi;
            const Complex b = standard_boundary(p, theta);
            CHECK(std::abs(std::abs(b) - standard_radius(p, theta)) < 1e-12);
        }

        // the curve closes: both window ends give the tip
        const Complex tip_pos = standard_boundary(p, dc.theta_star);
        const Complex tip_neg = standard_boundary(p, dc.theta_star - two_pi);
        CHECK(std::abs(tip_pos - tip_neg) < 1e-12);

        // tip coincides with the spiral-coordinate form
        const Complex tip =
            spiral_point(p.angle(), {std::exp(dc.b * dc.theta_star), dc.theta_star});
        CHECK(std::abs(tip_pos - tip) < 1e-12);

        // angles outside the window reduce mod 2*pi into it
        CHECK(std::abs(standard_boundary(p, dc.theta_star + two_pi) - tip_pos) < 1e-12);
    }
}

TEST_CASE("RadiusFunction variants evaluate") {
    const SpiralParams p(0.3, 0.7);
    const RadiusFunction u = RadiusFunction::standard_u(p);
    const RadiusFunction v = RadiusFunction::standard_v(p);
    const RadiusFunction c = RadiusFunction::constant(2.5);

    CHECK(u.kind() == RadiusKind::standard_u);
    CHECK(c.radius(1.7) == 2.5);
    CHECK(c.log_radius(-3.0) == doctest::Approx(std::log(2.5)).epsilon(1e-15));
    CHECK_THROWS_AS(RadiusFunction::constant(0.0), std::invalid_argument);
    CHECK_THROWS_AS(RadiusFunction::constant(-1.0), std::invalid_argument);

    for (double theta : {0.0, 0.5, 2.0, 4.0, 6.0}) {
        CHECK(u.radius(theta) == doctest::Approx(standard_radius(p, theta)).epsilon(1e-14));
    }

    // V's radius: min of the two exponential branches
    const DomainConstants dc = constants(p);
    for (double theta : {0.3, 1.0, 3.0, 5.5}) {
        const double expected =
            std::min(std::exp(dc.a * theta), std::exp(dc.b * (theta - two_pi)));
        CHECK(v.radius(theta) == doctest::Approx(expected).epsilon(1e-13));
    }

    // sampled variant needs at least 8 finite knots
    CHECK_THROWS_AS(RadiusFunction::sampled({0.0, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(
        RadiusFunction::sampled({0.0, 0.1, 0.0, 0.1, 0.0, 0.1, 0.0,
                                 std::numeric_limits<double>::infinity()}),
        std::invalid_argument);

    CHECK(u.params().alpha() == 0.7);
    CHECK_THROWS_AS(c.params(), std::logic_error);
}

TEST_CASE("sampled profile interpolates linearly and hits knots exactly") {
    std::vector<double> values(16);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> val(-0.4, 0.4);
    for (double& x : values) x = val(rng);
    const RadiusFunction r = RadiusFunction::sampled(values);
    REQUIRE(r.knot_count() == 16);

    const double h = two_pi / 16.0;
    for (std::size_t j = 0; j < 16; ++j) {
        // knot evaluation must reproduce the stored value bit for bit
        CHECK(r.log_radius(r.breakpoints()[j]) == values[j]);
        // midpoints are the average of the adjacent knots
        const double mid = (static_cast<double>(j) + 0.5) * h;
        const double expect = 0.5 * (values[j] + values[(j + 1) % 16]);
        CHECK(r.log_radius(mid) == doctest::Approx(expect).epsilon(1e-12));
    }

    // periodic wrap to the first knot
    CHECK(std::abs(r.log_radius(two_pi - 1e-13) - values[0]) < 1e-9);
}

TEST_CASE("slope queries and ridge handling") {
    const SpiralParams p(0.3, 0.7);
    const DomainConstants dc = constants(p);
    const RadiusFunction u = RadiusFunction::standard_u(p);

    REQUIRE(u.interval_count() == 2);
    CHECK(u.slope_on(0) == dc.b);
    CHECK(u.slope_on(1) == dc.a);
    CHECK(u.slope_at(dc.theta_star / 2) == dc.b);
    CHECK(u.slope_at(dc.theta_star + 0.5) == dc.a);
    CHECK_THROWS_AS(u.slope_at(0.0), RidgeError);
    CHECK_THROWS_AS(u.slope_at(dc.theta_star), RidgeError);
    CHECK_THROWS_AS(u.slope_on(2), std::out_of_range);

    CHECK(u.ridge_distance(dc.theta_star) == 0.0);
    CHECK(u.ridge_distance(dc.theta_star + 0.25) == doctest::Approx(0.25).epsilon(1e-12));

    // constant profiles have no ridges at all
    const RadiusFunction c = RadiusFunction::constant(1.0);
    CHECK(c.interval_count() == 1);
    CHECK(c.slope_at(0.0) == 0.0);
    CHECK(c.ridge_distance(3.0) == two_pi);
}

TEST_CASE("dual profile") {
    SUBCASE("constant maps to its reciprocal") {
        const RadiusFunction d = dual(RadiusFunction::constant(2.5));
        CHECK(d.radius(1.0) == doctest::Approx(1.0 / 2.5).epsilon(1e-15));
    }

    SUBCASE("dual of standard U is standard V") {
        for (const SpiralParams& p : param_grid) {
            const RadiusFunction du = dual(RadiusFunction::standard_u(p));
            const RadiusFunction v = RadiusFunction::standard_v(p);
            CHECK(du.kind() == RadiusKind::standard_v);
            for (int i = 0; i < 360; ++i) {
                const double theta = two_pi * static_cast<double>(i) / 360.0;
                CHECK(std::abs(du.log_radius(theta) - v.log_radius(theta)) < 1e-12);
            }
        }
    }

    SUBCASE("involution is exact on knots") {
        std::mt19937_64 rng(123);
        std::uniform_real_distribution<double> val(-0.5, 0.5);
        std::vector<double> values(48);
        for (double& x : values) x = val(rng);
        const RadiusFunction r = RadiusFunction::sampled(values);
        const RadiusFunction rr = dual(dual(r));
        REQUIRE(rr.knot_count() == 48);
        for (std::size_t j = 0; j < 48; ++j) {
            // bitwise equality: dual only negates and permutes knot values
            CHECK(rr.log_radius(r.breakpoints()[j]) == values[j]);
        }
    }

    SUBCASE("dual slope is the source slope at the mirrored angle") {
        std::mt19937_64 rng(124);
        std::uniform_real_distribution<double> val(-0.5, 0.5);
        std::vector<double> values(32);
        for (double& x : values) x = val(rng);
        const RadiusFunction r = RadiusFunction::sampled(values);
        const RadiusFunction d = dual(r);
        const double h = two_pi / 32.0;
        for (std::size_t j = 0; j < 32; ++j) {
            const double mid = (static_cast<double>(j) + 0.5) * h;
            const double mirrored = reduce_angle(-mid);
            CHECK(d.slope_at(mid) == r.slope_at(mirrored));
        }
    }
}

TEST_CASE("membership test") {
    const SpiralParams p(0.3, 0.7);
    const RadiusFunction u = RadiusFunction::standard_u(p);
    const LambdaAngle lam = p.angle();

    CHECK(contains(u, lam, Complex(0.0, 0.0)));
    // boundary points are excluded (strict inequality)
    CHECK_FALSE(contains(u, lam, Complex(1.0, 0.0)));

    // scaled-down boundary samples are interior
    for (int i = 0; i < 64; ++i) {
        const double theta = two_pi * static_cast<double>(i) / 64.0;
        const Complex w = spiral_point(lam, {0.5 * u.radius(theta), theta});
        CHECK(contains(u, lam, w));
        const Complex outside = spiral_point(lam, {1.5 * u.radius(theta), theta});
        CHECK_FALSE(contains(u, lam, outside));
    }
}

TEST_CASE("scale_domain") {
    const SpiralParams p(0.3, 0.7);
    const RadiusFunction u = RadiusFunction::standard_u(p);
    const LambdaAngle lam = p.angle();

    // The resampled result is exact at its own knots; between knots the
    // interpolant may deviate near the shifted crossover, so the
    // comparisons below stay on the knot grid.
    SUBCASE("unit scaling is the identity on the knot grid") {
        const RadiusFunction s = scale_domain(Complex(1.0, 0.0), u, lam);
        for (double knot : s.breakpoints()) {
            CHECK(std::abs(s.log_radius(knot) - u.log_radius(knot)) < 1e-12);
        }
    }

    SUBCASE("positive real factors scale the radius") {
        const RadiusFunction s = scale_domain(Complex(3.0, 0.0), u, lam);
        // w0 = 3 has lambda-argument -tan(lambda)*log 3, not 0, so compare
        // against the shifted-and-scaled source directly
        const double theta0 = lambda_arg(lam, Complex(3.0, 0.0));
        for (double knot : s.breakpoints()) {
            const double expect = std::log(3.0) + u.log_radius(knot - theta0);
            CHECK(std::abs(s.log_radius(knot) - expect) < 1e-12);
        }
    }

    SUBCASE("monotone in the scaling modulus along a fixed spiral") {
        const Complex w0 = spiral_point(lam, {0.4, 1.1});
        const Complex w1 = spiral_point(lam, {0.9, 1.1});
        const RadiusFunction s0 = scale_domain(w0, u, lam);
        const RadiusFunction s1 = scale_domain(w1, u, lam);
        for (int i = 0; i < 100; ++i) {
            const double theta = two_pi * static_cast<double>(i) / 100.0;
            CHECK(s0.log_radius(theta) < s1.log_radius(theta) + 1e-12);
        }
    }

    CHECK_THROWS_AS(scale_domain(Complex(0.0, 0.0), u, lam), std::domain_error);
}

TEST_CASE("similarity between the standard domains") {
    // U equals its tip times V
    for (const SpiralParams& p : param_grid) {
        const DomainConstants dc = constants(p);
        const LambdaAngle lam = p.angle();
        const Complex tip =
            spiral_point(lam, {std::exp(dc.b * dc.theta_star), dc.theta_star});
        const RadiusFunction scaled_v =
            scale_domain(tip, RadiusFunction::standard_v(p), lam);
        const RadiusFunction u = RadiusFunction::standard_u(p);
        // samplewise: the resampled profile is exact at its own knots
        for (double knot : scaled_v.breakpoints()) {
            CHECK(std::abs(scaled_v.log_radius(knot) - u.log_radius(knot)) < 1e-10);
        }
    }
}

TEST_CASE("standard V slope profile") {
    const SpiralParams p(0.3, 0.7);
    const DomainConstants dc = constants(p);
    const RadiusFunction v = RadiusFunction::standard_v(p);
    // ascending branch A on (0, 2*pi - theta*), descending B after it
    CHECK(v.slope_at(0.5 * (two_pi - dc.theta_star)) == dc.a);
    CHECK(v.slope_at(0.5 * (two_pi - dc.theta_star) + pi) == dc.b);
}

TEST_CASE("boundary polyline") {
    SUBCASE("constant profile samples the circle") {
        const auto poly =
            boundary_polyline(RadiusFunction::constant(1.0), LambdaAngle(0.0), 8);
        REQUIRE(poly.size() == 8);
        CHECK(std::abs(poly[0] - Complex(1.0, 0.0)) < 1e-15);
        CHECK(std::abs(poly[2] - Complex(0.0, 1.0)) < 1e-15);
        for (const Complex& w : poly) CHECK(std::abs(std::abs(w) - 1.0) < 1e-15);
    }

    SUBCASE("standard U matches the boundary parametrization") {
        const SpiralParams p(0.3, 0.7);
        const auto poly =
            boundary_polyline(RadiusFunction::standard_u(p), p.angle(), 360);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            const double theta = two_pi * static_cast<double>(j) / 360.0;
            CHECK(std::abs(poly[j] - standard_boundary(p, theta)) < 1e-12);
        }
    }

    SUBCASE("points satisfy the radius relation and are pairwise distinct") {
        std::mt19937_64 rng(55);
        std::uniform_real_distribution<double> val(-0.3, 0.3);
        std::vector<double> values(24);
        for (double& x : values) x = val(rng);
        const RadiusFunction r = RadiusFunction::sampled(values);
        const LambdaAngle lam(0.4);
        const auto poly = boundary_polyline(r, lam, 96);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            CHECK(std::abs(std::abs(poly[j]) - r.radius(lambda_arg(lam, poly[j]))) < 1e-9);
            for (std::size_t k = j + 1; k < poly.size(); ++k) {
                CHECK(std::abs(poly[j] - poly[k]) > 1e-12);
            }
        }
    }

    CHECK_THROWS_AS(boundary_polyline(RadiusFunction::constant(1.0), LambdaAngle(0.0), 2),
                    std::invalid_argument);
}

TEST_CASE("radius csv ingestion") {
    SUBCASE("well-formed input round-trips") {
        std::ostringstream csv;
        csv << "theta,R\n";
        for (int j = 0; j < 72; ++j) {
            const double theta = two_pi * static_cast<double>(j) / 72.0;
            csv << format_double(theta) << "," << format_double(1.0 + 0.2 * std::sin(theta))
                << "\n";
        }
        std::istringstream in(csv.str());
        const RadiusFunction r = RadiusFunction::from_csv(in);
        CHECK(r.is_sampled());
        CHECK(r.knot_count() == RadiusFunction::default_knots);
        for (int j = 0; j < 72; ++j) {
            const double theta = two_pi * static_cast<double>(j) / 72.0;
            CHECK(r.radius(theta) == doctest::Approx(1.0 + 0.2 * std::sin(theta)).epsilon(1e-9));
        }
    }

    SUBCASE("crlf and blank lines are tolerated") {
        std::istringstream in("theta,R\r\n0,1\r\n1,2\r\n\r\n2,1.5\r\n");
        CHECK_NOTHROW(RadiusFunction::from_csv(in));
    }

    SUBCASE("rejects malformed input with the offending line") {
        auto fails = [](const std::string& text, const char* what) {
            std::istringstream in(text);
            CHECK_THROWS_WITH_AS(RadiusFunction::from_csv(in), doctest::Contains(what),
                                 std::runtime_error);
        };
        fails("x,y\n0,1\n1,2\n", "expected header");
        fails("theta,R\n0,1\n", "at least 2 rows");
        fails("theta,R\n0,1\nnope\n", "line 3");
        fails("theta,R\n0,1\n1,-2\n", "line 3");
        fails("theta,R\n1,1\n0.5,2\n", "increasing");
        fails("theta,R\n0,1\n7,2\n", "line 3");  // theta beyond [0, 2*pi)
        fails("theta,R\n-0.1,1\n1,2\n", "line 2");
        fails("theta,R\n0,1\n1,inf\n", "line 3");
    }

    CHECK_THROWS_WITH_AS(RadiusFunction::from_csv_file("/nonexistent/radius.csv"),
                         doctest::Contains("cannot open"), std::runtime_error);
}

TEST_CASE("polyline emitters") {
    const BoundaryPolyline poly = {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0),
                                   Complex(0.0, -1.0)};

    SUBCASE("csv has a header and one row per point") {
        const std::string csv = polyline_to_csv(poly);
        CHECK(csv.substr(0, 4) == "x,y\n");
        std::size_t rows = 0;
        for (char ch : csv) rows += ch == '\n' ? 1 : 0;
        CHECK(rows == 5);
        CHECK(csv.find("1,0\n") != std::string::npos);
        CHECK(csv.find("0,-1\n") != std::string::npos);
        CHECK(polyline_to_csv({}) == "x,y\n");
    }

    SUBCASE("svg is a single closed path with a fitted viewBox") {
        const std::string svg = polyline_to_svg(poly);
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("viewBox=") != std::string::npos);
        CHECK(svg.find("<path") != std::string::npos);
        CHECK(svg.find("Z\"") != std::string::npos);
        // exactly one path element
        CHECK(svg.find("<path", svg.find("<path") + 1) == std::string::npos);
    }

    CHECK_THROWS_AS(polyline_to_svg({}), std::invalid_argument);
}

TEST_CASE("format_double emits shortest round-trip forms") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5) == "-2.5");
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> val(-1e6, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double x = val(rng);
        CHECK(std::stod(format_double(x)) == x);
    }
}
