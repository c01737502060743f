#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "spirallike/spiral.hpp"

using namespace spirallike;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("LambdaAngle validates its range") {
    CHECK_NOTHROW(LambdaAngle(0.0));
    CHECK_NOTHROW(LambdaAngle(1.5));
    CHECK_NOTHROW(LambdaAngle(-1.5));
    CHECK_THROWS_AS(LambdaAngle(pi / 2), std::invalid_argument);
    CHECK_THROWS_AS(LambdaAngle(-2.0), std::invalid_argument);
    const LambdaAngle lam(0.4);
    CHECK(lam.tan() == doctest::Approx(std::tan(0.4)).epsilon(1e-15));
    CHECK(lam.sin() == doctest::Approx(std::sin(0.4)).epsilon(1e-15));
    CHECK(lam.cos() == doctest::Approx(std::cos(0.4)).epsilon(1e-15));
}

TEST_CASE("reduce_angle lands in [0, 2*pi)") {
    CHECK(reduce_angle(0.0) == 0.0);
    CHECK(reduce_angle(two_pi) == 0.0);
    CHECK(reduce_angle(-1e-12) < two_pi);
    CHECK(reduce_angle(-1e-12) >= 0.0);
    CHECK(reduce_angle(7.0 * pi / 2.0) == doctest::Approx(3.0 * pi / 2.0).epsilon(1e-14));
    CHECK(reduce_angle(-pi / 2.0) == doctest::Approx(3.0 * pi / 2.0).epsilon(1e-14));
    for (double t : {-100.0, -6.5, 13.7, 1e6}) {
        const double r = reduce_angle(t);
        CHECK(r >= 0.0);
        CHECK(r < two_pi);
    }
}

TEST_CASE("spiral_point fixed values") {
    // r = 1: log r = 0, so the point is e^{i*theta} for every lambda
    CHECK(spiral_point(LambdaAngle(0.7), {1.0, 0.0}) == Complex(1.0, 0.0));
    CHECK(std::abs(spiral_point(LambdaAngle(-1.1), {1.0, pi}) - Complex(-1.0, 0.0)) < 1e-15);

    // lambda = 0 reduces to plain polar form
    CHECK(std::abs(spiral_point(LambdaAngle(0.0), {2.0, pi / 3}) - std::polar(2.0, pi / 3)) <
          1e-15);

    // lambda = pi/4, r = e, theta = 0: tan(pi/4)*log e = 1, so e*e^{i}
    const Complex q = spiral_point(LambdaAngle(pi / 4), {std::exp(1.0), 0.0});
    CHECK(std::abs(q - Complex(1.4686939399158851, 2.287355287178842)) < 1e-14);

    // the origin is reached exactly at r = 0
    CHECK(spiral_point(LambdaAngle(0.3), {0.0, 1.2}) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(spiral_point(LambdaAngle(0.3), {-1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("lambda_arg fixed values and inverse relation") {
    CHECK(lambda_arg(LambdaAngle(0.9), Complex(1.0, 0.0)) == 0.0);
    CHECK(lambda_arg(LambdaAngle(0.0), Complex(0.0, 1.0)) ==
          doctest::Approx(pi / 2).epsilon(1e-15));

    // lambda_arg inverts spiral_point up to the 2*pi reduction
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> rad(0.05, 20.0);
    std::uniform_real_distribution<double> ang(0.01, 6.2);
    std::uniform_real_distribution<double> lambdas(-1.2, 1.2);
    for (int i = 0; i < 200; ++i) {
        const LambdaAngle lam(lambdas(rng));
        const double r = rad(rng);
        const double theta = ang(rng);
        const double back = lambda_arg(lam, spiral_point(lam, {r, theta}));
        CHECK(std::abs(back - theta) < 1e-10);
    }

    CHECK_THROWS_AS(lambda_arg(LambdaAngle(0.2), Complex(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(lambda_arg(LambdaAngle(0.2), Complex(1e-301, 0.0)), std::domain_error);
}

TEST_CASE("decompose round-trips with spiral_point") {
    const SpiralCoord unit = decompose(LambdaAngle(0.8), Complex(1.0, 0.0));
    CHECK(unit.r == 1.0);
    CHECK(unit.theta == 0.0);

    const SpiralCoord ic = decompose(LambdaAngle(0.0), Complex(0.0, 2.0));
    CHECK(ic.r == 2.0);
    CHECK(ic.theta == doctest::Approx(pi / 2).epsilon(1e-15));

    std::mt19937_64 rng(911);
    std::uniform_real_distribution<double> re(-5.0, 5.0);
    std::uniform_real_distribution<double> lambdas(-1.3, 1.3);
    for (int i = 0; i < 1000; ++i) {
        const Complex w(re(rng), re(rng));
        if (std::abs(w) < 1e-6) continue;
        const LambdaAngle lam(lambdas(rng));
        const SpiralCoord c = decompose(lam, w);
        CHECK(c.theta >= 0.0);
        CHECK(c.theta < two_pi);
        CHECK(std::abs(spiral_point(lam, c) - w) < 1e-12 * std::abs(w));
    }

    CHECK_THROWS_AS(decompose(LambdaAngle(0.2), Complex(0.0, 0.0)), std::domain_error);
}

TEST_CASE("spiral_segment shape and monotonicity") {
    const LambdaAngle zero(0.0);
    const auto seg = spiral_segment(zero, Complex(1.0, 0.0), 10);
    REQUIRE(seg.size() == 10);
    CHECK(seg.front() == Complex(0.0, 0.0));
    CHECK(seg.back() == Complex(1.0, 0.0));  // endpoint pinned exactly
    for (const Complex& w : seg) {
        CHECK(w.imag() == 0.0);
        CHECK(w.real() >= 0.0);
        CHECK(w.real() <= 1.0);
    }

    // every nonzero sample lies on the spiral of w: equal lambda-arguments
    const LambdaAngle lam(0.6);
    const Complex w(2.0, -3.0);
    const auto spiral = spiral_segment(lam, w, 64);
    const double target = lambda_arg(lam, w);
    double prev = -1.0;
    for (const Complex& p : spiral) {
        if (p == Complex(0.0, 0.0)) continue;
        double diff = std::abs(lambda_arg(lam, p) - target);
        diff = std::min(diff, std::abs(diff - two_pi));
        CHECK(diff < 1e-9);
        CHECK(std::abs(p) > prev);  // moduli strictly increasing
        prev = std::abs(p);
    }

    CHECK(spiral_segment(lam, Complex(0.0, 0.0), 5) == std::vector<Complex>{Complex(0.0, 0.0)});
    CHECK_THROWS_AS(spiral_segment(lam, w, 1), std::invalid_argument);
}

TEST_CASE("multiplicativity of spiral coordinates") {
    // P(r, theta) * P(s, t) = P(r*s, theta + t)
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> rad(0.1, 5.0);
    std::uniform_real_distribution<double> ang(-6.0, 6.0);
    std::uniform_real_distribution<double> lambdas(-1.2, 1.2);
    for (int i = 0; i < 500; ++i) {
        const LambdaAngle lam(lambdas(rng));
        const double r = rad(rng), s = rad(rng);
        const double theta = ang(rng), t = ang(rng);
        const Complex lhs = spiral_point(lam, {r, theta}) * spiral_point(lam, {s, t});
        const Complex rhs = spiral_point(lam, {r * s, theta + t});
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("reciprocal flips modulus and argument") {
    // 1 / P(r, theta) = P(1/r, -theta)
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> rad(0.1, 5.0);
    std::uniform_real_distribution<double> ang(-6.0, 6.0);
    std::uniform_real_distribution<double> lambdas(-1.2, 1.2);
    for (int i = 0; i < 500; ++i) {
        const LambdaAngle lam(lambdas(rng));
        const double r = rad(rng), theta = ang(rng);
        const Complex lhs = 1.0 / spiral_point(lam, {r, theta});
        const Complex rhs = spiral_point(lam, {1.0 / r, -theta});
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
}

TEST_CASE("logarithmic coordinates round-trip") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> re(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const Complex z(re(rng), re(rng));
        if (std::abs(z) < 1e-6) continue;
        const LogCoord lc = to_log(z);
        CHECK(std::abs(from_log(lc) - z) < 1e-13 * std::abs(z));
        CHECK(lc.x == doctest::Approx(std::log(std::abs(z))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(to_log(Complex(0.0, 0.0)), std::domain_error);
}
