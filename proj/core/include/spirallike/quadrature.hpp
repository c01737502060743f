#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "spirallike/spiral.hpp"

namespace spirallike {

// Controls for the singular-endpoint quadrature. grading_exponent is the
// power substitution u = v^p applied toward a singular endpoint before
// paneling; routines that know their integrand's algebraic endpoint order
// raise it to at least the exactly absorbing value (1/(1 - alpha)).
struct QuadratureConfig {
    double rel_tol = 1e-12;
    std::size_t max_panels = 800;
    double grading_exponent = 1.0;
};

void validate(const QuadratureConfig& cfg);

// Integration failed to meet rel_tol within max_panels; the message carries
// the achieved estimate.
class AccuracyError : public std::runtime_error {
public:
    explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    std::size_t panels = 0;
};

// Integrate f over [0, 1] by composite 12-point Gauss-Legendre panels on a
// geometrically graded mesh (ratio 0.5) toward the selected endpoints,
// stopping when two consecutive panel contributions fall below
// rel_tol * |total| (or max_panels is exhausted -> AccuracyError). The
// integrand must be evaluatable at every interior point; endpoint
// singularities integrable by grading are allowed at graded ends.
template <typename F>
QuadratureResult integrate_unit(F&& f, const QuadratureConfig& cfg, bool grade_low,
                                bool grade_high);

namespace detail {

// 12-point Gauss-Legendre nodes and weights on [-1, 1].
inline constexpr double gl_nodes[12] = {
    -0.98156063424671925069054909014928,  -0.90411725637047485667846586611910,
    -0.76990267419430468703689383321282,  -0.58731795428661744729670241894053,
    -0.36783149899818019375269153664372,  -0.12523340851146891547244136946385,
    0.12523340851146891547244136946385,   0.36783149899818019375269153664372,
    0.58731795428661744729670241894053,   0.76990267419430468703689383321282,
    0.90411725637047485667846586611910,   0.98156063424671925069054909014928};
inline constexpr double gl_weights[12] = {
    0.047175336386511827194615961485017, 0.106939325995318430960254718193996,
    0.160078328543346226334652529543359, 0.203167426723065921749064455809798,
    0.233492536538354808760849898924878, 0.249147045813402785000562436042951,
    0.249147045813402785000562436042951, 0.233492536538354808760849898924878,
    0.203167426723065921749064455809798, 0.160078328543346226334652529543359,
    0.106939325995318430960254718193996, 0.047175336386511827194615961485017};

template <typename F>
Complex gl_panel(F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Complex sum{0.0, 0.0};
    for (int i = 0; i < 12; ++i) {
        sum += gl_weights[i] * f(mid + half * gl_nodes[i]);
    }
    return half * sum;
}

}  // namespace detail

template <typename F>
QuadratureResult integrate_unit(F&& f, const QuadratureConfig& cfg, bool grade_low,
                                bool grade_high) {
    validate(cfg);
    // Split [0, 1] into runs graded toward each selected endpoint; with no
    // grading a single panel pass still refines until the tail test holds.
    struct Run {
        double anchor;  // graded endpoint
        double inner;   // far end of the run
    };
    Run runs[2];
    std::size_t run_count = 0;
    if (grade_low && grade_high) {
        runs[run_count++] = {0.0, 0.5};
        runs[run_count++] = {1.0, 0.5};
    } else if (grade_low) {
        runs[run_count++] = {0.0, 1.0};
    } else if (grade_high) {
        runs[run_count++] = {1.0, 0.0};
    } else {
        runs[run_count++] = {0.0, 1.0};
    }

    Complex total{0.0, 0.0};
    std::size_t panels = 0;
    for (std::size_t ri = 0; ri < run_count; ++ri) {
        const Run run = runs[ri];
        const double length = std::abs(run.inner - run.anchor);
        const double sign = run.inner > run.anchor ? 1.0 : -1.0;
        double edge = length;  // distance of the panel's outer border from anchor
        std::size_t consecutive_small = 0;
        Complex run_sum{0.0, 0.0};
        while (true) {
            if (panels >= cfg.max_panels) {
                throw AccuracyError(
                    "quadrature did not converge within " + std::to_string(cfg.max_panels) +
                    " panels; achieved estimate " + std::to_string(std::abs(total + run_sum)));
            }
            const double next = 0.5 * edge;
            const double a = run.anchor + sign * next;
            const double b = run.anchor + sign * edge;
            const Complex pv = detail::gl_panel(f, std::min(a, b), std::max(a, b));
            run_sum += pv;
            ++panels;
            const double scale = std::max(std::abs(total + run_sum), 1e-300);
            if (std::abs(pv) <= cfg.rel_tol * scale) {
                if (++consecutive_small >= 2) break;
            } else {
                consecutive_small = 0;
            }
            if (next < 1e-290) break;  // panel underflow: nothing left to resolve
            edge = next;
        }
        total += run_sum;
    }
    return QuadratureResult{total, panels};
}

}  // namespace spirallike
