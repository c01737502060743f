#include "spirallike/charac.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace spirallike {

namespace {

constexpr double pi = 3.1415926535897932384626433832795;
constexpr double exact_tolerance = 1e-12;
const double nan_value = std::numeric_limits<double>::quiet_NaN();

// Log-radius of the standard domain U from its slope constants:
// max(B*theta, -A*(2*pi - theta)) on [0, 2*pi).
double log_radius_u(const DomainConstants& dc, double theta) {
    return std::max(dc.b * theta, -dc.a * (two_pi - theta));
}

// Log-radius of the dual standard domain V: min(A*theta, B*(theta - 2*pi)).
double log_radius_v(const DomainConstants& dc, double theta) {
    return std::min(dc.a * theta, dc.b * (theta - two_pi));
}

struct SweepResult {
    double margin = std::numeric_limits<double>::infinity();
    double theta = 0.0;
};

// Minimize a piecewise-linear defect over theta in (0, 2*pi). The defect's
// break angles are the profile's breakpoints shifted by -theta0 plus the
// supplied crossover angle; its one-sided limits at 0 and 2*pi vanish, so
// the minimum over the open interval is attained at one of these vertices.
template <typename Defect>
SweepResult sweep_defect(const RadiusFunction& r, double theta0, double crossover,
                         Defect&& defect) {
    SweepResult best;
    auto consider = [&](double theta) {
        if (theta <= 0.0 || theta >= two_pi) return;
        const double d = defect(theta);
        if (d < best.margin) {
            best.margin = d;
            best.theta = theta;
        }
    };
    consider(crossover);
    for (double b : r.breakpoints()) {
        consider(reduce_angle(b - theta0));
    }
    if (!std::isfinite(best.margin)) {
        // no interior vertex (constant profile with degenerate crossover);
        // fall back to the midpoint
        best.margin = defect(pi);
        best.theta = pi;
    }
    return best;
}

}  // namespace

std::string to_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["condition"] = report.condition;
    j["pass"] = report.pass;
    j["margin"] = report.margin;
    nlohmann::ordered_json witness;
    if (!std::isnan(report.witness_theta0)) {
        witness["theta0"] = report.witness_theta0;
    }
    witness["theta"] = report.witness_theta;
    j["witness"] = witness;
    j["grid"] = report.grid;
    j["tolerance"] = report.tolerance;
    return j.dump(2);
}

double inclusion_tolerance(const RadiusFunction& r, const SpiralParams& p) {
    if (!r.is_sampled()) return 1e-9;
    const DomainConstants dc = constants(p);
    return (two_pi / static_cast<double>(r.knot_count())) * (dc.a - dc.b);
}

CheckReport check_derivative(const RadiusFunction& r, const SpiralParams& p) {
    const double c = std::cos(p.lambda());
    const double bound = c * c * p.tan_half_order();
    const double sc = std::sin(p.lambda()) * c;

    double worst = 0.0;
    std::size_t worst_interval = 0;
    const std::size_t m = r.interval_count();
    for (std::size_t k = 0; k < m; ++k) {
        const double v = std::abs(r.slope_on(k) + sc);
        if (v > worst) {
            worst = v;
            worst_interval = k;
        }
    }

    // witness: midpoint of the attaining interval
    double theta = pi;
    const auto& breaks = r.breakpoints();
    if (!breaks.empty()) {
        const double lo = breaks[worst_interval];
        const double hi = (worst_interval + 1 < breaks.size()) ? breaks[worst_interval + 1]
                                                               : breaks[0] + two_pi;
        theta = reduce_angle(0.5 * (lo + hi));
    }

    CheckReport report;
    report.condition = "derivative";
    report.margin = bound - worst;
    report.tolerance = exact_tolerance;
    report.pass = report.margin >= -report.tolerance;
    report.witness_theta0 = nan_value;
    report.witness_theta = theta;
    report.grid = m;
    return report;
}

CheckReport check_lipschitz(const RadiusFunction& r, const SpiralParams& p) {
    const DomainConstants dc = constants(p);

    // Vertices of the piecewise-linear profile; differences of rho between
    // two angles are extremal at vertices, so checking all vertex pairs
    // within one period is exact.
    std::vector<double> vertices = r.breakpoints();
    if (vertices.size() < 2) {
        vertices = {0.0, pi};
    }
    const std::size_t m = vertices.size();

    double best = std::numeric_limits<double>::infinity();
    double best_theta0 = 0.0, best_theta = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double t1 = vertices[i];
        const double rho1 = r.log_radius(t1);
        for (std::size_t dj = 1; dj < m; ++dj) {
            const std::size_t j = (i + dj) % m;
            double t2 = vertices[j];
            if (j <= i) t2 += two_pi;
            const double d = t2 - t1;
            const double diff = r.log_radius(vertices[j]) - rho1;
            const double margin = std::min(diff - dc.b * d, dc.a * d - diff);
            if (margin < best) {
                best = margin;
                best_theta0 = t1;
                best_theta = t2;
            }
        }
    }

    CheckReport report;
    report.condition = "lipschitz";
    report.margin = best;
    report.tolerance = exact_tolerance;
    report.pass = report.margin >= -report.tolerance;
    report.witness_theta0 = best_theta0;
    report.witness_theta = best_theta;
    report.grid = m;
    return report;
}

CheckReport check_inclusion_boundary(const RadiusFunction& r, const SpiralParams& p,
                                     std::size_t grid) {
    if (grid < 8) {
        throw std::invalid_argument("inclusion check needs a grid of at least 8");
    }
    const DomainConstants dc = constants(p);
    const double tol = inclusion_tolerance(r, p);

    double best = std::numeric_limits<double>::infinity();
    double best_theta0 = 0.0, best_theta = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double theta0 = two_pi * static_cast<double>(i) / static_cast<double>(grid);
        const double rho0 = r.log_radius(theta0);
        const SweepResult s = sweep_defect(r, theta0, dc.theta_star, [&](double theta) {
            return r.log_radius(theta0 + theta) - rho0 - log_radius_u(dc, theta);
        });
        if (s.margin < best) {
            best = s.margin;
            best_theta0 = theta0;
            best_theta = s.theta;
        }
    }

    CheckReport report;
    report.condition = "inclusion-boundary";
    report.margin = best;
    report.tolerance = tol;
    report.pass = report.margin >= -tol;
    report.witness_theta0 = best_theta0;
    report.witness_theta = best_theta;
    report.grid = grid;
    return report;
}

CheckReport check_inclusion_interior(const RadiusFunction& r, const SpiralParams& p,
                                     std::size_t grid) {
    if (grid < 8) {
        throw std::invalid_argument("inclusion check needs a grid of at least 8");
    }
    const DomainConstants dc = constants(p);
    const double tol = inclusion_tolerance(r, p);

    double best = std::numeric_limits<double>::infinity();
    double best_theta0 = 0.0, best_theta = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double theta0 = two_pi * static_cast<double>(i) / static_cast<double>(grid);
        const double rho0 = r.log_radius(theta0);
        const SweepResult s = sweep_defect(r, theta0, dc.theta_star, [&](double theta) {
            return r.log_radius(theta0 + theta) - rho0 - log_radius_u(dc, theta);
        });
        // interior samples at moduli t*R(theta0): the scaled copy shrinks by
        // log t, so its inclusion margin is the boundary defect minus log t
        for (int ti = 1; ti <= 9; ++ti) {
            const double t = 0.1 * static_cast<double>(ti);
            const double margin = s.margin - std::log(t);
            if (margin < best) {
                best = margin;
                best_theta0 = theta0;
                best_theta = s.theta;
            }
        }
    }

    CheckReport report;
    report.condition = "inclusion-interior";
    report.margin = best;
    report.tolerance = tol;
    report.pass = report.margin >= -tol;
    report.witness_theta0 = best_theta0;
    report.witness_theta = best_theta;
    report.grid = grid;
    return report;
}

CheckReport check_dual_inclusion(const RadiusFunction& r, const SpiralParams& p,
                                 std::size_t grid) {
    if (grid < 8) {
        throw std::invalid_argument("inclusion check needs a grid of at least 8");
    }
    const DomainConstants dc = constants(p);
    const double tol = inclusion_tolerance(r, p);
    // exterior ring moduli s*R(theta0); the containment margin grows by log s
    static constexpr double ring[] = {1.5, 4.0};

    double best = std::numeric_limits<double>::infinity();
    double best_theta0 = 0.0, best_theta = 0.0;
    for (std::size_t i = 0; i < grid; ++i) {
        const double theta0 = two_pi * static_cast<double>(i) / static_cast<double>(grid);
        const double rho0 = r.log_radius(theta0);
        const SweepResult s = sweep_defect(r, theta0, two_pi - dc.theta_star, [&](double theta) {
            return rho0 + log_radius_v(dc, theta) - r.log_radius(theta0 + theta);
        });
        if (s.margin < best) {
            best = s.margin;
            best_theta0 = theta0;
            best_theta = s.theta;
        }
        for (double scale : ring) {
            const double margin = s.margin + std::log(scale);
            if (margin < best) {
                best = margin;
                best_theta0 = theta0;
                best_theta = s.theta;
            }
        }
    }

    CheckReport report;
    report.condition = "dual-inclusion";
    report.margin = best;
    report.tolerance = tol;
    report.pass = report.margin >= -tol;
    report.witness_theta0 = best_theta0;
    report.witness_theta = best_theta;
    report.grid = grid;
    return report;
}

double minimal_order(const RadiusFunction& r, const LambdaAngle& lam) {
    const double c = lam.cos();
    const double sc = lam.sin() * c;

    double worst = 0.0;
    for (std::size_t k = 0; k < r.interval_count(); ++k) {
        worst = std::max(worst, std::abs(r.slope_on(k) + sc));
    }
    if (!std::isfinite(worst)) {
        throw std::runtime_error("minimal order is unbounded: profile slope diverges");
    }
    const double needed = std::max(worst / (c * c), std::abs(lam.tan()));
    return (2.0 / pi) * std::atan(needed);
}

}  // namespace spirallike
