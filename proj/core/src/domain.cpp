#include "spirallike/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace spirallike {

namespace {

constexpr double pi = 3.1415926535897932384626433832795;
constexpr double origin_floor = 1e-300;

double require_finite_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and positive, got " +
                                    std::to_string(v));
    }
    return v;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SpiralParams::SpiralParams(double lambda, double alpha)
    : lambda_(lambda), alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha >= 1.0) {
        throw std::invalid_argument("order alpha must lie in (0, 1), got " +
                                    std::to_string(alpha));
    }
    if (!std::isfinite(lambda) || std::abs(lambda) >= pi * alpha / 2.0) {
        throw std::invalid_argument("spiral angle must satisfy |lambda| < pi*alpha/2, got lambda = " +
                                    std::to_string(lambda) + ", alpha = " + std::to_string(alpha));
    }
}

double SpiralParams::tan_half_order() const noexcept {
    return std::tan(pi * alpha_ / 2.0);
}

double SpiralParams::dilatation_bound() const noexcept {
    return std::sin(pi * alpha_ / 2.0);
}

DomainConstants constants(const SpiralParams& p) {
    const double c = std::cos(p.lambda());
    const double c2 = c * c;
    const double t = p.tan_half_order();
    const double tl = std::tan(p.lambda());
    const double a = c2 * (t - tl);
    const double b = -c2 * (t + tl);
    return DomainConstants{a, b, two_pi * a / (a - b)};
}

double standard_radius(const SpiralParams& p, double theta) {
    const DomainConstants dc = constants(p);
    const double th = reduce_angle(theta);
    return std::exp(std::max(dc.b * th, -dc.a * (two_pi - th)));
}

Complex standard_boundary(const SpiralParams& p, double theta) {
    const DomainConstants dc = constants(p);
    double th = reduce_angle(theta);
    if (th > dc.theta_star) th -= two_pi;
    const double tl = std::tan(p.lambda());
    const double slope = th >= 0.0 ? dc.b : dc.a;
    return std::exp(Complex(slope * th, (1.0 + slope * tl) * th));
}

RadiusFunction RadiusFunction::standard_u(const SpiralParams& p) {
    RadiusFunction r;
    r.kind_ = RadiusKind::standard_u;
    r.lambda_ = p.lambda();
    r.alpha_ = p.alpha();
    const DomainConstants dc = constants(p);
    r.breaks_ = {0.0, dc.theta_star};
    r.slopes_ = {dc.b, dc.a};
    return r;
}

RadiusFunction RadiusFunction::standard_v(const SpiralParams& p) {
    RadiusFunction r;
    r.kind_ = RadiusKind::standard_v;
    r.lambda_ = p.lambda();
    r.alpha_ = p.alpha();
    const DomainConstants dc = constants(p);
    r.breaks_ = {0.0, two_pi - dc.theta_star};
    r.slopes_ = {dc.a, dc.b};
    return r;
}

RadiusFunction RadiusFunction::constant(double value) {
    require_finite_positive(value, "constant radius");
    RadiusFunction r;
    r.kind_ = RadiusKind::constant;
    r.log_value_ = std::log(value);
    r.slopes_ = {0.0};
    return r;
}

RadiusFunction RadiusFunction::sampled(std::vector<double> log_values) {
    const std::size_t n = log_values.size();
    if (n < 8) {
        throw std::invalid_argument("sampled radius profile needs at least 8 knots, got " +
                                    std::to_string(n));
    }
    for (double v : log_values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("sampled radius profile has a non-finite log value");
        }
    }
    RadiusFunction r;
    r.kind_ = RadiusKind::sampled;
    r.values_ = std::move(log_values);
    const double h = two_pi / static_cast<double>(n);
    r.breaks_.resize(n);
    r.slopes_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        r.breaks_[j] = h * static_cast<double>(j);
        r.slopes_[j] = (r.values_[(j + 1) % n] - r.values_[j]) / h;
    }
    return r;
}

std::size_t RadiusFunction::knot_count() const noexcept {
    return kind_ == RadiusKind::sampled ? values_.size() : 0;
}

SpiralParams RadiusFunction::params() const {
    if (kind_ != RadiusKind::standard_u && kind_ != RadiusKind::standard_v) {
        throw std::logic_error("radius function has no spiral parameters (not a standard variant)");
    }
    return SpiralParams(lambda_, alpha_);
}

double RadiusFunction::log_radius(double theta) const {
    const double th = reduce_angle(theta);
    switch (kind_) {
        case RadiusKind::standard_u: {
            const double a = slopes_[1];
            const double b = slopes_[0];
            return std::max(b * th, -a * (two_pi - th));
        }
        case RadiusKind::standard_v: {
            const double a = slopes_[0];
            const double b = slopes_[1];
            return std::min(a * th, b * (th - two_pi));
        }
        case RadiusKind::constant:
            return log_value_;
        case RadiusKind::sampled: {
            const std::size_t n = values_.size();
            const double h = two_pi / static_cast<double>(n);
            std::size_t j = static_cast<std::size_t>(th / h);
            if (j >= n) j = n - 1;
            // the division can round across a knot; settle against the grid
            if (j + 1 < n && th >= breaks_[j + 1]) {
                ++j;
            } else if (j > 0 && th < breaks_[j]) {
                --j;
            }
            if (th == breaks_[j]) return values_[j];  // exact on knots
            return values_[j] + slopes_[j] * (th - breaks_[j]);
        }
    }
    return log_value_;  // unreachable
}

double RadiusFunction::radius(double theta) const {
    return std::exp(log_radius(theta));
}

std::size_t RadiusFunction::interval_count() const noexcept {
    return slopes_.size();
}

double RadiusFunction::slope_on(std::size_t interval) const {
    if (interval >= slopes_.size()) {
        throw std::out_of_range("slope interval index out of range");
    }
    return slopes_[interval];
}

double RadiusFunction::ridge_distance(double theta) const {
    if (breaks_.empty()) return two_pi;
    const double th = reduce_angle(theta);
    double best = two_pi;
    for (double b : breaks_) {
        const double d = std::abs(th - b);
        best = std::min(best, std::min(d, two_pi - d));
    }
    return best;
}

double RadiusFunction::slope_at(double theta, double ridge_tol) const {
    if (breaks_.empty()) return slopes_[0];
    if (ridge_distance(theta) < ridge_tol) {
        throw RidgeError("slope is undefined on a ridge spiral (theta = " +
                         std::to_string(theta) + ")");
    }
    const double th = reduce_angle(theta);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), th);
    const std::size_t idx = (it == breaks_.begin())
                                ? breaks_.size() - 1
                                : static_cast<std::size_t>(it - breaks_.begin() - 1);
    return slopes_[idx];
}

RadiusFunction dual(const RadiusFunction& r) {
    switch (r.kind()) {
        case RadiusKind::standard_u:
            return RadiusFunction::standard_v(r.params());
        case RadiusKind::standard_v:
            return RadiusFunction::standard_u(r.params());
        case RadiusKind::constant:
            return RadiusFunction::constant(std::exp(-r.log_radius(0.0)));
        case RadiusKind::sampled: {
            const std::size_t n = r.knot_count();
            const double h = two_pi / static_cast<double>(n);
            std::vector<double> values(n);
            for (std::size_t j = 0; j < n; ++j) {
                // rho_dual(theta_j) = -rho(-theta_j) = -rho(theta_{n-j});
                // exact on knots, no interpolation involved.
                values[j] = -r.log_radius(h * static_cast<double>((n - j) % n));
            }
            return RadiusFunction::sampled(std::move(values));
        }
    }
    throw std::logic_error("unknown radius kind");  // unreachable
}

bool contains(const RadiusFunction& r, const LambdaAngle& lam, const Complex& w) {
    const double a = std::abs(w);
    if (a < origin_floor) return true;
    return a < r.radius(lambda_arg(lam, w));
}

RadiusFunction scale_domain(const Complex& w0, const RadiusFunction& r,
                            const LambdaAngle& lam) {
    if (std::abs(w0) < origin_floor) {
        throw std::domain_error("cannot scale a domain by w0 = 0");
    }
    const SpiralCoord c = decompose(lam, w0);
    const double log_r0 = std::log(c.r);
    const std::size_t n = r.is_sampled() ? r.knot_count() : RadiusFunction::default_knots;
    const double h = two_pi / static_cast<double>(n);
    std::vector<double> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = log_r0 + r.log_radius(h * static_cast<double>(j) - c.theta);
    }
    return RadiusFunction::sampled(std::move(values));
}

BoundaryPolyline boundary_polyline(const RadiusFunction& r, const LambdaAngle& lam,
                                   std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("boundary polyline needs at least 3 points");
    }
    BoundaryPolyline points(n);
    const double h = two_pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = h * static_cast<double>(j);
        points[j] = spiral_point(lam, SpiralCoord{r.radius(theta), theta});
    }
    return points;
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

RadiusFunction RadiusFunction::from_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("radius csv: empty input");
    }
    if (trim(line) != "theta,R") {
        throw std::runtime_error("radius csv: expected header 'theta,R', got '" + trim(line) + "'");
    }
    std::vector<double> thetas;
    std::vector<double> logs;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string row = trim(line);
        if (row.empty()) continue;
        const auto comma = row.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("radius csv line " + std::to_string(line_no) +
                                     ": expected 'theta,R'");
        }
        double theta = 0.0;
        double radius = 0.0;
        try {
            theta = std::stod(trim(row.substr(0, comma)));
            radius = std::stod(trim(row.substr(comma + 1)));
        } catch (const std::exception&) {
            throw std::runtime_error("radius csv line " + std::to_string(line_no) +
                                     ": malformed number");
        }
        if (!std::isfinite(theta) || theta < 0.0 || theta >= two_pi) {
            throw std::runtime_error("radius csv line " + std::to_string(line_no) +
                                     ": theta must lie in [0, 2*pi)");
        }
        if (!thetas.empty() && theta <= thetas.back()) {
            throw std::runtime_error("radius csv line " + std::to_string(line_no) +
                                     ": theta must be strictly increasing");
        }
        if (!std::isfinite(radius) || radius <= 0.0) {
            throw std::runtime_error("radius csv line " + std::to_string(line_no) +
                                     ": R must be finite and positive");
        }
        thetas.push_back(theta);
        logs.push_back(std::log(radius));
    }
    if (thetas.size() < 2) {
        throw std::runtime_error("radius csv: need at least 2 rows");
    }

    // Piecewise-linear periodic interpolant in log R over the given knots,
    // resampled onto the uniform default grid.
    const std::size_t m = thetas.size();
    auto interp = [&](double theta) {
        // Locate the knot interval containing theta, treating the profile as
        // periodic: the wrap interval runs from thetas[m-1] to thetas[0]+2*pi.
        auto it = std::upper_bound(thetas.begin(), thetas.end(), theta);
        std::size_t j = (it == thetas.begin()) ? m - 1 : static_cast<std::size_t>(it - thetas.begin() - 1);
        double t0 = thetas[j];
        double span = (j + 1 < m) ? thetas[j + 1] - t0 : thetas[0] + two_pi - t0;
        double offset = theta - t0;
        if (offset < 0.0) offset += two_pi;  // theta below the first knot
        const double v0 = logs[j];
        const double v1 = logs[(j + 1) % m];
        return v0 + (v1 - v0) * (offset / span);
    };
    const std::size_t n = default_knots;
    std::vector<double> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        values[j] = interp(two_pi * static_cast<double>(j) / static_cast<double>(n));
    }
    return sampled(std::move(values));
}

RadiusFunction RadiusFunction::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open radius file: " + path);
    }
    return from_csv(in);
}

std::string polyline_to_csv(const BoundaryPolyline& points) {
    std::string out = "x,y\n";
    for (const Complex& w : points) {
        out += format_double(w.real());
        out += ',';
        out += format_double(w.imag());
        out += '\n';
    }
    return out;
}

std::string polyline_to_svg(const BoundaryPolyline& points) {
    if (points.empty()) {
        throw std::invalid_argument("cannot render an empty polyline");
    }
    // SVG's y axis points down; negate y so counterclockwise stays
    // counterclockwise on screen.
    double min_x = points[0].real(), max_x = min_x;
    double min_y = -points[0].imag(), max_y = min_y;
    for (const Complex& w : points) {
        min_x = std::min(min_x, w.real());
        max_x = std::max(max_x, w.real());
        min_y = std::min(min_y, -w.imag());
        max_y = std::max(max_y, -w.imag());
    }
    const double span = std::max(max_x - min_x, max_y - min_y);
    const double pad = span > 0.0 ? 0.05 * span : 1.0;
    const double width = max_x - min_x + 2.0 * pad;
    const double height = max_y - min_y + 2.0 * pad;

    std::string d = "M ";
    bool first = true;
    for (const Complex& w : points) {
        if (!first) d += " L ";
        first = false;
        d += format_double(w.real());
        d += ' ';
        d += format_double(-w.imag());
    }
    d += " Z";

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += format_double(min_x - pad) + " " + format_double(min_y - pad) + " " +
           format_double(width) + " " + format_double(height) + "\">\n";
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           format_double(std::max(width, height) * 0.004) + "\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace spirallike
