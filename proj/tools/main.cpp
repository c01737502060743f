// Command-line surface: domain geometry emission, characterization checks,
// dilatation surveys, conformal map evaluation, extension evaluation, and
// the closed-form integral identity.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// constraint error.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spirallike/charac.hpp"
#include "spirallike/conformal.hpp"
#include "spirallike/domain.hpp"
#include "spirallike/reflection.hpp"

namespace {

using spirallike::Complex;

constexpr double pi = 3.1415926535897932384626433832795;

// All θ values printed by the CLI are degrees unless --radians is given;
// parameter angles (--lambda, --beta) are always radians.
double emit_angle(double radians, bool keep_radians) {
    return keep_radians ? radians : radians * (180.0 / pi);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << content;
}

spirallike::RadiusFunction select_profile(const std::string& radius_file,
                                          const spirallike::SpiralParams& params,
                                          const std::string& kind) {
    if (!radius_file.empty()) {
        return spirallike::RadiusFunction::from_csv_file(radius_file);
    }
    if (kind == "v") {
        return spirallike::RadiusFunction::standard_v(params);
    }
    return spirallike::RadiusFunction::standard_u(params);
}

// Points given as "re,im;re,im;..." on the flag or one "re,im" per line in a
// file; the token "inf" denotes the point at infinity.
std::vector<spirallike::SpherePoint> parse_points(const std::string& inline_points,
                                                  const std::string& points_file) {
    std::vector<std::string> tokens;
    if (!inline_points.empty()) {
        std::stringstream ss(inline_points);
        std::string tok;
        while (std::getline(ss, tok, ';')) tokens.push_back(tok);
    } else if (!points_file.empty()) {
        std::ifstream in(points_file);
        if (!in) {
            throw std::runtime_error("cannot open points file: " + points_file);
        }
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) tokens.push_back(line);
        }
    } else {
        throw std::runtime_error("no points given: use --points or --points-file");
    }

    std::vector<spirallike::SpherePoint> points;
    for (const std::string& tok : tokens) {
        if (tok == "inf") {
            points.push_back(spirallike::SpherePoint::infinity());
            continue;
        }
        const auto comma = tok.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error("malformed point '" + tok + "': expected re,im");
        }
        try {
            points.push_back(Complex(std::stod(tok.substr(0, comma)),
                                     std::stod(tok.substr(comma + 1))));
        } catch (const std::exception&) {
            throw std::runtime_error("malformed point '" + tok + "'");
        }
    }
    return points;
}

std::string point_to_csv(const spirallike::SpherePoint& p) {
    if (p.is_infinity()) return "inf,inf";
    return spirallike::format_double(p.value().real()) + "," +
           spirallike::format_double(p.value().imag());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometry and quasiconformal machinery of strongly spirallike domains"};
    app.require_subcommand(1);

    double lambda = 0.0, alpha = 0.5, beta = 0.0, tol = 1e-8, step = 1e-5;
    std::size_t samples = 360, grid_points = 0;
    std::string radius_file, out_format, output_path, kind = "u";
    std::string inline_points, points_file;
    bool use_radians = false, with_fd = false;

    auto add_common = [&](CLI::App* cmd, bool needs_alpha) {
        cmd->add_option("--lambda", lambda, "spiral angle (radians)");
        if (needs_alpha) cmd->add_option("--alpha", alpha, "order in (0,1)");
        cmd->add_option("--output", output_path, "write to a file instead of stdout");
        return cmd;
    };

    CLI::App* domain = add_common(app.add_subcommand("domain", "emit a boundary polyline"), true);
    domain->add_option("--kind", kind, "standard domain: u or v")
        ->check(CLI::IsMember({"u", "v"}));
    domain->add_option("--radius-file", radius_file, "radius profile CSV (theta,R; radians)");
    domain->add_option("--samples", samples, "number of boundary points");
    domain->add_option("--out", out_format, "output format: csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));

    CLI::App* check = add_common(app.add_subcommand("check", "characterization checks as JSON"), true);
    check->add_option("--radius-file", radius_file, "radius profile CSV (theta,R; radians)");
    check->add_option("--grid", grid_points, "base-angle grid (default: knot count)");
    check->add_flag("--radians", use_radians, "report witness angles in radians");
    check->add_option("--out", out_format, "output format: json")
        ->check(CLI::IsMember({"json"}));

    CLI::App* min_order = add_common(app.add_subcommand("min-order", "print the smallest admissible order"), true);
    min_order->add_option("--radius-file", radius_file, "radius profile CSV (theta,R; radians)");
    min_order->add_option("--kind", kind, "standard domain: u or v")
        ->check(CLI::IsMember({"u", "v"}));

    CLI::App* beltrami = add_common(app.add_subcommand("beltrami", "dilatation survey as JSON"), true);
    beltrami->add_option("--radius-file", radius_file, "radius profile CSV (theta,R; radians)");
    beltrami->add_option("--grid", grid_points, "number of survey angles (default 128)");
    beltrami->add_flag("--fd", with_fd, "add a finite-difference cross-check");
    beltrami->add_option("--step", step, "finite-difference step");

    CLI::App* map_g_cmd = add_common(app.add_subcommand("map-g", "evaluate the disk map g at points"), true);
    map_g_cmd->add_option("--points", inline_points, "points as re,im;re,im;...");
    map_g_cmd->add_option("--points-file", points_file, "file with one re,im per line");
    map_g_cmd->add_option("--tol", tol, "quadrature relative tolerance");

    CLI::App* extend_cmd = add_common(app.add_subcommand("extend", "evaluate the extension of g across the circle"), true);
    extend_cmd->add_option("--points", inline_points, "points as re,im;re,im;... (inf allowed)");
    extend_cmd->add_option("--points-file", points_file, "file with one re,im per line");
    extend_cmd->add_option("--tol", tol, "quadrature relative tolerance");

    CLI::App* verify = app.add_subcommand("verify-identity", "closed-form integral identity check");
    verify->add_option("--alpha", alpha, "order in (0,1)");
    verify->add_option("--beta", beta, "shift |beta| < pi/2 (radians)");
    verify->add_option("--tol", tol, "pass threshold on rel_err (default 1e-8)");
    verify->add_option("--output", output_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(domain)) {
            const spirallike::SpiralParams params(lambda, alpha);
            const spirallike::RadiusFunction profile = select_profile(radius_file, params, kind);
            const auto polyline =
                spirallike::boundary_polyline(profile, spirallike::LambdaAngle(lambda), samples);
            const std::string body = (out_format == "svg") ? spirallike::polyline_to_svg(polyline)
                                                           : spirallike::polyline_to_csv(polyline);
            write_output(output_path, body);
            return 0;
        }

        if (app.got_subcommand(check)) {
            const spirallike::SpiralParams params(lambda, alpha);
            const spirallike::RadiusFunction profile = select_profile(radius_file, params, "u");
            const std::size_t grid = grid_points > 0
                                         ? grid_points
                                         : (profile.is_sampled() ? profile.knot_count()
                                                                 : spirallike::RadiusFunction::default_knots);
            const spirallike::CheckReport reports[] = {
                spirallike::check_derivative(profile, params),
                spirallike::check_inclusion_boundary(profile, params, grid),
                spirallike::check_inclusion_interior(profile, params, grid),
                spirallike::check_dual_inclusion(profile, params, grid),
            };
            nlohmann::ordered_json array = nlohmann::ordered_json::array();
            bool all_pass = true;
            for (const spirallike::CheckReport& r : reports) {
                spirallike::CheckReport scaled = r;
                if (!std::isnan(scaled.witness_theta0)) {
                    scaled.witness_theta0 = emit_angle(scaled.witness_theta0, use_radians);
                }
                scaled.witness_theta = emit_angle(scaled.witness_theta, use_radians);
                array.push_back(nlohmann::ordered_json::parse(spirallike::to_json(scaled)));
                all_pass = all_pass && r.pass;
            }
            write_output(output_path, array.dump(2) + "\n");
            return all_pass ? 0 : 1;
        }

        if (app.got_subcommand(min_order)) {
            spirallike::RadiusFunction profile = [&]() {
                if (!radius_file.empty()) {
                    return spirallike::RadiusFunction::from_csv_file(radius_file);
                }
                const spirallike::SpiralParams params(lambda, alpha);
                return kind == "v" ? spirallike::RadiusFunction::standard_v(params)
                                   : spirallike::RadiusFunction::standard_u(params);
            }();
            const double order =
                spirallike::minimal_order(profile, spirallike::LambdaAngle(lambda));
            write_output(output_path, spirallike::format_double(order) + "\n");
            return 0;
        }

        if (app.got_subcommand(beltrami)) {
            const spirallike::SpiralParams params(lambda, alpha);
            const spirallike::RadiusFunction profile = select_profile(radius_file, params, "u");
            const std::size_t grid = grid_points > 0 ? grid_points : 128;
            const spirallike::BeltramiReport report =
                spirallike::dilatation_sup(profile, params, grid);
            nlohmann::ordered_json j =
                nlohmann::ordered_json::parse(spirallike::to_json(report));
            if (with_fd) {
                // cross-check the analytic values against finite differences
                // at the surveyed points
                const spirallike::LambdaAngle lam(lambda);
                double worst = 0.0;
                for (const spirallike::BeltramiSample& s : report.points) {
                    const double theta = spirallike::lambda_arg(lam, s.w);
                    if (profile.ridge_distance(theta) < 10.0 * step) continue;
                    const Complex fd = spirallike::beltrami_fd(profile, lam, s.w, step);
                    const Complex an = spirallike::beltrami_analytic(profile, lam, theta);
                    worst = std::max(worst, std::abs(fd - an));
                }
                j["fd_max_dev"] = worst;
            }
            write_output(output_path, j.dump(2) + "\n");
            return report.pass ? 0 : 1;
        }

        if (app.got_subcommand(map_g_cmd)) {
            const spirallike::SpiralParams params(lambda, alpha);
            spirallike::QuadratureConfig cfg;
            cfg.rel_tol = map_g_cmd->count("--tol") ? tol : cfg.rel_tol;
            const auto points = parse_points(inline_points, points_file);
            std::string body = "z_re,z_im,g_re,g_im\n";
            for (const spirallike::SpherePoint& p : points) {
                const Complex z = p.value();  // throws for inf: g is a disk map
                const Complex w = spirallike::map_g(params, z, cfg);
                body += point_to_csv(p) + "," + point_to_csv(w) + "\n";
            }
            write_output(output_path, body);
            return 0;
        }

        if (app.got_subcommand(extend_cmd)) {
            const spirallike::SpiralParams params(lambda, alpha);
            spirallike::QuadratureConfig cfg;
            cfg.rel_tol = extend_cmd->count("--tol") ? tol : cfg.rel_tol;
            const spirallike::ConformalMap map(params, cfg);
            const spirallike::RadiusFunction profile =
                spirallike::RadiusFunction::standard_u(params);
            const spirallike::LambdaAngle lam(lambda);
            const spirallike::AnalyticMap f{[&](const Complex& z) { return map.g(z); },
                                            nullptr};
            const auto points = parse_points(inline_points, points_file);
            std::string body = "z_re,z_im,f_re,f_im\n";
            for (const spirallike::SpherePoint& p : points) {
                const spirallike::SpherePoint w = spirallike::extend(f, profile, lam, p);
                body += point_to_csv(p) + "," + point_to_csv(w) + "\n";
            }
            write_output(output_path, body);
            return 0;
        }

        if (app.got_subcommand(verify)) {
            spirallike::QuadratureConfig cfg;
            std::vector<double> alphas, betas;
            if (verify->count("--alpha") > 0 || verify->count("--beta") > 0) {
                alphas = {alpha};
                betas = {beta};
            } else {
                for (int i = 1; i <= 9; ++i) alphas.push_back(0.1 * i);
                for (int i = 0; i <= 8; ++i) betas.push_back(-1.2 + 0.3 * i);
            }
            std::string body = "alpha,beta,lhs,rhs,rel_err\n";
            bool all_pass = true;
            for (double a : alphas) {
                for (double b : betas) {
                    const spirallike::IdentityResult r = spirallike::integral_identity(a, b, cfg);
                    body += spirallike::format_double(a) + "," + spirallike::format_double(b) +
                            "," + spirallike::format_double(r.lhs) + "," +
                            spirallike::format_double(r.rhs) + "," +
                            spirallike::format_double(r.rel_err) + "\n";
                    all_pass = all_pass && r.rel_err <= tol;
                }
            }
            write_output(output_path, body);
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // no subcommand matched (require_subcommand should prevent this)
}
