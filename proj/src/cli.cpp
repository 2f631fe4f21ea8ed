#include "revolve/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "revolve/catalog.hpp"
#include "revolve/curvature.hpp"
#include "revolve/error.hpp"
#include "revolve/expression.hpp"
#include "revolve/mesh.hpp"
#include "revolve/momentum.hpp"
#include "revolve/numerics.hpp"
#include "revolve/reconstruct.hpp"

namespace revolve::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kClosedSamples = 2049;
constexpr int kMomentumSamples = 257;
constexpr int kConstraintSamples = 100;

struct Tolerances {
    double quad = 1e-12;
    double ode = 1e-10;
    double verify = 1e-6;
};

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(v))
        throw Error(ErrorKind::InvalidArgument, what + ": '" + text + "' is not a finite number");
    return v;
}

Interval parse_domain(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorKind::InvalidArgument, "--domain expects lo:hi, got '" + text + "'");
    const Interval d{parse_number(text.substr(0, colon), "--domain"),
                     parse_number(text.substr(colon + 1), "--domain")};
    if (!(d.lo < d.hi))
        throw Error(ErrorKind::InvalidArgument, "--domain needs lo < hi");
    return d;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& items)
{
    std::map<std::string, double> out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw Error(ErrorKind::InvalidArgument, "--param expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (out.count(name))
            throw Error(ErrorKind::InvalidArgument, "--param " + name + " given twice");
        out[name] = parse_number(item.substr(eq + 1), "--param " + name);
    }
    return out;
}

Json params_json(const std::map<std::string, double>& params)
{
    Json j = Json::object();
    for (const auto& [k, v] : params)
        j[k] = v;
    return j;
}

std::map<std::string, double> params_from_json(const Json& j)
{
    std::map<std::string, double> out;
    for (const auto& [k, v] : j.items())
        out[k] = v.get<double>();
    return out;
}

Expression parse_expression(const std::string& text, const std::map<std::string, double>& params)
{
    return Expression::parse(text, Expression::Params(params.begin(), params.end()));
}

// Files produced by one command, written only once the command has succeeded.
class Artifacts {
public:
    void add(std::string name, std::string bytes) { files_.emplace_back(std::move(name), std::move(bytes)); }

    void commit(const fs::path& dir) const
    {
        if (files_.empty())
            return;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec)
            throw Error(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());
        std::vector<fs::path> staged;
        auto discard = [&] {
            for (const auto& p : staged)
                fs::remove(p, ec);
        };
        for (const auto& [name, bytes] : files_) {
            const fs::path tmp = dir / ("." + name + ".partial");
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            staged.push_back(tmp);
            out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
            out.close();
            if (!out) {
                discard();
                throw Error(ErrorKind::IoError, "cannot write " + tmp.string());
            }
        }
        for (std::size_t i = 0; i < files_.size(); ++i) {
            fs::rename(staged[i], dir / files_[i].first, ec);
            if (ec) {
                discard();
                throw Error(ErrorKind::IoError, "cannot rename into " + (dir / files_[i].first).string());
            }
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

// The surface a working directory describes: a prescription or a catalog entry.
struct Surface {
    Json state;
    std::optional<Momentum> momentum;
    std::optional<catalog::ClosedProfile> closed;
    Interval domain;
};

Momentum prescription_momentum(const Json& s, double tol_quad)
{
    const auto kind_text = s.at("kind").get<std::string>();
    const auto kind = parse_prescription_kind(kind_text);
    if (!kind)
        throw Error(ErrorKind::InvalidArgument, "--kind must be kp, km, mean or gauss, got '" + kind_text + "'");
    const auto params = params_from_json(s.at("params"));
    const Expression expr = parse_expression(s.at("expr").get<std::string>(), params);
    Prescription p;
    p.kind = *kind;
    p.func = expr.as_function();
    p.constant = s.at("const").get<double>();
    p.sign = s.at("sign").get<int>();
    p.domain = {s.at("domain").at(0).get<double>(), s.at("domain").at(1).get<double>()};
    if (!s.at("anchor").is_null())
        p.anchor = s.at("anchor").get<double>();
    p.tolerance = tol_quad;
    return momentum_from(p);
}

Surface load_surface(const Json& state, double tol_quad)
{
    Surface out;
    out.state = state;
    const auto source = state.at("source").get<std::string>();
    if (source == "prescription") {
        out.momentum = prescription_momentum(state, tol_quad);
        out.domain = out.momentum->domain();
    } else if (source == "catalog") {
        auto entry = catalog::build(state.at("name").get<std::string>(),
                                    params_from_json(state.at("params")));
        out.momentum = entry.momentum;
        out.closed = entry.closed_profile;
        if (entry.momentum)
            out.domain = entry.momentum->domain();
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown surface source '" + source + "'");
    }
    return out;
}

Surface load_surface(const fs::path& dir, double tol_quad)
{
    const fs::path path = dir / "surface.json";
    if (!fs::exists(path))
        throw Error(ErrorKind::IoError, path.string() + " not found; run prescribe or catalog build first");
    Json state;
    try {
        state = Json::parse(read_file(path));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::IoError, path.string() + ": " + e.what());
    }
    return load_surface(state, tol_quad);
}

struct ProfileArgs {
    std::optional<double> start;
    int direction = 1;
    std::optional<double> s_max;
    int samples = 512;
    std::string clustering = "cosine";
};

Profile make_profile(const Surface& surface, const ProfileArgs& a, const Tolerances& tol)
{
    if (surface.closed && !a.start)
        return catalog::sample_closed_profile(*surface.closed, kClosedSamples);
    if (!surface.momentum)
        throw Error(ErrorKind::InvalidArgument, "surface has no momentum to integrate");
    const Momentum& m = *surface.momentum;
    double start = 0.0;
    if (a.start) {
        start = *a.start;
    } else {
        const auto admissible = admissible_intervals(m);
        if (admissible.empty())
            throw Error(ErrorKind::DomainViolation, "|K| >= 1 everywhere on the domain");
        start = admissible.front().lo;
    }
    if (a.direction != 1 && a.direction != -1)
        throw Error(ErrorKind::InvalidArgument, "--direction must be +1 or -1");
    if (a.samples < 5)
        throw Error(ErrorKind::InvalidArgument, "--samples must be at least 5");
    ProfileOptions opt;
    opt.s_max = a.s_max.value_or(4 * m.domain().width());
    opt.samples_per_branch = a.samples;
    opt.tolerance = {tol.ode, 1e-2 * tol.ode};
    if (a.clustering == "cosine")
        opt.clustering = Clustering::Cosine;
    else if (a.clustering == "uniform")
        opt.clustering = Clustering::Uniform;
    else
        throw Error(ErrorKind::InvalidArgument, "--clustering must be cosine or uniform");
    return integrate_profile(m, start, a.direction, opt);
}

Profile profile_for(const fs::path& dir, const Surface& surface, const Tolerances& tol)
{
    const fs::path path = dir / "profile.csv";
    if (fs::exists(path)) {
        std::istringstream in(read_file(path));
        return read_profile_csv(in);
    }
    return make_profile(surface, {}, tol);
}

// Runs of consecutive samples at distance >= threshold from the axis.
std::vector<std::span<const ProfileSample>> off_axis_runs(const std::vector<ProfileSample>& samples,
                                                          double threshold)
{
    std::vector<std::span<const ProfileSample>> runs;
    std::size_t i = 0;
    while (i < samples.size()) {
        while (i < samples.size() && std::abs(samples[i].x) < threshold)
            ++i;
        const std::size_t first = i;
        while (i < samples.size() && std::abs(samples[i].x) >= threshold)
            ++i;
        if (i - first >= 5)
            runs.emplace_back(samples.data() + first, i - first);
    }
    return runs;
}

struct Maximum {
    double value = 0.0;
    bool finite = true;

    void add(double v)
    {
        if (!std::isfinite(v))
            finite = false;
        else
            value = std::max(value, std::abs(v));
    }
};

Json check(const Maximum& m, double tolerance)
{
    Json j;
    j["max"] = m.finite ? Json(m.value) : Json(nullptr);
    j["tolerance"] = tolerance;
    j["pass"] = m.finite && m.value <= tolerance;
    return j;
}

struct VerifyArgs {
    std::optional<double> q;
    std::string expr_h;
    std::string expr_kg;
    double gamma_h = 0.0;
    double const_g = 0.0;
    double anchor = 0.0;
    std::optional<std::string> domain;
    std::string report = "json";
};

Json verify_report(const Surface& surface, const Profile& profile, const VerifyArgs& a,
                   const std::map<std::string, double>& params, const Tolerances& tol)
{
    const auto& samples = profile.samples;
    if (samples.size() < 5)
        throw Error(ErrorKind::DegenerateProfile, "profile has fewer than 5 samples");
    double reach = 0.0;
    for (const auto& p : samples)
        reach = std::max(reach, std::abs(p.x));
    // Curvature diverges at cusps on the axis; samples this close are skipped.
    const double exclusion = 1e-3 * reach;
    const auto runs = off_axis_runs(samples, exclusion);

    const double tol_first = tol.verify;
    const double tol_second = 1e3 * tol.verify;

    Maximum unit_speed;
    Maximum momentum_trip;
    Maximum tangent;
    Maximum h_trip;
    Maximum kg_trip;
    Maximum h_analytic;
    Maximum h_discrete;
    double kgx_min = std::numeric_limits<double>::infinity();
    double kgx_max = -std::numeric_limits<double>::infinity();
    std::size_t used = 0;

    for (const auto& run : runs) {
        used += run.size();
        std::vector<double> s(run.size());
        std::vector<Point2> pts(run.size());
        for (std::size_t i = 0; i < run.size(); ++i) {
            s[i] = run[i].s;
            pts[i] = {run[i].x, run[i].z};
        }
        for (std::size_t i = 0; i < run.size(); ++i) {
            const double dx = numerics::stencil_derivative(s, i, [&](std::size_t j) { return run[j].x; });
            const double dz = numerics::stencil_derivative(s, i, [&](std::size_t j) { return run[j].z; });
            unit_speed.add(std::hypot(dx, dz) - 1);
        }
        const auto discrete = discrete_curvatures(run);
        for (std::size_t i = 0; i < run.size(); ++i) {
            h_discrete.add(discrete[i].H);
            const double kgx = discrete[i].K_G * run[i].x;
            kgx_min = std::min(kgx_min, kgx);
            kgx_max = std::max(kgx_max, kgx);
        }
        if (!surface.momentum)
            continue;
        const Momentum& m = *surface.momentum;
        const auto measured = momentum_of_profile(pts);
        for (std::size_t i = 0; i < run.size(); ++i) {
            const double x = run[i].x;
            const double k = m(x);
            momentum_trip.add(measured[i].K - k);
            tangent.add(run[i].tz - k);
            const auto exact = curvature_sample(m, x);
            h_analytic.add(exact.H);
            h_trip.add((discrete[i].H - exact.H) / std::max(1.0, std::abs(exact.H)));
            kg_trip.add((discrete[i].K_G - exact.K_G) / std::max(1.0, std::abs(exact.K_G)));
        }
    }
    if (runs.empty())
        throw Error(ErrorKind::DegenerateProfile, "no run of 5 samples away from the axis");

    Json report;
    report["surface"] = surface.state;
    report["samples"] = samples.size();
    report["samples_checked"] = used;
    report["axis_exclusion"] = exclusion;
    report["branch_events"] = profile.branch_events;

    Json checks = Json::object();
    checks["unit_speed"] = check(unit_speed, tol_first);
    if (surface.momentum) {
        checks["momentum_round_trip"] = check(momentum_trip, tol_first);
        checks["tangent_momentum"] = check(tangent, tol_first);
        checks["mean_curvature_round_trip"] = check(h_trip, tol_second);
        checks["gauss_curvature_round_trip"] = check(kg_trip, tol_second);
        checks["mean_curvature_round_trip"]["scale"] = "max(1, |analytic|)";
        checks["gauss_curvature_round_trip"]["scale"] = "max(1, |analytic|)";
    }
    if (a.q) {
        if (!surface.momentum)
            throw Error(ErrorKind::InvalidArgument, "--q needs a surface with a momentum");
        Maximum w;
        for (const auto& run : runs)
            for (const auto& p : run)
                w.add(weingarten_residual(*surface.momentum, *a.q, p.x));
        checks["weingarten"] = check(w, tol_first);
        checks["weingarten"]["q"] = *a.q;
    }
    if (!a.expr_h.empty() || !a.expr_kg.empty()) {
        if (a.expr_h.empty() || a.expr_kg.empty())
            throw Error(ErrorKind::InvalidArgument, "--expr-h and --expr-kg go together");
        Interval domain = a.domain ? parse_domain(*a.domain) : surface.domain;
        if (!(domain.lo < domain.hi))
            throw Error(ErrorKind::InvalidArgument, "constraint check needs --domain");
        const Expression h = parse_expression(a.expr_h, params);
        const Expression kg = parse_expression(a.expr_kg, params);
        const ScalarFunction hf = h.as_function();
        const ScalarFunction kf = kg.as_function();
        const Interval span = hull(domain, a.anchor);
        const numerics::Antiderivative xh(ScalarFunction([hf](double x) { return x * hf(x); }),
                                          span, a.anchor, tol.quad);
        const numerics::Antiderivative xk(ScalarFunction([kf](double x) { return x * kf(x); }),
                                          span, a.anchor, tol.quad);
        Maximum c;
        for (int i = 0; i < kConstraintSamples; ++i) {
            const double x = i == kConstraintSamples - 1
                                 ? domain.hi
                                 : domain.lo + domain.width() * i / (kConstraintSamples - 1);
            c.add(constraint_residual(xh, xk, a.gamma_h, a.const_g, x));
        }
        checks["constraint"] = check(c, tol_first);
        checks["constraint"]["expr_h"] = h.to_string();
        checks["constraint"]["expr_kg"] = kg.to_string();
        checks["constraint"]["gamma_h"] = a.gamma_h;
        checks["constraint"]["const_g"] = a.const_g;
    }
    report["checks"] = checks;

    Json mean;
    mean["max_abs_analytic"] = surface.momentum ? (h_analytic.finite ? Json(h_analytic.value) : Json(nullptr))
                                                : Json(nullptr);
    mean["max_abs_discrete"] = h_discrete.finite ? Json(h_discrete.value) : Json(nullptr);
    report["mean_curvature"] = mean;
    Json kgx;
    kgx["min"] = std::isfinite(kgx_min) ? Json(kgx_min) : Json(nullptr);
    kgx["max"] = std::isfinite(kgx_max) ? Json(kgx_max) : Json(nullptr);
    report["gauss_times_x"] = kgx;

    bool pass = true;
    for (const auto& [name, c] : checks.items())
        pass = pass && c.at("pass").get<bool>();
    report["pass"] = pass;
    return report;
}

Json catalog_listing()
{
    Json list = Json::array();
    for (const auto& e : catalog::defaults()) {
        Json j;
        j["name"] = e.name;
        Json params = Json::object();
        for (const auto& p : e.params)
            params[p.name] = p.value;
        j["params"] = params;
        j["provenance"] = e.provenance;
        j["momentum-expression"] = e.momentum_expression;
        list.push_back(j);
    }
    return list;
}

fs::path require_out(const std::optional<std::string>& out)
{
    if (!out || out->empty())
        throw Error(ErrorKind::InvalidArgument, "--out DIR is required");
    return fs::path(*out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rotational surfaces from curvatures prescribed as functions of the distance to the axis",
                 "revolve"};
    app.require_subcommand(1);

    Tolerances tol;
    std::optional<std::string> out_dir;
    std::vector<std::string> param_items;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_dir, "Working directory for state and artifacts");
        cmd->add_option("--param", param_items, "Parameter name=value (repeatable)");
        cmd->add_option("--tol-quad", tol.quad, "Quadrature tolerance")->capture_default_str();
        cmd->add_option("--tol-ode", tol.ode, "ODE relative tolerance")->capture_default_str();
        cmd->add_option("--tol-verify", tol.verify, "Verification tolerance")->capture_default_str();
    };

    std::string kind;
    std::string expr;
    double constant = 0.0;
    int sign = 1;
    std::string domain;
    std::optional<double> anchor;
    auto* prescribe = app.add_subcommand("prescribe", "Build the momentum of a curvature prescription");
    prescribe->add_option("--kind", kind, "kp, km, mean or gauss")->required();
    prescribe->add_option("--expr", expr, "Curvature as an expression in x")->required();
    prescribe->add_option("--const", constant, "Integration constant")->capture_default_str();
    prescribe->add_option("--sign", sign, "Branch sign of the Gauss kind")->capture_default_str();
    prescribe->add_option("--domain", domain, "Interval lo:hi of x")->required();
    prescribe->add_option("--anchor", anchor, "Lower limit of the antiderivative (default lo)");
    add_common(prescribe);

    ProfileArgs profile_args;
    auto* profile = app.add_subcommand("profile", "Integrate the generatrix");
    profile->add_option("--start", profile_args.start, "Starting x (default: first admissible x)");
    profile->add_option("--direction", profile_args.direction, "Initial x-direction, +1 or -1")
        ->capture_default_str();
    profile->add_option("--s-max", profile_args.s_max, "Arc length limit (default 4 domain widths)");
    profile->add_option("--samples", profile_args.samples, "Samples per monotone branch")
        ->capture_default_str();
    profile->add_option("--clustering", profile_args.clustering, "cosine or uniform")
        ->capture_default_str();
    add_common(profile);

    int ntheta = 64;
    std::string format = "obj";
    auto* mesh = app.add_subcommand("mesh", "Revolve the profile into a triangle mesh");
    mesh->add_option("--ntheta", ntheta, "Angular subdivisions")->capture_default_str();
    mesh->add_option("--format", format, "obj or stl")->capture_default_str();
    add_common(mesh);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check the profile against the momentum");
    verify->add_option("--report", verify_args.report, "Report format (json)")->capture_default_str();
    verify->add_option("--q", verify_args.q, "Weingarten ratio k_m / k_p to check");
    verify->add_option("--expr-h", verify_args.expr_h, "Mean curvature for the constraint check");
    verify->add_option("--expr-kg", verify_args.expr_kg, "Gauss curvature for the constraint check");
    verify->add_option("--gamma-h", verify_args.gamma_h, "Constant added to int x H dx")
        ->capture_default_str();
    verify->add_option("--const-g", verify_args.const_g, "Constant added to int x K_G dx")
        ->capture_default_str();
    verify->add_option("--anchor", verify_args.anchor, "Lower limit of the constraint integrals")
        ->capture_default_str();
    verify->add_option("--domain", verify_args.domain, "Interval lo:hi for the constraint check");
    add_common(verify);

    auto* cat = app.add_subcommand("catalog", "Named surfaces with closed forms");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "Print the catalog as JSON");
    add_common(cat_list);
    std::string entry_name;
    auto* cat_build = cat->add_subcommand("build", "Select a catalog surface");
    cat_build->add_option("name", entry_name, "Entry name")->required();
    add_common(cat_build);

    double mu = 0.0;
    auto* classify = app.add_subcommand("classify-mean-inverse", "Branch of the H = mu/x family");
    classify->add_option("--mu", mu, "mu > 0")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return ValidationFailure;
    }

    try {
        const auto params = parse_params(param_items);
        if (!(tol.quad > 0) || !(tol.ode > 0) || !(tol.verify > 0))
            throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
        Artifacts artifacts;

        if (*prescribe) {
            const fs::path dir = require_out(out_dir);
            const auto parsed_kind = parse_prescription_kind(kind);
            if (!parsed_kind)
                throw Error(ErrorKind::InvalidArgument, "--kind must be kp, km, mean or gauss");
            if (sign != 1 && sign != -1)
                throw Error(ErrorKind::InvalidArgument, "--sign must be +1 or -1");
            const Interval d = parse_domain(domain);
            const Expression e = parse_expression(expr, params);
            Json state;
            state["source"] = "prescription";
            state["kind"] = kind;
            state["expr"] = e.to_string();
            state["const"] = constant;
            state["sign"] = sign;
            state["domain"] = {d.lo, d.hi};
            state["anchor"] = anchor ? Json(*anchor) : Json(nullptr);
            state["params"] = params_json(params);
            const Momentum m = prescription_momentum(state, tol.quad);

            Json admissible = Json::array();
            for (const auto& iv : admissible_intervals(m))
                admissible.push_back({iv.lo, iv.hi});
            std::ostringstream csv;
            csv << "x,K,dK\n";
            for (int i = 0; i < kMomentumSamples; ++i) {
                const double x = i == kMomentumSamples - 1 ? d.hi : d.lo + d.width() * i / (kMomentumSamples - 1);
                csv << format_double(x) << ',' << format_double(m(x)) << ','
                    << format_double(m.deriv(x)) << '\n';
            }
            Json written = state;
            written["admissible"] = admissible;
            artifacts.add("surface.json", dump(written));
            artifacts.add("momentum.csv", csv.str());
            artifacts.commit(dir);
            return Ok;
        }

        if (*profile) {
            const fs::path dir = require_out(out_dir);
            const Surface surface = load_surface(dir, tol.quad);
            const Profile p = make_profile(surface, profile_args, tol);
            std::ostringstream csv;
            write_profile_csv(csv, p);
            artifacts.add("profile.csv", csv.str());
            artifacts.commit(dir);
            return Ok;
        }

        if (*mesh) {
            const fs::path dir = require_out(out_dir);
            if (format != "obj" && format != "stl")
                throw Error(ErrorKind::InvalidArgument, "--format must be obj or stl");
            const Surface surface = load_surface(dir, tol.quad);
            const Profile p = profile_for(dir, surface, tol);
            const SurfaceMesh m = revolve_profile(p, ntheta);
            std::ostringstream bytes(std::ios::binary);
            if (format == "obj")
                write_obj(bytes, m);
            else
                write_stl(bytes, m);
            artifacts.add("mesh." + format, bytes.str());
            artifacts.commit(dir);
            return Ok;
        }

        if (*verify) {
            const fs::path dir = require_out(out_dir);
            if (verify_args.report != "json")
                throw Error(ErrorKind::InvalidArgument, "--report supports json only");
            const Surface surface = load_surface(dir, tol.quad);
            const Profile p = profile_for(dir, surface, tol);
            const std::string report = dump(verify_report(surface, p, verify_args, params, tol));
            artifacts.add("verify.json", report);
            artifacts.commit(dir);
            out << report;
            return Ok;
        }

        if (*cat_list) {
            const std::string listing = dump(catalog_listing());
            if (out_dir) {
                artifacts.add("catalog.json", listing);
                artifacts.commit(*out_dir);
            }
            out << listing;
            return Ok;
        }

        if (*cat_build) {
            const fs::path dir = require_out(out_dir);
            Json state;
            state["source"] = "catalog";
            state["name"] = entry_name;
            state["params"] = params_json(params);
            const Surface surface = load_surface(state, tol.quad);
            const Profile p = make_profile(surface, {}, tol);
            std::ostringstream csv;
            write_profile_csv(csv, p);
            artifacts.add("surface.json", dump(state));
            artifacts.add("profile.csv", csv.str());
            artifacts.commit(dir);
            return Ok;
        }

        if (*classify) {
            const auto c = classify_mean_inverse(mu);
            out << to_string(c.branch);
            if (c.branch == MeanInverseBranch::Trigonometric)
                out << " theta=" << format_double(c.angle);
            else if (c.branch == MeanInverseBranch::Hyperbolic)
                out << " delta=" << format_double(c.angle);
            out << "\n";
            return Ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_validation_error(e.kind()) ? ValidationFailure : NumericalFailure;
    } catch (const Json::exception& e) {
        err << "error: malformed state: " << e.what() << "\n";
        return ValidationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return NumericalFailure;
    }
    return Ok;
}

}  // namespace revolve::cli
