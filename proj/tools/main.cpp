// SPDX-License-Identifier: MIT
//
// mtwsphere: classify, scan and cross-check radial costs on round spheres.
#include "mtwsphere/classifier.hpp"
#include "mtwsphere/errors.hpp"
#include "mtwsphere/mtw_analytic.hpp"
#include "mtwsphere/mtw_oracle.hpp"
#include "mtwsphere/report_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace mtwsphere;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolated = 2;
constexpr int kExitIndeterminate = 3;

struct RunConfig {
    std::string cost = "half-square";
    std::string sign = "+";
    double m = 2;
    double radius = 1;
    int dim = 3;
    int grid = 2048;
    double margin = 1e-6;
    double strictness = 1e-9;
    std::optional<double> lower;
    std::optional<double> upper;
    std::string format = "text";
    std::string out;

    double d = 1;
    std::string oc = "perp";
    std::vector<double> bracket;
    double R_large = 1e4;
    double rho_sup = 1;
};

Sign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus")
        return Sign::Plus;
    if (s == "-" || s == "minus")
        return Sign::Minus;
    throw DomainError("sign must be + or -");
}

CostModel build_model(const RunConfig& c) {
    const Sign s = parse_sign(c.sign);
    if (c.cost == "half-square")
        return CostModel::half_square();
    if (c.cost == "chordal")
        return CostModel::chordal(c.radius);
    if (c.cost == "power")
        return CostModel::power_law(s, c.m);
    if (c.cost == "log")
        return CostModel::log_profile(s);
    if (c.cost == "sqrt-minus")
        return CostModel::sqrt_one_minus_dsq(s);
    if (c.cost == "sqrt-plus")
        return CostModel::sqrt_one_plus_dsq(s);
    throw DomainError("unknown cost '" + c.cost + "'");
}

OrientationCase build_case(const std::string& s) {
    const auto oc = parse_case(s);
    if (!oc)
        throw DomainError("case must be one of perp, xi, eta, diag");
    return *oc;
}

ScanOptions build_scan_options(const RunConfig& c) {
    ScanOptions o;
    o.grid_size = c.grid;
    o.margin = c.margin;
    o.lower = c.lower;
    o.upper = c.upper;
    return o;
}

void emit(const RunConfig& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw DomainError("cannot open output file " + c.out);
    f << text;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void add_model_options(CLI::App* app, RunConfig& c) {
    app->add_option("--cost", c.cost, "half-square|chordal|power|log|sqrt-minus|sqrt-plus");
    app->add_option("--sign", c.sign, "+ or -");
    app->add_option("--m", c.m, "power-law exponent");
    app->add_option("--radius,--R", c.radius, "sphere radius");
}

void add_scan_options(CLI::App* app, RunConfig& c) {
    app->add_option("--dim", c.dim, "sphere dimension n");
    app->add_option("--grid", c.grid, "linear grid size");
    app->add_option("--margin", c.margin, "endpoint margin as a fraction of R pi");
    app->add_option("--strictness", c.strictness, "sign band around zero");
    app->add_option("--lower", c.lower, "truncate the scan to d >= lower");
    app->add_option("--upper", c.upper, "truncate the scan to d <= upper");
}

void add_output_options(CLI::App* app, RunConfig& c, const std::string& def) {
    c.format = def;
    app->add_option("--format", c.format, "text|csv|json")->capture_default_str();
    app->add_option("--out", c.out, "output path (default stdout)");
}

int cmd_classify(const RunConfig& c) {
    const CostModel model = build_model(c);
    const SphereConfig cfg{c.radius, c.dim};
    const ClassificationReport r = classify(scan(model, cfg, build_scan_options(c)), c.dim, c.strictness);
    if (c.format == "json") {
        Json body = to_json(r);
        body["model"] = model.label();
        body["R"] = c.radius;
        emit(c, envelope("classification", body).dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "model " << model.label() << "  R " << fmt(c.radius) << "  n " << c.dim << "\n";
        s << "verdict " << verdict_name(r.verdict);
        if (r.verdict == Verdict::StrongA3)
            s << "  C " << fmt(r.constant);
        s << "\nsup " << fmt(r.sup);
        if (r.witness)
            s << " at d " << fmt(r.witness->d) << " case " << case_name(r.witness->oc);
        s << "\ngrid evidence at resolution " << r.resolution << "\n";
        emit(c, s.str());
    }
    switch (r.verdict) {
    case Verdict::StrongA3:
    case Verdict::A3w:
        return kExitOk;
    case Verdict::Violated:
        return kExitViolated;
    case Verdict::Indeterminate:
        return kExitIndeterminate;
    }
    return kExitUsage;
}

int cmd_scan(const RunConfig& c) {
    const CostModel model = build_model(c);
    const SphereConfig cfg{c.radius, c.dim};
    const ScanReport r = scan(model, cfg, build_scan_options(c));
    if (c.format == "json")
        emit(c, envelope("scan", to_json(r)).dump(2) + "\n");
    else
        emit(c, scan_csv(r));
    return kExitOk;
}

int cmd_oracle(const RunConfig& c) {
    const OracleTask task{build_model(c), c.radius, c.d, build_case(c.oc)};
    const OracleComparison r = compare_one(task);
    if (!r.error.empty())
        throw DomainError(r.error);
    if (c.format == "json") {
        emit(c, envelope("oracle", to_json(r)).dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "analytic " << fmt(r.analytic) << "\noracle " << fmt(r.oracle.value) << "\ndifference "
          << fmt(std::abs(r.oracle.value - r.analytic)) << "\nest_error " << fmt(r.oracle.est_error)
          << "\n" << (r.ok ? "agree" : "disagree") << "\n";
        emit(c, s.str());
    }
    return r.ok ? kExitOk : kExitViolated;
}

int emit_root(const RunConfig& c, const BifurcationResult& b) {
    if (c.format == "json") {
        emit(c, envelope("root", to_json(b)).dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << b.parameter << " " << fmt(b.root) << "\nresidual " << fmt(b.residual) << "\nbracket ["
          << fmt(b.bracket.lo) << ", " << fmt(b.bracket.hi) << "]\n";
        emit(c, s.str());
    }
    return kExitOk;
}

int cmd_bound(const RunConfig& c) {
    const double b = gradient_bound(c.dim, c.rho_sup);
    if (c.format == "json")
        emit(c, envelope("bound", {{"n", c.dim}, {"rho_sup", c.rho_sup}, {"bound", b}}).dump(2) + "\n");
    else
        emit(c, fmt(b) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MTW regularity checks for radial costs on round spheres"};
    app.require_subcommand(1);
    RunConfig c;

    auto* classify_cmd = app.add_subcommand("classify", "verdict from a scan of O1..O4");
    add_model_options(classify_cmd, c);
    add_scan_options(classify_cmd, c);
    add_output_options(classify_cmd, c, "text");

    auto* scan_cmd = app.add_subcommand("scan", "P1..P4 and O1..O4 over the distance grid");
    add_model_options(scan_cmd, c);
    add_scan_options(scan_cmd, c);
    add_output_options(scan_cmd, c, "csv");

    auto* oracle_cmd = app.add_subcommand("oracle", "finite-difference tensor against the closed form");
    add_model_options(oracle_cmd, c);
    oracle_cmd->add_option("--d", c.d, "distance")->required();
    oracle_cmd->add_option("--case", c.oc, "perp|xi|eta|diag");
    add_output_options(oracle_cmd, c, "text");

    auto* bif_cmd = app.add_subcommand("bifurcate", "critical exponents and threshold distances");
    bif_cmd->require_subcommand(1);
    auto* cubic_cmd = bif_cmd->add_subcommand("mstar-cubic", "negative root of -2m^3+5m^2-4");
    add_output_options(cubic_cmd, c, "text");
    auto* pos_cmd = bif_cmd->add_subcommand("mstar-positive", "large-radius root of O4 in m");
    pos_cmd->add_option("--R", c.R_large, "large radius");
    add_output_options(pos_cmd, c, "text");
    auto* pub_cmd = bif_cmd->add_subcommand("published-o4", "large-radius root of the published O4 form");
    add_output_options(pub_cmd, c, "text");
    auto* root_cmd = bif_cmd->add_subcommand("root", "root of O in d inside a bracket");
    add_model_options(root_cmd, c);
    root_cmd->add_option("--case", c.oc, "perp|xi|eta|diag");
    root_cmd->add_option("--bracket", c.bracket, "lo hi")->expected(2)->required();
    add_output_options(root_cmd, c, "text");

    auto* bound_cmd = app.add_subcommand("bound", "gradient bound on the unit sphere");
    bound_cmd->add_option("--dim", c.dim, "sphere dimension n")->required();
    bound_cmd->add_option("--rho-sup", c.rho_sup, "density upper bound")->required();
    add_output_options(bound_cmd, c, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c.format != "text" && c.format != "csv" && c.format != "json")
            throw DomainError("format must be text, csv or json");
        if (*classify_cmd)
            return cmd_classify(c);
        if (*scan_cmd)
            return cmd_scan(c);
        if (*oracle_cmd)
            return cmd_oracle(c);
        if (*bound_cmd)
            return cmd_bound(c);
        if (*cubic_cmd)
            return emit_root(c, mstar_cubic());
        if (*pub_cmd)
            return emit_root(c, published_o4_large_radius_root());
        try {
            if (*pos_cmd)
                return emit_root(c, mstar_positive(c.R_large));
            if (*root_cmd) {
                const SphereConfig cfg{c.radius, build_case(c.oc) == OrientationCase::PerpToBoth ? 3 : 2};
                return emit_root(c, refine_root(build_model(c), cfg, build_case(c.oc),
                                                {c.bracket.at(0), c.bracket.at(1)}));
            }
        } catch (const NoSignChange& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitViolated;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
