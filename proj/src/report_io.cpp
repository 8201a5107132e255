// SPDX-License-Identifier: MIT
#include "mtwsphere/report_io.hpp"

#include "mtwsphere/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace mtwsphere {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double real_from(const Json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

const char* kOHeaders[4] = {"O1", "O2", "O3", "O4"};

Json witness_json(const Witness& w) {
    return {{"d", w.d}, {"case", std::string(case_name(w.oc))}, {"value", w.value}};
}

}  // namespace

std::string scan_csv(const ScanReport& r) {
    std::string out = "d,P1,P2,P3,P4,O1,O2,O3,O4,degenerate\n";
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        out += num(r.grid[i]);
        const bool deg = r.degenerate[i];
        for (int k = 0; k < 4; ++k) {
            out += ',';
            if (!deg)
                out += num(r.p_values[i][k]);
        }
        for (int k = 0; k < 4; ++k) {
            out += ',';
            if (!deg)
                out += num(r.o_values[k][i]);
        }
        out += deg ? ",1\n" : ",0\n";
    }
    return out;
}

Json to_json(const ScanReport& r) {
    Json j;
    j["model"] = r.model_label;
    j["R"] = r.R;
    j["grid"] = r.grid;
    j["degenerate"] = r.degenerate;
    Json p = Json::array();
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        Json row = Json::array();
        for (double v : r.p_values[i])
            row.push_back(real_or_null(v));
        p.push_back(row);
    }
    j["p_values"] = p;
    for (int k = 0; k < 4; ++k) {
        Json col = Json::array();
        for (double v : r.o_values[k])
            col.push_back(real_or_null(v));
        j["o_values"][kOHeaders[k]] = col;
        Json sc = Json::array();
        for (const auto& s : r.sign_changes[k])
            sc.push_back({s.lo, s.hi});
        j["sign_changes"][kOHeaders[k]] = sc;
        j["sup_values"][kOHeaders[k]] = real_or_null(r.sup_values[k]);
        j["sup_at"][kOHeaders[k]] = real_or_null(r.sup_at[k]);
    }
    return j;
}

ScanReport scan_from_json(const Json& j) {
    try {
        ScanReport r;
        r.model_label = j.at("model").get<std::string>();
        r.R = j.at("R").get<double>();
        r.grid = j.at("grid").get<std::vector<double>>();
        r.degenerate = j.at("degenerate").get<std::vector<bool>>();
        for (const auto& row : j.at("p_values")) {
            std::array<double, 4> p{};
            for (int k = 0; k < 4; ++k)
                p[k] = real_from(row.at(k));
            r.p_values.push_back(p);
        }
        for (int k = 0; k < 4; ++k) {
            for (const auto& v : j.at("o_values").at(kOHeaders[k]))
                r.o_values[k].push_back(real_from(v));
            for (const auto& s : j.at("sign_changes").at(kOHeaders[k]))
                r.sign_changes[k].push_back({s.at(0).get<double>(), s.at(1).get<double>()});
            r.sup_values[k] = real_from(j.at("sup_values").at(kOHeaders[k]));
            r.sup_at[k] = real_from(j.at("sup_at").at(kOHeaders[k]));
        }
        return r;
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed scan report: ") + e.what());
    }
}

Json to_json(const ClassificationReport& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    j["constant"] = c.constant;
    j["dimension"] = c.dimension;
    Json cases = Json::array();
    for (auto oc : c.considered)
        cases.push_back(std::string(case_name(oc)));
    j["considered"] = cases;
    j["sup"] = real_or_null(c.sup);
    j["witness"] = c.witness ? witness_json(*c.witness) : Json(nullptr);
    j["resolution"] = c.resolution;
    j["evidence"] = "grid evidence at resolution " + std::to_string(c.resolution);
    return j;
}

ClassificationReport classification_from_json(const Json& j) {
    try {
        ClassificationReport c;
        const auto v = parse_verdict(j.at("verdict").get<std::string>());
        if (!v)
            throw DomainError("unknown verdict");
        c.verdict = *v;
        c.constant = j.at("constant").get<double>();
        c.dimension = j.at("dimension").get<int>();
        for (const auto& s : j.at("considered")) {
            const auto oc = parse_case(s.get<std::string>());
            if (!oc)
                throw DomainError("unknown orientation case");
            c.considered.push_back(*oc);
        }
        c.sup = real_from(j.at("sup"));
        const Json& w = j.at("witness");
        if (!w.is_null()) {
            const auto oc = parse_case(w.at("case").get<std::string>());
            if (!oc)
                throw DomainError("unknown orientation case");
            c.witness = Witness{w.at("d").get<double>(), *oc, w.at("value").get<double>()};
        }
        c.resolution = j.at("resolution").get<int>();
        return c;
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed classification report: ") + e.what());
    }
}

Json to_json(const BifurcationResult& b) {
    return {{"parameter", b.parameter},
            {"bracket", {b.bracket.lo, b.bracket.hi}},
            {"root", b.root},
            {"residual", b.residual}};
}

BifurcationResult bifurcation_from_json(const Json& j) {
    try {
        BifurcationResult b;
        b.parameter = j.at("parameter").get<std::string>();
        b.bracket = {j.at("bracket").at(0).get<double>(), j.at("bracket").at(1).get<double>()};
        b.root = j.at("root").get<double>();
        b.residual = j.at("residual").get<double>();
        return b;
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed root report: ") + e.what());
    }
}

Json to_json(const OracleComparison& c) {
    Json j;
    j["model"] = c.task.model.label();
    j["R"] = c.task.R;
    j["d"] = c.task.d;
    j["case"] = std::string(case_name(c.task.oc));
    j["analytic"] = real_or_null(c.analytic);
    j["oracle"] = real_or_null(c.oracle.value);
    j["difference"] = real_or_null(std::abs(c.oracle.value - c.analytic));
    j["est_error"] = c.oracle.est_error;
    j["condition"] = c.oracle.condition;
    j["agrees"] = c.ok;
    if (!c.error.empty())
        j["error"] = c.error;
    return j;
}

Json envelope(const std::string& kind, Json body) {
    return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"report", std::move(body)}};
}

}  // namespace mtwsphere
