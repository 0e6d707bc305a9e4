#pragma once

// JSON wire formats. Every numeric value travels as an exact "p/q" string in
// lowest terms; no decimal floats anywhere. Serialization uses ordered JSON
// with a fixed field order so identical inputs give byte-identical files.

#include "ampli/combinatorics.hpp"
#include "ampli/crossing.hpp"
#include "ampli/matrix.hpp"
#include "ampli/membership.hpp"
#include "ampli/positivity.hpp"
#include "ampli/twistor.hpp"
#include "ampli/winding.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ampli {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(i, c)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline Matrix matrix_from_json(const Json& j) {
    try {
        const int rows = j.at("rows").get<int>();
        const int cols = j.at("cols").get<int>();
        const Json& entries = j.at("entries");
        if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
            throw ParseError("entry row count mismatch");
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            const Json& row = entries.at(i);
            if (!row.is_array() || static_cast<int>(row.size()) != cols)
                throw ParseError("entry column count mismatch");
            for (int c = 0; c < cols; ++c)
                m(i, c) = parse_rational(row.at(c).get<std::string>());
        }
        return m;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
}

inline Json index_list_to_json(const IndexList& list) {
    Json j = Json::array();
    for (int i : list) j.push_back(i);
    return j;
}

/// Context schema: {"n","k","m","Z",...} with exactly one of "C" (Y is then
/// C*Z) or "Y" present.
inline Json context_to_json(const TwistorContext& ctx) {
    Json j;
    j["n"] = ctx.n();
    j["k"] = ctx.k();
    j["m"] = ctx.m();
    j["Z"] = matrix_to_json(ctx.z.matrix);
    if (ctx.c)
        j["C"] = matrix_to_json(ctx.c->matrix);
    else
        j["Y"] = matrix_to_json(ctx.y.matrix);
    return j;
}

inline TwistorContext context_from_json(const Json& j) {
    int n, k, m;
    Json zj;
    try {
        n = j.at("n").get<int>();
        k = j.at("k").get<int>();
        m = j.at("m").get<int>();
        zj = j.at("Z");
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad context JSON: ") + e.what());
    }
    const bool has_c = j.contains("C");
    const bool has_y = j.contains("Y");
    if (has_c == has_y) throw ParseError("context needs exactly one of C or Y");
    try {
        PositiveZ z = make_positive_z(n, k, m, matrix_from_json(zj));  // certifies
        if (has_c) {
            GrassmannC c = certify_c(matrix_from_json(j.at("C")), k, n);
            return make_context(std::move(z), std::move(c));
        }
        Matrix ym = matrix_from_json(j.at("Y"));
        return make_context(std::move(z), make_y_point(k, m, std::move(ym)));
    } catch (const ContractError& e) {
        // Shape mismatches in otherwise well-formed JSON count as bad input.
        throw ParseError(std::string("bad context: ") + e.what());
    }
}

inline Json ray_to_json(const RayDirection& ray) {
    Json j;
    j["mode"] = ray.mode == RayDirection::Mode::MuInfinitesimal ? "mu" : "random";
    Json coeffs = Json::array();
    for (const Rational& c : ray.coefficients) coeffs.push_back(rational_to_string(c));
    j["coefficients"] = std::move(coeffs);
    return j;
}

inline Json winding_to_json(const WindingResult& w) {
    Json j;
    j["magnitude"] = w.magnitude;
    j["signed_sum"] = w.signed_sum;
    Json hits = Json::array();
    for (const WindingHit& h : w.hits) {
        Json hj;
        hj["window"] = index_list_to_json(h.window);
        hj["orientation"] = h.orientation;
        hits.push_back(std::move(hj));
    }
    j["hits"] = std::move(hits);
    j["ray"] = ray_to_json(w.ray_used);
    return j;
}

inline Json crossing_to_json(const CrossingResult& c) {
    Json j;
    j["count"] = c.count;
    Json cells = Json::array();
    for (const IndexList& cell : c.cells_hit) cells.push_back(index_list_to_json(cell));
    j["cells"] = std::move(cells);
    Json simplices = Json::array();
    for (const IndexList& s : c.simplices_hit) simplices.push_back(index_list_to_json(s));
    j["simplices"] = std::move(simplices);
    j["degenerate"] = c.degenerate;
    return j;
}

inline Json membership_to_json(const MembershipVerdict& v) {
    Json j;
    j["verdict"] = verdict_name(v.verdict);
    j["winding_magnitude"] = v.winding_magnitude;
    j["coarse_ok"] = v.coarse_ok;
    j["flips_of_first_row"] = v.flips_of_first_row;
    return j;
}

inline Json coarse_report_to_json(const CoarseReport& r, bool strict) {
    Json j;
    j["wcb"] = r.wcb;
    j["satisfied"] = strict ? r.all_strict : r.all_nonstrict;
    Json entries = Json::array();
    for (const CoarseEntry& e : r.entries) {
        Json ej;
        ej["window"] = index_list_to_json(e.window);
        ej["value"] = rational_to_string(e.value);
        ej["sign"] = sign_of(e.value);
        ej["satisfied"] = strict ? e.ok_strict : e.ok_nonstrict;
        entries.push_back(std::move(ej));
    }
    j["windows"] = std::move(entries);
    return j;
}

inline Json report_to_json(const VerificationReport& report) {
    Json j;
    Json grid;
    grid["seeds"] = report.grid.seeds;
    grid["identities"] = report.grid.identities;
    Json cells = Json::array();
    for (const GridCell& c : report.grid.cells) {
        Json cj;
        cj["n"] = c.n;
        cj["k"] = c.k;
        cj["m"] = c.m;
        cells.push_back(std::move(cj));
    }
    grid["cells"] = std::move(cells);
    j["grid"] = std::move(grid);
    Json cases = Json::array();
    for (const CaseReport& c : report.cases) {
        Json cj;
        cj["n"] = c.cell.n;
        cj["k"] = c.cell.k;
        cj["m"] = c.cell.m;
        cj["seed"] = c.seed;
        cj["quantity"] = c.quantity;
        cj["computed"] = c.computed;
        cj["formula"] = c.formula;
        cj["theorem_ok"] = c.theorem_ok;
        cj["padding_ok"] = c.padding_ok;
        cj["cross_method_ok"] = c.cross_method_ok;
        cj["sign_flips_ok"] = c.sign_flips_ok;
        cj["coarse_strict_ok"] = c.coarse_strict_ok;
        cj["identities_ran"] = c.identities_ran;
        cj["identities_ok"] = c.identities_ok;
        cj["pass"] = c.pass;
        if (!c.pass) cj["failure"] = c.failure;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["all_pass"] = report.all_pass;
    if (report.failing_context) j["failing_context"] = context_to_json(report.failing_context->ctx);
    return j;
}

/// CSV rows for the twistor subcommand: window, exact value, sign.
inline std::string coarse_report_to_csv(const CoarseReport& r) {
    std::ostringstream os;
    os << "window,value,sign\n";
    for (const CoarseEntry& e : r.entries) {
        os << '"';
        for (size_t i = 0; i < e.window.size(); ++i) {
            if (i) os << ' ';
            os << e.window[i];
        }
        os << "\"," << rational_to_string(e.value) << ',' << sign_of(e.value) << '\n';
    }
    return os.str();
}

/// Writes atomically: temp file in the same directory, then rename.
inline void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << contents;
        if (!out.good()) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

}  // namespace ampli
