// Command line surface. Subcommands: sample, twistor, winding, crossing,
// membership, verify, render. All numeric output is exact "p/q"; a fixed seed
// fully determines every random draw.
//
// Exit codes: 0 ok, 1 failure (including a failed verify), 2 malformed input,
// 3 positivity certification failure, 4 undefined winding (coarse boundary).

#include "ampli/ampli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace ampli;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file_atomic(out_path, text);
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

TwistorContext load_context(const std::string& path, bool allow_large = false) {
    Json j = read_json_file(path);
    if (j.contains("n") && j["n"].is_number_integer() && j["n"].get<int>() > 14 && !allow_large)
        throw ContractError("n > 14 makes exhaustive certification expensive; "
                            "pass --allow-large to proceed");
    return context_from_json(j);
}

GridSpec parse_grid(const std::string& text, int seeds) {
    if (text == "default") return default_grid(seeds);
    if (text == "quick") {
        GridSpec grid = default_grid(seeds);
        grid.identities = false;
        return grid;
    }
    // Custom cells: "n,k,m;n,k,m;..."
    GridSpec grid;
    grid.seeds = seeds;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(';', pos);
        if (next == std::string::npos) next = text.size();
        const std::string cell = text.substr(pos, next - pos);
        GridCell c;
        if (std::sscanf(cell.c_str(), "%d,%d,%d", &c.n, &c.k, &c.m) != 3)
            throw ContractError("bad grid cell '" + cell + "' (want n,k,m)");
        grid.cells.push_back(c);
        pos = next + 1;
    }
    if (grid.cells.empty()) throw ContractError("empty grid");
    return grid;
}

int run(int argc, char** argv) {
    CLI::App app{"exact twistor / winding / crossing toolkit"};
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "emit a certified context JSON");
    int s_n = 5, s_k = 2, s_m = 2;
    std::uint64_t s_seed = 0;
    std::string s_out;
    bool s_allow_large = false;
    sample->add_option("--n", s_n, "number of Z rows");
    sample->add_option("--k", s_k, "Grassmannian k");
    sample->add_option("--m", s_m, "amplituhedron m");
    sample->add_option("--seed", s_seed, "seed for all draws");
    sample->add_option("--out,-o", s_out, "output path (default stdout)");
    sample->add_flag("--allow-large", s_allow_large,
                     "lift the n <= 14 certification-cost guard");

    // twistor
    auto* twist = app.add_subcommand("twistor", "coarse-window twistor values as CSV");
    std::string t_ctx, t_out;
    bool t_strict = false, t_large = false;
    twist->add_option("context", t_ctx, "context JSON path")->required();
    twist->add_option("--out,-o", t_out, "output path (default stdout)");
    twist->add_flag("--strict", t_strict,
                    "exit 1 unless every coarse inequality holds strictly");
    twist->add_flag("--allow-large", t_large, "lift the n <= 14 guard");

    // winding
    auto* wind = app.add_subcommand("winding", "winding number (even m)");
    std::string w_ctx, w_out, w_mode = "random";
    std::uint64_t w_seed = 0;
    wind->add_option("context", w_ctx, "context JSON path")->required();
    wind->add_option("--mode", w_mode, "ray mode: random | mu")
        ->check(CLI::IsMember({"random", "mu"}));
    wind->add_option("--seed", w_seed, "ray seed (random mode)");
    wind->add_option("--out,-o", w_out, "output path (default stdout)");

    // crossing
    auto* cross = app.add_subcommand("crossing", "crossing number (odd m)");
    std::string c_ctx, c_out;
    cross->add_option("context", c_ctx, "context JSON path")->required();
    cross->add_option("--out,-o", c_out, "output path (default stdout)");

    // membership
    auto* member = app.add_subcommand("membership", "m=2 membership verdict");
    std::string m_ctx, m_out;
    std::uint64_t m_seed = 0;
    member->add_option("context", m_ctx, "context JSON path")->required();
    member->add_option("--seed", m_seed, "ray seed");
    member->add_option("--out,-o", m_out, "output path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "reproduce the constancy theorems over a grid");
    std::string v_grid = "default", v_out;
    int v_seeds = 25;
    verify->add_option("--grid", v_grid, "default | quick | 'n,k,m;n,k,m;...'");
    verify->add_option("--seeds", v_seeds, "seeds per cell");
    verify->add_option("--out,-o", v_out, "report path (default stdout)");

    // render
    auto* render = app.add_subcommand("render", "SVG figure of an m=2 context");
    std::string r_ctx, r_out;
    render->add_option("context", r_ctx, "context JSON path")->required();
    render->add_option("--out,-o", r_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (sample->parsed()) {
        if (s_n > 14 && !s_allow_large)
            throw ContractError("n > 14 makes exhaustive certification expensive; "
                                "pass --allow-large to proceed");
        SampledContext sampled = sample_context(s_n, s_k, s_m, s_seed);
        emit_json(context_to_json(sampled.ctx), s_out);
        return 0;
    }
    if (twist->parsed()) {
        TwistorContext ctx = load_context(t_ctx, t_large);
        const CoarseReport report = coarse_boundary_report(ctx);
        emit(coarse_report_to_csv(report), t_out);
        if (t_strict && !report.all_strict) {
            std::cerr << "coarse boundary conditions are not all strict\n";
            return 1;
        }
        return 0;
    }
    if (wind->parsed()) {
        TwistorContext ctx = load_context(w_ctx);
        const WindingResult result =
            (w_mode == "mu") ? mu_ray_winding(ctx) : winding_number(ctx, w_seed);
        emit_json(winding_to_json(result), w_out);
        return 0;
    }
    if (cross->parsed()) {
        TwistorContext ctx = load_context(c_ctx);
        emit_json(crossing_to_json(crossing_number(ctx)), c_out);
        return 0;
    }
    if (member->parsed()) {
        TwistorContext ctx = load_context(m_ctx);
        if (ctx.m() == 2) {
            emit_json(membership_to_json(membership_m2(ctx, m_seed)), m_out);
        } else {
            // Only the m=2 criterion is proven; report invariants, no verdict.
            Json j;
            j["verdict"] = verdict_name(Verdict::Unproven);
            const CoarseReport coarse = coarse_boundary_report(ctx);
            j["coarse"] = coarse_report_to_json(coarse, true);
            if (ctx.m() % 2 == 1)
                j["crossing"] = crossing_to_json(crossing_number(ctx));
            else if (coarse.wcb)
                j["winding"] = winding_to_json(winding_number(ctx, m_seed));
            emit_json(j, m_out);
        }
        return 0;
    }
    if (verify->parsed()) {
        const GridSpec grid = parse_grid(v_grid, v_seeds);
        const VerificationReport report = verify_theorems(grid);
        emit_json(report_to_json(report), v_out);
        std::cerr << "verify: " << report.passed << " passed, " << report.failed << " failed\n";
        return report.all_pass ? 0 : 1;
    }
    if (render->parsed()) {
        TwistorContext ctx = load_context(r_ctx);
        emit(render_svg_m2(ctx), r_out);
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PositivityError& e) {
        std::cerr << "positivity error: " << e.what() << "\n";
        return 3;
    } catch (const WindingUndefinedError& e) {
        std::cerr << "winding undefined: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
