// funcid: exact functional-identity toolkit for division rings.
//
// Subcommands:
//   eval    evaluate the additive map f_{A,B} on GF(2)(t) at a point
//   verify  run the property suite for f_{A,B} on random samples
//   solve   compute all additive pairs (f, g) with x^{-n} f(x) + g(x^{-1}) = 0
//           on a finite algebra, as an exact nullspace
//   sweep   tabulate solution-space dimensions over (p, k, n)
//   hua     sample-check Hua's identity over rationals or quaternions
//
// Exit codes: 0 success, 1 property failure, 2 usage error, 3 resource limit.

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "funcid/errors.hpp"
#include "funcid/expr.hpp"
#include "funcid/matrix.hpp"
#include "funcid/sampling.hpp"
#include "funcid/solver.hpp"
#include "funcid/vbmap.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kSchemaVersion = 1;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}

    std::int64_t elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit_report(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw funcid::UsageError("cannot open output file: " + out_path);
    out << report.dump(2) << "\n";
}

struct AlgebraFlag {
    std::string field;   // "p" or "p^k"
    std::string matrix;  // "m,p" or "m,p^k"

    funcid::AlgebraSpec parse() const {
        funcid::AlgebraSpec spec;
        std::string pk = field;
        if (!matrix.empty()) {
            const auto comma = matrix.find(',');
            if (comma == std::string::npos) {
                throw funcid::UsageError("--matrix expects \"m,p\" or \"m,p^k\"");
            }
            spec.m = std::stoi(matrix.substr(0, comma));
            pk = matrix.substr(comma + 1);
        }
        const auto caret = pk.find('^');
        try {
            if (caret == std::string::npos) {
                spec.p = std::stoull(pk);
                spec.k = 1;
            } else {
                spec.p = std::stoull(pk.substr(0, caret));
                spec.k = std::stoi(pk.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw funcid::UsageError("cannot parse algebra spec \"" + pk + "\"");
        }
        return spec;
    }

    std::string describe() const {
        if (!matrix.empty()) return "M" + matrix;
        return "GF(" + field + ")";
    }
};

int run_eval(const std::string& a_text, const std::string& b_text, const std::string& x_text) {
    const funcid::VbParams params{funcid::parse_rat(a_text), funcid::parse_rat(b_text)};
    const funcid::Gf2Rat x = funcid::parse_rat(x_text);
    std::cout << funcid::render_expr(funcid::eval_f(params, x)) << "\n";
    return kExitOk;
}

struct VerifyOptions {
    std::string a_text, b_text;
    int samples = 200;
    int max_deg = 8;
    std::uint64_t seed = 0;
    bool corrupt_f = false;
};

int run_verify(const VerifyOptions& opt) {
    const funcid::VbParams params{funcid::parse_rat(opt.a_text), funcid::parse_rat(opt.b_text)};
    // Test hook: a deliberately wrong map (A replaced by A+1) used on one
    // branch of the identity check, so the suite must fail.
    const funcid::VbParams corrupted{params.A + funcid::Gf2Rat::one(), params.B};
    const funcid::VbParams& left_branch = opt.corrupt_f ? corrupted : params;

    funcid::Sampler rng(opt.seed);
    int failures = 0;
    const auto report_check = [&](const std::string& name, int passed, int total,
                                  const std::string& counterexample) {
        const bool ok = passed == total;
        std::cout << name << ": " << passed << "/" << total << (ok ? " PASS" : " FAIL") << "\n";
        if (!ok) {
            ++failures;
            std::cout << "  first counterexample: " << counterexample << "\n";
        }
    };

    {
        int passed = 0;
        std::string counterexample;
        for (int i = 0; i < opt.samples; ++i) {
            const auto x = rng.rat(opt.max_deg);
            const auto y = rng.rat(opt.max_deg);
            if (funcid::eval_f(params, x + y) ==
                funcid::eval_f(params, x) + funcid::eval_f(params, y)) {
                ++passed;
            } else if (counterexample.empty()) {
                counterexample =
                    "x = " + funcid::render_expr(x) + ", y = " + funcid::render_expr(y);
            }
        }
        report_check("additivity", passed, opt.samples, counterexample);
    }
    {
        int passed = 0;
        std::string counterexample;
        for (int i = 0; i < opt.samples; ++i) {
            const auto x = rng.nonzero_rat(opt.max_deg);
            const auto residual = x.inv() * funcid::eval_f(left_branch, x) +
                                  funcid::eval_f(params, x.inv());
            if (residual.is_zero()) {
                ++passed;
            } else if (counterexample.empty()) {
                counterexample = "x = " + funcid::render_expr(x) +
                                 ", residual = " + funcid::render_expr(residual);
            }
        }
        report_check("identity-residual", passed, opt.samples, counterexample);
    }
    {
        int passed = 0;
        std::string counterexample;
        for (int i = 0; i < opt.samples; ++i) {
            const auto x = rng.rat(opt.max_deg);
            if (funcid::eval_f_oracle(params, x) == funcid::eval_f(params, x)) {
                ++passed;
            } else if (counterexample.empty()) {
                counterexample = "x = " + funcid::render_expr(x);
            }
        }
        report_check("oracle-equivalence", passed, opt.samples, counterexample);
    }
    {
        int passed = 0;
        std::string counterexample;
        for (int i = 0; i < opt.samples; ++i) {
            const auto x = rng.rat(opt.max_deg);
            const auto common = rng.nonzero_poly(4);
            if (funcid::eval_f_on(params, x.num() * common, x.den() * common) ==
                funcid::eval_f(params, x)) {
                ++passed;
            } else if (counterexample.empty()) {
                counterexample = "x = " + funcid::render_expr(x) +
                                 ", common factor = " + common.to_string();
            }
        }
        report_check("well-definedness", passed, opt.samples, counterexample);
    }
    return failures == 0 ? kExitOk : kExitPropertyFailure;
}

struct SolveOptions {
    AlgebraFlag algebra;
    int exponent = 1;
    std::string family = "pair";
    std::uint64_t unit_cap = 100000;
    std::string out_path;
};

funcid::Family parse_family(const std::string& name) {
    if (name == "pair") return funcid::Family::pair;
    if (name == "single") return funcid::Family::single;
    throw funcid::UsageError("--family must be pair or single");
}

json basis_to_json(const funcid::SolutionSpace& space) {
    json basis = json::array();
    for (const auto& [f, g] : space.basis) {
        basis.push_back(json{{"f", f.a}, {"g", g.a}});
    }
    return basis;
}

int run_solve(const SolveOptions& opt) {
    const Timer timer;
    funcid::SolverInstance instance;
    instance.algebra = opt.algebra.parse();
    instance.exponent = opt.exponent;
    instance.family = parse_family(opt.family);
    instance.unit_cap = opt.unit_cap;

    const auto space = funcid::solve(instance);
    const bool flagged = instance.algebra.m == 1 &&
                         funcid::example_regime(instance.algebra.p, instance.exponent);

    json report{
        {"schema_version", kSchemaVersion},
        {"command", "solve"},
        {"params",
         {{"algebra", opt.algebra.describe()},
          {"m", instance.algebra.m},
          {"p", instance.algebra.p},
          {"k", instance.algebra.k},
          {"n", instance.exponent},
          {"family", opt.family},
          {"unit_cap", instance.unit_cap},
          {"map_dimension", space.d}}},
        {"dimension", space.dimension},
        {"basis", basis_to_json(space)},
        {"flagged_example_regime", flagged},
        {"failures", json::array()},
        {"seed", 0},
        {"elapsed_ms", timer.elapsed_ms()},
    };
    std::cerr << opt.algebra.describe() << ", n = " << instance.exponent << ", family "
              << opt.family << ": dimension " << space.dimension << " over GF("
              << instance.algebra.p << ")\n";
    emit_report(report, opt.out_path);
    return kExitOk;
}

struct SweepOptions {
    std::uint64_t p_max = 5;
    int k_max = 1;
    int n_max = 6;
    std::string family = "pair";
    std::uint64_t unit_cap = 100000;
    std::string out_path;
};

int run_sweep(const SweepOptions& opt) {
    const Timer timer;
    const auto rows =
        funcid::dimension_sweep(opt.p_max, opt.k_max, opt.n_max, parse_family(opt.family),
                                opt.unit_cap);
    json rows_json = json::array();
    for (const auto& row : rows) {
        json cell{{"p", row.p}, {"k", row.k}, {"n", row.n}, {"flagged", row.flagged}};
        if (row.dimension) {
            cell["dimension"] = *row.dimension;
        } else {
            cell["error"] = row.error;
        }
        rows_json.push_back(std::move(cell));
        std::cerr << "p=" << row.p << " k=" << row.k << " n=" << row.n << " -> "
                  << (row.dimension ? std::to_string(*row.dimension) : "error")
                  << (row.flagged ? "  [p-1 | n-2]" : "") << "\n";
    }
    json report{
        {"schema_version", kSchemaVersion},
        {"command", "sweep"},
        {"params",
         {{"p_max", opt.p_max},
          {"k_max", opt.k_max},
          {"n_max", opt.n_max},
          {"family", opt.family},
          {"unit_cap", opt.unit_cap}}},
        {"rows", std::move(rows_json)},
        {"failures", json::array()},
        {"seed", 0},
        {"elapsed_ms", timer.elapsed_ms()},
    };
    emit_report(report, opt.out_path);
    return kExitOk;
}

struct HuaOptions {
    std::string ring = "rational";
    int dim = 1;
    int samples = 100;
    std::uint64_t seed = 0;
    int box = 9;
    std::string out_path;
};

int run_hua(const HuaOptions& opt) {
    const Timer timer;
    const funcid::Ring ring = [&] {
        if (opt.ring == "rational") return funcid::Ring::rationals();
        if (opt.ring == "quaternion") return funcid::Ring::quaternions();
        throw funcid::UsageError("--ring must be rational or quaternion");
    }();
    funcid::Sampler rng(opt.seed);
    int checked = 0;
    json failures = json::array();
    while (checked < opt.samples) {
        const auto a = rng.matrix(ring, opt.dim, opt.box);
        const auto b = rng.matrix(ring, opt.dim, opt.box);
        const auto result = funcid::hua_check(a, b);
        if (!result.ok()) continue;  // precondition not met; resample
        if (!result.residual->is_zero()) {
            std::cout << "hua: FAIL after " << checked << " residuals\n"
                      << "  a = " << a.to_string() << "\n  b = " << b.to_string() << "\n"
                      << "  residual = " << result.residual->to_string() << "\n";
            failures.push_back(json{{"a", a.to_string()},
                                    {"b", b.to_string()},
                                    {"residual", result.residual->to_string()}});
            break;
        }
        ++checked;
    }
    if (!opt.out_path.empty()) {
        const json report{
            {"schema_version", kSchemaVersion},
            {"command", "hua"},
            {"params",
             {{"ring", opt.ring}, {"dim", opt.dim}, {"samples", opt.samples}, {"box", opt.box}}},
            {"residuals_checked", checked},
            {"failures", failures},
            {"seed", opt.seed},
            {"elapsed_ms", timer.elapsed_ms()},
        };
        emit_report(report, opt.out_path);
    }
    if (!failures.empty()) return kExitPropertyFailure;
    std::cout << "hua: " << checked << "/" << opt.samples << " residuals zero PASS\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"funcid: exact functional identities on division rings"};
    app.require_subcommand(1);

    std::string a_text, b_text, x_text;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate f_{A,B} at a point of GF(2)(t)");
    eval_cmd->add_option("--A", a_text, "value of f(1)")->required();
    eval_cmd->add_option("--B", b_text, "value of f(t)")->required();
    eval_cmd->add_option("--x", x_text, "evaluation point")->required();

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "property suite for f_{A,B}");
    verify_cmd->add_option("--A", verify_opt.a_text, "value of f(1)")->required();
    verify_cmd->add_option("--B", verify_opt.b_text, "value of f(t)")->required();
    verify_cmd->add_option("--samples", verify_opt.samples, "samples per property");
    verify_cmd->add_option("--max-deg", verify_opt.max_deg, "degree bound for samples");
    verify_cmd->add_option("--seed", verify_opt.seed, "RNG seed");
    verify_cmd->add_flag("--corrupt-f", verify_opt.corrupt_f)->group("");

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "exact solution space on a finite algebra");
    auto* field_opt = solve_cmd->add_option("--field", solve_opt.algebra.field, "GF(p) or GF(p^k)");
    solve_cmd->add_option("--matrix", solve_opt.algebra.matrix, "m,p or m,p^k for M_m(GF(p^k))")
        ->excludes(field_opt);
    solve_cmd->add_option("--n", solve_opt.exponent, "exponent n")->required();
    solve_cmd->add_option("--family", solve_opt.family, "pair | single");
    solve_cmd->add_option("--unit-cap", solve_opt.unit_cap, "max units to enumerate");
    solve_cmd->add_option("--out", solve_opt.out_path, "report file (default: stdout)");

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "dimension table over (p, k, n)");
    sweep_cmd->add_option("--p-max", sweep_opt.p_max, "largest prime");
    sweep_cmd->add_option("--k-max", sweep_opt.k_max, "largest extension degree");
    sweep_cmd->add_option("--n-max", sweep_opt.n_max, "largest exponent");
    sweep_cmd->add_option("--family", sweep_opt.family, "pair | single");
    sweep_cmd->add_option("--unit-cap", sweep_opt.unit_cap, "max units per cell");
    sweep_cmd->add_option("--out", sweep_opt.out_path, "report file (default: stdout)");

    HuaOptions hua_opt;
    auto* hua_cmd = app.add_subcommand("hua", "sample Hua's identity residuals");
    hua_cmd->add_option("--ring", hua_opt.ring, "rational | quaternion");
    hua_cmd->add_option("--dim", hua_opt.dim, "matrix dimension m");
    hua_cmd->add_option("--samples", hua_opt.samples, "pairs to check");
    hua_cmd->add_option("--seed", hua_opt.seed, "RNG seed");
    hua_cmd->add_option("--box", hua_opt.box, "integer box for entries");
    hua_cmd->add_option("--out", hua_opt.out_path, "optional report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(eval_cmd)) return run_eval(a_text, b_text, x_text);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_opt);
        if (app.got_subcommand(solve_cmd)) {
            if (solve_opt.algebra.field.empty() && solve_opt.algebra.matrix.empty()) {
                throw funcid::UsageError("solve needs --field or --matrix");
            }
            return run_solve(solve_opt);
        }
        if (app.got_subcommand(sweep_cmd)) return run_sweep(sweep_opt);
        if (app.got_subcommand(hua_cmd)) return run_hua(hua_opt);
    } catch (const funcid::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const funcid::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const funcid::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const funcid::DivisionByZero& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const funcid::UnsupportedOperation& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUsage;
    } catch (const funcid::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
