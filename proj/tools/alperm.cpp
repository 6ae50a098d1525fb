// Command-line front end: exact alpha-permanent evaluation, Monte-Carlo
// estimation, identity-check suites, counting tables, and the bundled
// benchmark reproduction.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "alperm/fixtures.hpp"
#include "alperm/immanants.hpp"
#include "alperm/io.hpp"
#include "alperm/random.hpp"
#include "alperm/sampler.hpp"
#include "alperm/special.hpp"

using namespace alperm;
using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt(Complex z) {
    if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z.real()))) return fmt(z.real());
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.10g%+.10gi", z.real(), z.imag());
    return buf;
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct RunResult {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<std::string> lines;  // human-readable form, deterministic
    double wall_ms = 0.0;

    void print(bool as_json) const {
        if (as_json) {
            json j;
            j["command"] = command;
            j["inputs"] = inputs;
            j["inputs_digest"] = fnv1a_hex(inputs.dump());
            j["outputs"] = outputs;
            j["wall_ms"] = wall_ms;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& line : lines) std::cout << line << "\n";
        }
    }
};

class Timer {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

MatrixFormat parse_format(const std::string& name) {
    if (name == "dense") return MatrixFormat::dense;
    if (name == "upper") return MatrixFormat::upper;
    throw std::invalid_argument("unknown matrix format: " + name);
}

Engine parse_engine(const std::string& name) {
    if (name == "definition") return Engine::definition;
    if (name == "cofactor") return Engine::cofactor;
    if (name == "det") return Engine::det_decomposition;
    throw std::invalid_argument("unknown engine: " + name);
}

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::definition: return "definition";
        case Engine::cofactor: return "cofactor";
        case Engine::det_decomposition: return "det";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// exact

int cmd_exact(const std::string& matrix_path, const std::string& format_name,
              const std::string& alpha_text, const std::string& engine_name_text, bool as_json) {
    Timer timer;
    const Matrix m = read_matrix_csv(matrix_path, parse_format(format_name));
    const Complex alpha = parse_complex(alpha_text);
    const Engine engine = parse_engine(engine_name_text);
    const AlphaPermanentResult r = per_alpha(m, alpha, engine);

    RunResult out;
    out.command = "exact";
    out.inputs = {{"matrix", matrix_path}, {"format", format_name}, {"alpha", alpha_text},
                  {"engine", engine_name_text}, {"n", m.n()}};
    out.outputs = {{"value_re", r.value.real()},
                   {"value_im", r.value.imag()},
                   {"engine", engine_name(r.method)},
                   {"terms", r.terms_evaluated}};
    out.lines = {"value: " + fmt(r.value), std::string("engine: ") + engine_name(r.method),
                 "terms: " + std::to_string(r.terms_evaluated)};
    out.wall_ms = timer.ms();
    out.print(as_json);
    return 0;
}

// ---------------------------------------------------------------------------
// estimate

int cmd_estimate(const std::string& matrix_path, const std::string& format_name,
                 const std::string& alpha_text, std::int64_t n_samples, std::uint64_t seed,
                 const std::string& proposal, bool have_params, double a, double theta,
                 bool as_json) {
    Timer timer;
    const Matrix m = read_matrix_csv(matrix_path, parse_format(format_name));
    const Complex alpha_z = parse_complex(alpha_text);
    if (alpha_z.imag() != 0.0)
        throw std::invalid_argument("estimate: alpha must be real for the samplers");
    const double alpha = alpha_z.real();

    EstimateReport r;
    std::string proposal_line;
    if (proposal == "permutations") {
        if (have_params)
            throw std::invalid_argument("estimate: --a/--theta apply to the partition proposal");
        r = is_estimate_permutations_uniform(m, alpha, n_samples, seed);
        proposal_line = "proposal: uniform permutations";
    } else if (proposal == "partitions") {
        PitmanEwensParams params;
        if (have_params) {
            params = PitmanEwensParams{a, theta};
        } else if (alpha < 0.0 && alpha == std::round(alpha)) {
            params = PitmanEwensParams::restricted(static_cast<int>(-alpha));
        } else {
            params = PitmanEwensParams::ewens(1.0);
        }
        params.validate();
        r = is_estimate_partitions(m, alpha, params, n_samples, seed);
        proposal_line = "proposal: a=" + fmt(params.a) + " theta=" + fmt(params.theta);
    } else {
        throw std::invalid_argument("estimate: unknown proposal: " + proposal);
    }
    const double rel = r.relative_std_error();

    RunResult out;
    out.command = "estimate";
    out.inputs = {{"matrix", matrix_path}, {"format", format_name}, {"alpha", alpha_text},
                  {"samples", n_samples}, {"seed", seed}, {"proposal", proposal},
                  {"a", r.params.a},      {"theta", r.params.theta}};
    out.outputs = {{"estimate", r.estimate},     {"stderr", r.std_error},
                   {"relative_stderr", rel},     {"samples", r.n_samples},
                   {"seed", r.seed},             {"a", r.params.a},
                   {"theta", r.params.theta},    {"high_variance", rel > 1.0}};
    out.lines = {"estimate: " + fmt(r.estimate),
                 "stderr: " + fmt(r.std_error),
                 "relative_stderr: " + fmt(100.0 * rel) + "%",
                 "samples: " + std::to_string(r.n_samples),
                 "seed: " + std::to_string(r.seed),
                 proposal_line,
                 "alpha: " + fmt(alpha)};
    if (rel > 1.0)
        out.lines.push_back("warning: high-variance regime (relative stderr > 100%)");
    out.wall_ms = timer.ms();
    out.print(as_json);
    return 0;
}

// ---------------------------------------------------------------------------
// check

struct SuiteOutcome {
    double max_rel_err = 0.0;
    double tolerance = 1e-8;
    long long checks = 0;
    std::string worst;

    void feed(Complex lhs, Complex rhs, const std::string& what) {
        const double err = relative_error(lhs, rhs);
        ++checks;
        if (err > max_rel_err) {
            max_rel_err = err;
            worst = what + " lhs=" + fmt(lhs) + " rhs=" + fmt(rhs);
        }
    }

    bool ok() const { return max_rel_err <= tolerance; }
};

int default_n(const std::string& suite) {
    if (suite == "thm2-product" || suite == "immanant" || suite == "mobius") return 4;
    if (suite == "eq8") return 6;
    if (suite == "special") return 6;
    return 5;
}

SuiteOutcome run_suite(const std::string& suite, int n, int trials, std::uint64_t seed) {
    SuiteOutcome out;
    SplitMix64 rng(seed);
    auto alpha = [&] { return Complex{3.0 * rng.u01() - 1.5, 3.0 * rng.u01() - 1.5}; };

    for (int t = 0; t < trials; ++t) {
        const std::string tag = "trial " + std::to_string(t) + " (n=" + std::to_string(n) + ")";
        if (suite == "thm1") {
            const Matrix m = random_complex_matrix(n, rng);
            const Complex a = alpha(), b = alpha();
            out.feed(rhs_decomposition(m, a, b), per_alpha_def(m, a * b), tag);
        } else if (suite == "thm2-sum") {
            const Matrix a = random_complex_matrix(n, rng), b = random_complex_matrix(n, rng);
            const Complex al = alpha();
            out.feed(rhs_sum_identity(a, b, al), per_alpha_def(a + b, al), tag);
        } else if (suite == "thm2-product") {
            const Matrix a = random_complex_matrix(n, rng), b = random_complex_matrix(n, rng);
            const Complex al = alpha();
            out.feed(rhs_product_identity(a, b, al), per_alpha_def(a * b, al), tag);
        } else if (suite == "eq3") {
            const Matrix m = random_complex_matrix(n, rng);
            out.feed(per_alpha_via_det(m, Complex(1.0)), per_alpha_def(m, Complex(1.0)), tag);
        } else if (suite == "eq8") {
            const Matrix m = random_complex_matrix(n, rng);
            const int k = 1 + t % 3;
            out.feed(per_alpha_via_det(m, Complex(static_cast<double>(-k))),
                     per_alpha_def(m, Complex(static_cast<double>(-k))), tag + " k=" + std::to_string(k));
        } else if (suite == "eq9") {
            const Matrix m = random_complex_matrix(n, rng);
            const Complex a{0.7 + rng.u01(), 0.8 * rng.u01()};
            Complex sum{0.0, 0.0};
            for_each_set_partition(n, [&](const SetPartition& pi) {
                sum += falling_factorial(-1.0 / a, pi.block_count()) * per_alpha_masked(m, pi, a);
            });
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            out.feed(sum, sign * det(m), tag);
        } else if (suite == "corollary") {
            const Matrix a = random_complex_matrix(n, rng);
            const Complex al = alpha();
            out.feed(per_alpha_plus_identity(a, al), per_alpha_def(a + Matrix::identity(n), al), tag);
        } else if (suite == "immanant") {
            out.tolerance = 1e-7;
            const Matrix m = random_complex_matrix(n, rng);
            const Complex al = alpha();
            out.feed(per_via_immanants(m, al), per_alpha_def(m, al), tag);
            Complex beta = alpha();
            while (std::abs(beta) < 0.2) beta = alpha();
            out.feed(per_immanant_decomposition_rhs(m, al, beta), per_alpha_def(m, al),
                     tag + " double expansion");
        } else if (suite == "mobius") {
            const Matrix m = random_complex_matrix(n, rng);
            const Complex beta = alpha();
            for_each_set_partition(n, [&](const SetPartition& pi) {
                const auto sides = mobius_identity_sides(m, beta, pi);
                out.feed(sides.lhs, sides.rhs, tag);
            });
        } else if (suite == "special") {
            out.tolerance = 1e-9;
            BlockSpec spec;
            spec.a11 = Complex{rng.u01() + 0.2, rng.u01()};
            spec.a12 = alpha();
            spec.a21 = alpha();
            spec.a22 = Complex{rng.u01() + 0.2, -rng.u01()};
            spec.n1 = 1 + static_cast<int>(rng.u01() * std::min(n - 1, 5));
            spec.n2 = std::max(1, std::min(n - spec.n1, 6));
            const Complex al = alpha();
            out.feed(per_alpha_block2(spec, al), per_alpha_def(block2_matrix(spec), al), tag);
            HomSymSpec hs{Complex{rng.u01() + 0.2, rng.u01()}, alpha(), std::min(n, 7)};
            out.feed(per_alpha_homsym(hs, al), per_alpha_def(homsym_matrix(hs), al),
                     tag + " homogeneous");
        } else {
            throw std::invalid_argument("unknown check suite: " + suite);
        }
    }
    return out;
}

int cmd_check(const std::string& suite, int n, int trials, std::uint64_t seed, bool as_json) {
    Timer timer;
    const SuiteOutcome r = run_suite(suite, n, trials, seed);

    RunResult out;
    out.command = "check";
    out.inputs = {{"suite", suite}, {"n", n}, {"trials", trials}, {"seed", seed}};
    out.outputs = {{"max_rel_err", r.max_rel_err},
                   {"tolerance", r.tolerance},
                   {"checks", r.checks},
                   {"pass", r.ok()}};
    char errbuf[32];
    std::snprintf(errbuf, sizeof(errbuf), "%.3e", r.max_rel_err);
    out.lines = {"suite: " + suite,
                 "checks: " + std::to_string(r.checks),
                 std::string("max_rel_err: ") + errbuf,
                 "tolerance: " + fmt(r.tolerance),
                 std::string("status: ") + (r.ok() ? "ok" : "FAIL")};
    if (!r.ok()) out.lines.push_back("worst: " + r.worst);
    out.wall_ms = timer.ms();
    out.print(as_json);
    return r.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const std::string& kind, int n, bool verify, bool as_json) {
    Timer timer;
    RunResult out;
    out.command = "tables";
    out.inputs = {{"kind", kind}, {"n", n}, {"verify", verify}};
    bool ok = true;

    if (kind == "rencontres") {
        if (n < 1 || n > 10) throw size_limit_error("tables rencontres: need 1 <= n <= 10");
        std::string header = "k\\l";
        for (int l = 0; l <= n; ++l) header += " " + std::to_string(l);
        out.lines.push_back("c(n,k,l) for n=" + std::to_string(n));
        out.lines.push_back(header);
        json cells = json::array();
        for (int k = 1; k <= n; ++k) {
            std::string line = std::to_string(k);
            json row = json::array();
            for (int l = 0; l <= n; ++l) {
                const BigUInt v = rencontres_c(n, k, l);
                line += " " + v.to_string();
                row.push_back(v.to_u64());
            }
            out.lines.push_back(line);
            cells.push_back(row);
        }
        out.outputs["cells"] = cells;
        if (verify) {
            const fixtures::RencontresTable* table = nullptr;
            for (const auto& t : fixtures::reference_rencontres_tables())
                if (t.n == n) table = &t;
            if (table == nullptr)
                throw std::invalid_argument("tables rencontres: reference tables cover n=2..10");
            for (int k = 1; k <= n && ok; ++k)
                for (int l = 0; l <= n && ok; ++l)
                    if (rencontres_c(n, k, l) != BigUInt(table->cells[k - 1][l])) {
                        ok = false;
                        out.lines.push_back(
                            "mismatch at (n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                            ",l=" + std::to_string(l) + "): computed " +
                            rencontres_c(n, k, l).to_string() + ", reference " +
                            std::to_string(table->cells[k - 1][l]));
                    }
            out.lines.push_back(ok ? "verify: ok" : "verify: FAIL");
            out.outputs["verify"] = ok;
        }
    } else if (kind == "stirling") {
        if (verify) throw std::invalid_argument("--verify-appendix applies to rencontres tables");
        std::string line = "s(" + std::to_string(n) + ",k):";
        json row = json::array();
        for (int k = 1; k <= n; ++k) {
            line += " " + stirling2(n, k).to_string();
            row.push_back(stirling2(n, k).to_string());
        }
        out.lines.push_back(line);
        out.outputs["row"] = row;
    } else if (kind == "bell") {
        if (verify) throw std::invalid_argument("--verify-appendix applies to rencontres tables");
        std::string line = "B(" + std::to_string(n) + ",<=k):";
        json row = json::array();
        for (int k = 1; k <= n; ++k) {
            line += " " + bell_upto(n, k).to_string();
            row.push_back(bell_upto(n, k).to_string());
        }
        out.lines.push_back(line);
        out.outputs["row"] = row;
    } else {
        throw std::invalid_argument("unknown table kind: " + kind);
    }

    out.wall_ms = timer.ms();
    out.print(as_json);
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// reproduce-table1

int cmd_reproduce_table1(std::int64_t n_samples, std::uint64_t seed, bool as_json) {
    Timer timer;
    const Matrix& x1 = fixtures::x1();

    RunResult out;
    out.command = "reproduce-table1";
    out.inputs = {{"samples", n_samples}, {"seed", seed}};
    out.lines.push_back("alpha    actual        estimate      stderr        rel_stderr");
    json rows = json::array();

    const double alphas[4] = {-2.0, -3.0, -2.5, 1.0};
    for (int i = 0; i < 4; ++i) {
        const double alpha = alphas[i];
        const double actual = per_alpha_def(x1, Complex(alpha)).real();
        const bool integer_case = alpha < 0.0 && alpha == std::round(alpha);
        const PitmanEwensParams params = integer_case
                                             ? PitmanEwensParams::restricted(static_cast<int>(-alpha))
                                             : PitmanEwensParams::ewens(1.0);
        const EstimateReport r =
            is_estimate_partitions(x1, alpha, params, n_samples, seed + static_cast<std::uint64_t>(i));
        char line[160];
        std::snprintf(line, sizeof(line), "%-8g %-13.6g %-13.6g %-13.6g %.4g%%", alpha, actual,
                      r.estimate, r.std_error, 100.0 * r.relative_std_error());
        out.lines.push_back(line);
        rows.push_back({{"alpha", alpha},
                        {"actual", actual},
                        {"estimate", r.estimate},
                        {"stderr", r.std_error},
                        {"relative_stderr", r.relative_std_error()},
                        {"a", params.a},
                        {"theta", params.theta}});
    }
    out.outputs["rows"] = rows;
    out.wall_ms = timer.ms();
    out.print(as_json);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alperm: exact and Monte-Carlo alpha-permanent computation"};
    app.require_subcommand(1);
    bool as_json = false;

    auto* exact = app.add_subcommand("exact", "evaluate the alpha-permanent of a matrix file");
    exact->add_flag("--json", as_json, "emit a machine-readable run record (sorted keys)");
    std::string matrix_path, format_name = "dense", alpha_text = "1", engine = "definition";
    exact->add_option("--matrix", matrix_path, "CSV matrix file")->required();
    exact->add_option("--format", format_name, "dense | upper");
    exact->add_option("--alpha", alpha_text, "scalar, 're' or 're,im'");
    exact->add_option("--engine", engine, "definition | cofactor | det");

    auto* estimate = app.add_subcommand("estimate", "importance-sampling estimate over partitions");
    estimate->add_flag("--json", as_json, "emit a machine-readable run record (sorted keys)");
    std::string e_matrix, e_format = "dense", e_alpha = "1";
    std::int64_t e_samples = 100000;
    std::uint64_t e_seed = 1;
    double e_a = 0.0, e_theta = 1.0;
    estimate->add_option("--matrix", e_matrix, "CSV matrix file")->required();
    estimate->add_option("--format", e_format, "dense | upper");
    estimate->add_option("--alpha", e_alpha, "real scalar");
    estimate->add_option("--samples,-N", e_samples, "number of samples");
    estimate->add_option("--seed", e_seed, "RNG seed");
    std::string e_proposal = "partitions";
    estimate->add_option("--proposal", e_proposal,
                         "partitions (importance sampling over set partitions) | permutations "
                         "(uniform baseline)");
    auto* opt_a = estimate->add_option("--a", e_a, "proposal discount");
    auto* opt_theta = estimate->add_option("--theta", e_theta, "proposal strength");
    opt_a->needs(opt_theta);
    opt_theta->needs(opt_a);

    auto* check = app.add_subcommand("check", "run an identity-check suite");
    check->add_flag("--json", as_json, "emit a machine-readable run record (sorted keys)");
    std::string suite;
    int c_n = 0, c_trials = 50;
    std::uint64_t c_seed = 1;
    check
        ->add_option("suite", suite,
                     "thm1 | thm2-sum | thm2-product | eq3 | eq8 | eq9 | corollary | immanant | "
                     "mobius | special")
        ->required();
    check->add_option("--n", c_n, "matrix dimension (suite default if omitted)");
    check->add_option("--trials", c_trials, "number of random instances");
    check->add_option("--seed", c_seed, "RNG seed");

    auto* tables = app.add_subcommand("tables", "print counting tables");
    tables->add_flag("--json", as_json, "emit a machine-readable run record (sorted keys)");
    std::string kind;
    int t_n = 5;
    bool verify = false;
    tables->add_option("kind", kind, "rencontres | stirling | bell")->required();
    tables->add_option("--n", t_n, "table size");
    tables->add_flag("--verify-appendix", verify, "compare against the embedded reference tables");

    auto* repro = app.add_subcommand("reproduce-table1",
                                     "exact vs estimated values on the bundled benchmark matrix");
    repro->add_flag("--json", as_json, "emit a machine-readable run record (sorted keys)");
    std::int64_t r_samples = 100000;
    std::uint64_t r_seed = 1;
    repro->add_option("--samples,-N", r_samples, "number of samples per row");
    repro->add_option("--seed", r_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(exact))
            return cmd_exact(matrix_path, format_name, alpha_text, engine, as_json);
        if (app.got_subcommand(estimate))
            return cmd_estimate(e_matrix, e_format, e_alpha, e_samples, e_seed, e_proposal,
                                opt_a->count() > 0, e_a, e_theta, as_json);
        if (app.got_subcommand(check)) {
            if (c_n == 0) c_n = default_n(suite);
            return cmd_check(suite, c_n, c_trials, c_seed, as_json);
        }
        if (app.got_subcommand(tables)) return cmd_tables(kind, t_n, verify, as_json);
        if (app.got_subcommand(repro)) return cmd_reproduce_table1(r_samples, r_seed, as_json);
    } catch (const size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
