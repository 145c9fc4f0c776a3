/*
 * Copyright 2026 ginibre-interp developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// `ginibre` command line: exact real-eigenvalue count tables, density and
// kernel grids, scaling-limit profiles, Monte Carlo sampling, and the
// cross-validation suite.  Exit codes: 0 success, 1 validation failure,
// 2 domain error, 3 precision error, 4 numeric error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginibre/asymptotics.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/exactprob.hpp"
#include "ginibre/kernels.hpp"
#include "ginibre/sampler.hpp"
#include "validate.hpp"

namespace {

using nlohmann::json;
using namespace ginibre;
using cplx = std::complex<double>;

constexpr const char* kVersion = "0.1.0";

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Inclusive grid "min:max:step"; a single point via min = max.
struct GridSpec {
    double lo = 0.0, hi = 0.0, step = 1.0;

    static GridSpec parse(const std::string& text) {
        GridSpec g;
        char tail = '\0';
        if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.lo, &g.hi, &g.step, &tail) != 3)
            throw DomainError("grid: expected min:max:step, got '" + text + "'");
        if (!(g.lo <= g.hi)) throw DomainError("grid: min must not exceed max");
        if (g.lo < g.hi && !(g.step > 0.0)) throw DomainError("grid: step must be positive");
        return g;
    }

    std::vector<double> points() const {
        std::vector<double> out;
        if (lo == hi) {
            out.push_back(lo);
            return out;
        }
        const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
        if (count > 1000000) throw DomainError("grid: more than 1e6 points requested");
        for (int i = 0; i < count; ++i) out.push_back(lo + i * step);
        return out;
    }
};

// Collects metadata and rows once, then renders as CSV (header comments,
// `# key = value` lines, column row, data) or as the JSON mirror of the same
// fields.  No timestamps: outputs are reproducible byte-for-byte.
class Table {
public:
    Table(std::string command, std::vector<std::string> columns)
        : command_(std::move(command)), columns_(std::move(columns)) {}

    void meta(const std::string& key, const json& value) { meta_.emplace_back(key, value); }
    void row(std::vector<json> cells) { rows_.push_back(std::move(cells)); }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            json config = json::object();
            for (const auto& [k, v] : meta_) config[k] = v;
            json rows = json::array();
            for (const auto& r : rows_) rows.push_back(r);
            json doc = {{"version", kVersion},
                        {"command", command_},
                        {"config", config},
                        {"columns", columns_},
                        {"rows", rows}};
            os << doc.dump(2) << "\n";
            return;
        }
        os << "# ginibre-interp v" << kVersion << "\n";
        os << "# command = " << command_ << "\n";
        for (const auto& [k, v] : meta_)
            os << "# " << k << " = "
               << (v.is_string() ? v.get<std::string>()
                                 : v.is_number_float() ? format_number(v.get<double>()) : v.dump())
               << "\n";
        for (size_t i = 0; i < columns_.size(); ++i)
            os << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
        for (const auto& r : rows_) {
            for (size_t i = 0; i < r.size(); ++i) {
                const json& c = r[i];
                os << (c.is_string() ? c.get<std::string>()
                                     : c.is_number_float() ? format_number(c.get<double>())
                                                           : c.dump())
                   << (i + 1 < r.size() ? "," : "\n");
            }
        }
    }

private:
    std::string command_;
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, json>> meta_;
    std::vector<std::vector<json>> rows_;
};

void emit(const Table& table, const std::string& out_path, const std::string& format) {
    if (out_path.empty()) {
        table.write(std::cout, format);
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw DomainError("cannot open output file '" + out_path + "'");
    table.write(os, format);
}

Precision parse_precision(const std::string& text) {
    if (text == "double") return Precision::kDouble;
    if (text == "high") return Precision::kHigh;
    throw DomainError("precision: expected 'double' or 'high'");
}

// Shared flag bundle; each subcommand registers the subset it uses.
struct Options {
    int n = 2;
    double tau = 0.0;
    double alpha = 1.0;
    double b = 1.0;
    std::string grid;
    std::int64_t draws = 10000;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string precision = "double";
    std::string format = "csv";
    std::string out;
    std::string kind = "sr";
    double y = 0.0;
    double z_re = 0.0, z_im = 0.5;
    int finite_n = 0;
    bool raw = false;
    std::string suite = "all";
    bool inject_fault = false;
};

int cmd_pkn(const Options& opt) {
    const Precision precision = parse_precision(opt.precision);
    const PknTable table = pkn_table(opt.n, opt.tau, precision);
    Table out("pkn", {"k", "p", "cumulative"});
    out.meta("n", opt.n);
    out.meta("tau", opt.tau);
    out.meta("precision", opt.precision);
    out.meta("sum_residual", table.sum_residual);
    double cumulative = 0.0;
    for (size_t i = 0; i < table.p.size(); ++i) {
        cumulative += table.p[i];
        out.row({2 * static_cast<int>(i), table.p[i], cumulative});
    }
    emit(out, opt.out, opt.format);
    return 0;
}

int cmd_density(const Options& opt) {
    const Precision precision = parse_precision(opt.precision);
    const std::vector<double> xs = GridSpec::parse(opt.grid).points();
    KernelContext ctx(opt.n, opt.tau);
    Table out("density", {"x", "rho_real"});
    out.meta("n", opt.n);
    out.meta("tau", opt.tau);
    out.meta("precision", opt.precision);
    if (precision == Precision::kHigh) {
        for (double x : xs) out.row({x, s_r_high(ctx, x, x)});
    } else {
        const std::vector<double> rho = rho_r1_profile(ctx, xs);
        for (size_t i = 0; i < xs.size(); ++i) out.row({xs[i], rho[i]});
    }
    emit(out, opt.out, opt.format);
    return 0;
}

int cmd_edge(const Options& opt) {
    const std::vector<double> offsets = GridSpec::parse(opt.grid).points();
    const bool with_finite = opt.finite_n > 0;
    Table out("edge", with_finite ? std::vector<std::string>{"X", "limit", "finite_n"}
                                  : std::vector<std::string>{"X", "limit"});
    out.meta("tau", opt.tau);
    std::optional<KernelContext> ctx;
    std::optional<EdgeFrame> frame;
    if (with_finite) {
        ctx.emplace(opt.finite_n, opt.tau);
        frame = EdgeFrame{opt.finite_n, opt.tau};
        frame->check();
        out.meta("finite_n", opt.finite_n);
        out.meta("edge_location", frame->edge());
    }
    for (double offset : offsets) {
        const double limit = edge_real_density(offset, opt.tau);
        if (with_finite) {
            const double g = frame->global_coordinate(offset);
            out.row({offset, limit, s_r(*ctx, g, g)});
        } else {
            out.row({offset, limit});
        }
    }
    emit(out, opt.out, opt.format);
    return 0;
}

int cmd_kernel(const Options& opt) {
    const Precision precision = parse_precision(opt.precision);
    const std::vector<double> xs = GridSpec::parse(opt.grid).points();
    KernelContext ctx(opt.n, opt.tau);
    if (opt.kind == "sr") {
        Table out("kernel", {"x", "s_r"});
        out.meta("n", opt.n);
        out.meta("tau", opt.tau);
        out.meta("kind", "sr");
        out.meta("y", opt.y);
        out.meta("precision", opt.precision);
        for (double x : xs)
            out.row({x, precision == Precision::kHigh ? s_r_high(ctx, x, opt.y)
                                                      : s_r(ctx, x, opt.y)});
        emit(out, opt.out, opt.format);
        return 0;
    }
    if (opt.kind == "sc") {
        Table out("kernel", {"x", "re_s_c_hat", "im_s_c_hat"});
        out.meta("n", opt.n);
        out.meta("tau", opt.tau);
        out.meta("kind", "sc");
        out.meta("y", opt.y);
        out.meta("z_re", opt.z_re);
        out.meta("z_im", opt.z_im);
        const cplx z(opt.z_re, opt.z_im);
        for (double x : xs) {
            const cplx v = s_c_hat(ctx, cplx(x, opt.y), z);
            out.row({x, v.real(), v.imag()});
        }
        emit(out, opt.out, opt.format);
        return 0;
    }
    throw DomainError("kernel: --kind must be 'sr' or 'sc'");
}

int cmd_weak(const Options& opt) {
    const std::vector<double> ds = GridSpec::parse(opt.grid).points();
    const bool with_finite = opt.finite_n > 0;
    const bool complex_kernel = opt.kind == "sc";
    if (!complex_kernel && opt.kind != "sr") throw DomainError("weak: --kind must be 'sr' or 'sc'");
    Table out("weak", with_finite ? std::vector<std::string>{"d", "limit", "finite_n"}
                                  : std::vector<std::string>{"d", "limit"});
    out.meta("alpha", opt.alpha);
    out.meta("kind", opt.kind);
    if (with_finite) {
        out.meta("finite_n", opt.finite_n);
        out.meta("finite_tau", 1.0 - opt.alpha * opt.alpha / opt.finite_n);
    }
    for (double d : ds) {
        // The limits depend on the separation only; evaluate symmetrically.
        const double x = 0.5 * d, y = -0.5 * d;
        const double limit = complex_kernel ? weak_sc(cplx(x, 0.0), cplx(y, 0.0), opt.alpha).real()
                                            : weak_sr(x, y, opt.alpha);
        if (with_finite) {
            const double finite = complex_kernel ? weak_sc_finite(opt.finite_n, opt.alpha, x, y)
                                                 : weak_sr_finite(opt.finite_n, opt.alpha, x, y);
            out.row({d, limit, finite});
        } else {
            out.row({d, limit});
        }
    }
    emit(out, opt.out, opt.format);
    return 0;
}

int cmd_sample(const Options& opt) {
    EnsembleParams params;
    params.n = opt.n;
    params.tau = opt.tau;
    params.b = opt.b;
    params.seed = opt.seed;
    params.draws = opt.draws;
    params.check();
    if (params.draws < 1) throw DomainError("sample: draws must be >= 1");

    if (opt.raw) {
        Table out("sample", {"draw_index", "kind", "x", "y"});
        out.meta("n", opt.n);
        out.meta("tau", opt.tau);
        out.meta("b", opt.b);
        out.meta("seed", static_cast<std::int64_t>(opt.seed));
        out.meta("draws", opt.draws);
        for (std::int64_t d = 0; d < params.draws; ++d) {
            SpectrumSample sample;
            try {
                sample = eigen_spectrum(sample_matrix(params, static_cast<std::uint64_t>(d)));
            } catch (const NumericError& e) {
                throw NumericError(std::string(e.what()) + " (seed " + std::to_string(opt.seed) +
                                   ", draw " + std::to_string(d) + ")");
            }
            for (double x : sample.real) out.row({d, "real", x, 0.0});
            for (cplx z : sample.complex_upper) out.row({d, "complex", z.real(), z.imag()});
        }
        emit(out, opt.out, opt.format);
        return 0;
    }

    EmpiricalStats stats;
    try {
        stats = detail::accumulate(params, nullptr, opt.threads);
    } catch (const NumericError& e) {
        throw NumericError(std::string(e.what()) + " (seed " + std::to_string(opt.seed) + ")");
    }

    // Exact reference columns whenever the exact pipeline covers this size.
    std::optional<PknTable> exact;
    if (params.n <= pkn_max_n(Precision::kDouble)) exact = pkn_table(params.n, params.tau);

    std::vector<std::string> columns{"k", "parity", "count", "p_hat", "std_error"};
    if (exact) {
        columns.push_back("p_exact");
        columns.push_back("z_score");
        columns.push_back("within_3se");
    }
    Table out("sample", columns);
    out.meta("n", opt.n);
    out.meta("tau", opt.tau);
    out.meta("b", opt.b);
    out.meta("seed", static_cast<std::int64_t>(opt.seed));
    out.meta("draws", opt.draws);
    out.meta("mean_real_count", stats.mean_real_count);
    out.meta("mean_real_count_std_error", stats.mean_real_count_std_error);
    bool all_within = true;
    for (size_t i = 0; i < stats.real_counts.size(); ++i) {
        const CountStat& cs = stats.real_counts[i];
        std::vector<json> cells{cs.k, cs.k % 2 == 0 ? "even" : "odd", cs.count, cs.p_hat,
                                cs.std_error};
        if (exact) {
            const double p = exact->p[i];
            const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(params.draws));
            const double z = (cs.p_hat - p) / se;
            cells.push_back(p);
            cells.push_back(z);
            cells.push_back(std::abs(z) <= 3.0 ? "yes" : "no");
            all_within = all_within && std::abs(z) <= 3.0;
        }
        out.row(std::move(cells));
    }
    if (exact) {
        out.meta("mean_real_count_exact", mean_real_count_exact(params.n, params.tau));
        out.meta("all_counts_within_3se", all_within ? "yes" : "no");
    }
    emit(out, opt.out, opt.format);
    return 0;
}

int cmd_validate(const Options& opt) {
    std::vector<tools::CheckResult> results = tools::run_validation(opt.suite);
    if (opt.inject_fault) {
        // Deliberately unpassable check (tolerance zero) for exercising the
        // failure path of downstream automation.
        results.push_back({"injected", "injected-fault", 0.0,
                           std::numeric_limits<double>::epsilon(), 0.0, false});
    }
    json doc = json::array();
    bool all_pass = true;
    for (const tools::CheckResult& r : results) {
        doc.push_back({{"suite", r.suite},
                       {"check", r.check},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
        all_pass = all_pass && r.pass;
    }
    if (opt.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream os(opt.out);
        if (!os) throw DomainError("cannot open output file '" + opt.out + "'");
        os << doc.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalue statistics of the partly symmetric real Ginibre ensemble"};
    app.require_subcommand(1);
    Options opt;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out, "Output file (default: stdout)");
    };
    auto add_precision = [&](CLI::App* cmd) {
        cmd->add_option("--precision", opt.precision, "Numeric backend")
            ->check(CLI::IsMember({"double", "high"}));
    };

    CLI::App* pkn = app.add_subcommand("pkn", "Exact probabilities of k real eigenvalues");
    pkn->add_option("--n", opt.n, "Matrix size (even)")->required();
    pkn->add_option("--tau", opt.tau, "Symmetry parameter in [0,1)");
    add_precision(pkn);
    add_output(pkn);

    CLI::App* density = app.add_subcommand("density", "Finite-N real-eigenvalue density");
    density->add_option("--n", opt.n, "Matrix size (even)")->required();
    density->add_option("--tau", opt.tau, "Symmetry parameter in [0,1)");
    density->add_option("--grid", opt.grid, "x grid min:max:step")->required();
    add_precision(density);
    add_output(density);

    CLI::App* edge = app.add_subcommand("edge", "Edge-scaled density profile");
    edge->add_option("--tau", opt.tau, "Symmetry parameter in [0,1)");
    edge->add_option("--grid", opt.grid, "Edge offset grid min:max:step")->required();
    edge->add_option("--finite-n", opt.finite_n,
                     "Also evaluate the finite-N kernel at this size (even)");
    add_output(edge);

    CLI::App* kernel = app.add_subcommand("kernel", "Finite-N correlation kernels");
    kernel->add_option("--n", opt.n, "Matrix size (even)")->required();
    kernel->add_option("--tau", opt.tau, "Symmetry parameter in [0,1)");
    kernel->add_option("--grid", opt.grid, "x grid min:max:step")->required();
    kernel->add_option("--kind", opt.kind, "Kernel: sr (real-real) or sc (complex-complex)")
        ->check(CLI::IsMember({"sr", "sc"}));
    kernel->add_option("--y", opt.y, "Second coordinate (sr) or Im of the moving point (sc)");
    kernel->add_option("--zre", opt.z_re, "Re of the fixed point (sc)");
    kernel->add_option("--zim", opt.z_im, "Im of the fixed point (sc, must be > 0)");
    add_precision(kernel);
    add_output(kernel);

    CLI::App* weak = app.add_subcommand("weak", "Weakly non-symmetric crossover kernels");
    weak->add_option("--alpha", opt.alpha, "Crossover parameter (> 0)")->required();
    weak->add_option("--grid", opt.grid, "Separation grid min:max:step")->required();
    weak->add_option("--kind", opt.kind, "Kernel: sr or sc")
        ->check(CLI::IsMember({"sr", "sc"}));
    weak->add_option("--finite-n", opt.finite_n,
                     "Also evaluate the scaled finite-N kernel at this size (even)");
    add_output(weak);

    CLI::App* sample = app.add_subcommand("sample", "Monte Carlo sampling of the ensemble");
    sample->add_option("--n", opt.n, "Matrix size (even)")->required();
    sample->add_option("--tau", opt.tau, "Symmetry parameter in [0,1)");
    sample->add_option("--b", opt.b, "Overall scale (spectrum statistics unaffected)");
    sample->add_option("--draws", opt.draws, "Number of matrix draws")->required();
    sample->add_option("--seed", opt.seed, "RNG seed");
    sample->add_option("--threads", opt.threads, "Worker threads (0 = logical cores)")
        ->envname("GINIBRE_THREADS");
    sample->add_flag("--raw", opt.raw, "Emit raw eigenvalues instead of the count table");
    add_output(sample);

    CLI::App* validate = app.add_subcommand("validate", "Cross-validation suite (JSON report)");
    validate->add_option("--suite", opt.suite,
                         "Restrict to one suite: pfaff, skewop, exactprob, sampler, kernels, "
                         "asymptotics");
    validate->add_flag("--inject-fault", opt.inject_fault,
                       "Append an unpassable check (exercise the failure path)");
    validate->add_option("--out", opt.out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pkn->parsed()) return cmd_pkn(opt);
        if (density->parsed()) return cmd_density(opt);
        if (edge->parsed()) return cmd_edge(opt);
        if (kernel->parsed()) return cmd_kernel(opt);
        if (weak->parsed()) return cmd_weak(opt);
        if (sample->parsed()) return cmd_sample(opt);
        if (validate->parsed()) return cmd_validate(opt);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const AccuracyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
