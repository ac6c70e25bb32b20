// Command-line surface over the library: entropy tables, continuity-bound
// certificates, proof-chain traces, tightness searches, and the mass-transfer
// property suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arce/bound.hpp"
#include "arce/cq.hpp"
#include "arce/entropy.hpp"
#include "arce/errors.hpp"
#include "arce/json_io.hpp"
#include "arce/majorization.hpp"
#include "arce/pipeline.hpp"
#include "arce/prob.hpp"
#include "arce/tightness.hpp"

namespace {

using Json = nlohmann::ordered_json;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Numbers in JSON reports are rounded to the same 12 significant digits the
// text formats print.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw arce::ParseError("cannot read input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw arce::ParseError("cannot write output file: " + path);
    out << text;
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

arce::JointDistribution load_joint(const std::string& text) {
    return looks_like_json(text) ? arce::joint_from_json(text) : arce::joint_from_csv(text);
}

arce::ProbVector marginal_x(const arce::JointDistribution& p) {
    std::vector<double> sums(p.nx(), 0.0);
    for (std::size_t x = 0; x < p.nx(); ++x)
        for (std::size_t y = 0; y < p.ny(); ++y) sums[x] += p(x, y);
    return arce::ProbVector(std::move(sums));
}

arce::DensityMatrix average_state(const arce::CQState& state) {
    arce::CMatrix acc(state.d_a());
    for (std::size_t y = 0; y < state.ny(); ++y) {
        const arce::CMatrix& block = state.blocks()[y].matrix();
        const double w = state.weights()[y];
        for (std::size_t i = 0; i < acc.dim(); ++i)
            for (std::size_t j = 0; j < acc.dim(); ++j) acc(i, j) += w * block(i, j);
    }
    return arce::DensityMatrix(std::move(acc));
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct EntropyRow {
    double alpha;
    double h;            // unconditional Shannon / von Neumann
    double h_alpha;      // unconditional Renyi of the marginal / average state
    double h_cond;       // conditional Shannon / c-q conditional entropy
    double h_alpha_cond; // ARCE / c-q conditional Renyi entropy
};

std::string render_rows(const std::vector<EntropyRow>& rows, bool quantum,
                        const std::string& format) {
    const char* names[] = {quantum ? "h_a" : "h_x", quantum ? "h_alpha_a" : "h_alpha_x",
                           quantum ? "h_a_given_y" : "h_x_given_y",
                           quantum ? "h_alpha_a_given_y" : "h_alpha_x_given_y"};
    if (format == "json") {
        Json arr = Json::array();
        for (const EntropyRow& r : rows) {
            Json row;
            row["alpha"] = round12(r.alpha);
            row[names[0]] = round12(r.h);
            row[names[1]] = round12(r.h_alpha);
            row[names[2]] = round12(r.h_cond);
            row[names[3]] = round12(r.h_alpha_cond);
            arr.push_back(std::move(row));
        }
        return arr.dump(2) + "\n";
    }
    std::string out;
    if (format == "csv") {
        out = std::string("alpha,") + names[0] + ',' + names[1] + ',' + names[2] + ',' + names[3] +
              '\n';
        for (const EntropyRow& r : rows)
            out += fmt12(r.alpha) + ',' + fmt12(r.h) + ',' + fmt12(r.h_alpha) + ',' +
                   fmt12(r.h_cond) + ',' + fmt12(r.h_alpha_cond) + '\n';
        return out;
    }
    // plain table
    char line[256];
    std::snprintf(line, sizeof(line), "%-10s %-18s %-18s %-18s %-18s\n", "alpha", names[0],
                  names[1], names[2], names[3]);
    out = line;
    for (const EntropyRow& r : rows) {
        std::snprintf(line, sizeof(line), "%-10s %-18s %-18s %-18s %-18s\n",
                      fmt12(r.alpha).c_str(), fmt12(r.h).c_str(), fmt12(r.h_alpha).c_str(),
                      fmt12(r.h_cond).c_str(), fmt12(r.h_alpha_cond).c_str());
        out += line;
    }
    return out;
}

int run_compute(const std::string& in_path, const std::vector<double>& alphas,
                const std::string& out_path, const std::string& format) {
    const std::string text = read_file(in_path);
    const arce::InputKind kind = arce::sniff_input(text);

    std::vector<EntropyRow> rows;
    if (kind == arce::InputKind::Joint) {
        const arce::JointDistribution joint = load_joint(text);
        const arce::ProbVector mx = marginal_x(joint);
        const double h = arce::shannon_entropy(mx);
        const double hc = arce::cond_shannon(joint);
        for (double a : alphas) {
            const arce::AlphaOrder order(a);
            rows.push_back(
                {a, h, arce::renyi_entropy(mx, order), hc, arce::arce(joint, order)});
        }
    } else {
        const arce::CQState state = arce::cq_from_json(text);
        const arce::DensityMatrix avg = average_state(state);
        const arce::Spectrum spec = arce::hermitian_eig(avg.matrix());
        const arce::ProbVector spectrum(spec.eigenvalues);
        const double h = arce::von_neumann_entropy(avg);
        const double hc = arce::cond_entropy_cq(state);
        for (double a : alphas) {
            const arce::AlphaOrder order(a);
            rows.push_back({a, h, arce::renyi_entropy(spectrum, order), hc,
                            arce::cond_renyi_cq(state, order)});
        }
    }
    write_output(out_path, render_rows(rows, kind == arce::InputKind::CQ, format));
    return 0;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

std::string render_certs(const std::vector<arce::BoundCertificate>& certs,
                         const std::string& format) {
    if (format == "json") {
        Json arr = Json::array();
        for (const arce::BoundCertificate& c : certs)
            arr.push_back(Json::parse(arce::certificate_to_json(c)));
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        std::string out = "alpha,eps_budget,dimension,tv_actual,lhs,rhs,slack,holds\n";
        for (const arce::BoundCertificate& c : certs) {
            out += fmt12(c.alpha) + ',' + fmt12(c.eps_budget) + ',' +
                   std::to_string(c.dimension) + ',' + fmt12(c.tv_actual) + ',' + fmt12(c.lhs) +
                   ',' + fmt12(c.rhs) + ',' + fmt12(c.slack) + ',' + (c.holds ? "true" : "false") +
                   '\n';
        }
        return out;
    }
    std::string out;
    for (const arce::BoundCertificate& c : certs) {
        out += "alpha=" + fmt12(c.alpha) + " tv=" + fmt12(c.tv_actual) + " lhs=" + fmt12(c.lhs) +
               " rhs=" + fmt12(c.rhs) + " slack=" + fmt12(c.slack) +
               (c.holds ? " holds" : " VIOLATED") + '\n';
    }
    return out;
}

int run_certify(const std::string& in_path, const std::string& in2_path,
                const std::vector<double>& alphas, double eps, const std::string& out_path,
                const std::string& format) {
    const std::string text1 = read_file(in_path);
    const std::string text2 = read_file(in2_path);
    const arce::InputKind kind1 = arce::sniff_input(text1);
    const arce::InputKind kind2 = arce::sniff_input(text2);
    if (kind1 != kind2)
        throw arce::ParseError("certify needs two inputs of the same kind "
                               "(both classical joints or both c-q states)");

    std::vector<arce::BoundCertificate> certs;
    if (kind1 == arce::InputKind::Joint) {
        const arce::JointDistribution p = load_joint(text1);
        const arce::JointDistribution q = load_joint(text2);
        for (double a : alphas) certs.push_back(arce::check_continuity_bound(p, q, a, eps));
    } else {
        const arce::CQState rho = arce::cq_from_json(text1);
        const arce::CQState sigma = arce::cq_from_json(text2);
        for (double a : alphas) certs.push_back(arce::check_cq_bound(rho, sigma, a, eps));
    }
    write_output(out_path, render_certs(certs, format));
    const bool all_hold =
        std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.holds; });
    return all_hold ? 0 : 1;
}

// ---------------------------------------------------------------------------
// pipeline
// ---------------------------------------------------------------------------

int run_pipeline(const std::string& in_path, const std::string& in2_path, double alpha,
                 const std::string& out_path, const std::string& format) {
    const std::string text1 = read_file(in_path);
    const std::string text2 = read_file(in2_path);
    if (arce::sniff_input(text1) != arce::InputKind::Joint ||
        arce::sniff_input(text2) != arce::InputKind::Joint)
        throw arce::ParseError("pipeline runs on classical joints only");
    const arce::JointDistribution p = load_joint(text1);
    const arce::JointDistribution q = load_joint(text2);

    const arce::PipelineTrace trace = arce::verify_proof_chain(p, q, alpha);
    if (format == "csv") {
        // (step, delta_h, tv) series for plotting
        std::string out = "step,label,delta_h,tv\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            out += std::to_string(i) + ',' + trace.steps[i].label + ',' +
                   fmt12(trace.steps[i].delta_h) + ',' + fmt12(trace.steps[i].tv) + '\n';
        }
        out += std::to_string(trace.steps.size()) + ",G," + fmt12(trace.final_bound) + ",\n";
        write_output(out_path, out);
    } else {
        write_output(out_path, arce::trace_to_json(trace));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tightness
// ---------------------------------------------------------------------------

int run_tightness(std::size_t nx, std::size_t ny, double alpha, double eps, std::uint64_t budget,
                  std::uint64_t seed, bool cold, const std::string& out_path) {
    const arce::SearchResult result =
        arce::search_sup_ratio(nx, ny, alpha, eps, budget, seed, !cold);
    write_output(out_path, arce::search_result_to_json(result));
    return 0;
}

// ---------------------------------------------------------------------------
// lemmas: the mass-transfer property suites
// ---------------------------------------------------------------------------

struct SuiteOutcome {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
};

std::vector<double> random_masses(arce::Rng& rng, std::size_t n, double total) {
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = rng.expo();
        sum += x;
    }
    for (double& x : v) x = x / sum * total;
    return v;
}

SuiteOutcome suite_transfer(std::uint64_t trials, std::uint64_t seed) {
    arce::Rng rng(seed);
    SuiteOutcome out{"transfer-to-top", 0, trials};
    for (std::uint64_t k = 0; k < trials; ++k) {
        const std::size_t n = 2 + rng.index(7);
        std::vector<double> v = random_masses(rng, n, 1.0);
        std::sort(v.begin(), v.end(), std::greater<>());
        const std::size_t i = 1 + rng.index(n - 1);
        const double s = v[i] * (1.0 - 0.5 * rng.uniform());
        const std::vector<double> moved = arce::transfer_to_top(v, i, s);
        if (arce::majorizes(v, moved).holds) ++out.passed;
    }
    return out;
}

SuiteOutcome suite_spill(std::uint64_t trials, std::uint64_t seed) {
    arce::Rng rng(seed);
    SuiteOutcome out{"zero-slot-spill", 0, trials};
    for (std::uint64_t k = 0; k < trials; ++k) {
        const std::size_t n = 3 + rng.index(6);
        std::vector<double> v = random_masses(rng, n, 1.0);
        const std::size_t j = rng.index(n);
        v[j] = 0.0;
        std::size_t i = rng.index(n);
        while (i == j) i = rng.index(n);
        const double s = v[i] * (1.0 - 0.5 * rng.uniform());
        const std::vector<double> spilled = arce::spill_to_zero_slot(v, i, j, s);
        if (arce::majorizes(spilled, v).holds) ++out.passed;
    }
    return out;
}

SuiteOutcome suite_padding(std::uint64_t trials, std::uint64_t seed) {
    arce::Rng rng(seed);
    SuiteOutcome out{"orthogonal-padding", 0, trials};
    for (std::uint64_t k = 0; k < trials; ++k) {
        const std::size_t live = 2 + rng.index(4);
        const std::size_t pad = 1 + rng.index(3);
        const std::size_t n = live + pad;
        const double mu = 0.1 + 0.8 * rng.uniform();

        std::vector<double> v(n, 0.0);
        const std::vector<double> head = random_masses(rng, live, 1.0 - mu);
        std::copy(head.begin(), head.end(), v.begin());

        // doubly stochastic smoothing keeps v2 majorized by v
        const double lambda = rng.uniform();
        const double mean = (1.0 - mu) / static_cast<double>(live);
        std::vector<double> v2(n, 0.0);
        for (std::size_t idx = 0; idx < live; ++idx)
            v2[idx] = (1.0 - lambda) * v[idx] + lambda * mean;

        std::vector<double> perp(n, 0.0);
        const std::vector<double> tail = random_masses(rng, pad, mu);
        std::copy(tail.begin(), tail.end(), perp.begin() + static_cast<std::ptrdiff_t>(live));

        if (arce::check_orthogonal_padding(v, v2, perp)) ++out.passed;
    }
    return out;
}

SuiteOutcome suite_f_decreasing() {
    SuiteOutcome out{"f-step-decreasing", 0, 0};
    for (int ai = 1; ai <= 9; ++ai) {
        const double a = 0.1 * ai;
        for (std::size_t d = 2; d <= 6; ++d) {
            for (const double tt : {0.1, 1.0 - 1.0 / static_cast<double>(d)}) {
                ++out.total;
                const double u0 = 1.0 - tt;
                const double u1 = u0 + 3.0;
                bool ok = true;
                double prev = arce::f_step_e(u0, a, d, tt);
                for (int k = 1; k < 100; ++k) {
                    const double u = u0 + (u1 - u0) * k / 99.0;
                    const double cur = arce::f_step_e(u, a, d, tt);
                    if (cur > prev + 1e-12) ok = false;
                    prev = cur;
                }
                if (ok) ++out.passed;
            }
        }
    }
    return out;
}

SuiteOutcome suite_g_increasing() {
    SuiteOutcome out{"g-step-increasing", 0, 0};
    for (int ai = 1; ai <= 9; ++ai) {
        const double a = 0.1 * ai;
        for (std::size_t d = 2; d <= 6; ++d) {
            ++out.total;
            const double cap = 1.0 - 1.0 / static_cast<double>(d);
            bool ok = true;
            double prev = arce::g_mono(cap * (1.0 / 100.0), a, d);
            for (int k = 2; k <= 100; ++k) {
                // cap * (k/100) stays <= cap; cap*k/100 can round past it
                const double cur = arce::g_mono(cap * (k / 100.0), a, d);
                if (cur < prev - 1e-12) ok = false;
                prev = cur;
            }
            if (ok) ++out.passed;
        }
    }
    return out;
}

int run_lemmas(std::uint64_t trials, std::uint64_t seed) {
    const SuiteOutcome outcomes[] = {suite_transfer(trials, seed), suite_spill(trials, seed + 1),
                                     suite_padding(trials, seed + 2), suite_f_decreasing(),
                                     suite_g_increasing()};
    bool all = true;
    for (const SuiteOutcome& s : outcomes) {
        std::cout << s.name << ": " << s.passed << "/" << s.total
                  << (s.passed == s.total ? " ok" : " FAILED") << "\n";
        all = all && s.passed == s.total;
    }
    std::cout << (all ? "all suites passed" : "suite failures detected") << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arimoto-Renyi conditional entropy toolkit"};
    app.require_subcommand(1);

    std::string in_path, in2_path, out_path;
    std::string format = "table";
    std::vector<double> alphas;
    double alpha_single = 0.5;
    double eps = 0.0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10000;
    std::uint64_t trials = 10000;
    std::size_t nx = 2, ny = 1;
    bool cold = false;

    CLI::App* compute = app.add_subcommand("compute", "Entropy table over an alpha grid");
    compute->add_option("--in", in_path, "Input joint (JSON/CSV) or c-q state (JSON)")
        ->required();
    compute->add_option("--alpha", alphas, "Alpha grid point (repeatable; default 0.5)");
    compute->add_option("--out", out_path, "Output path (default stdout)");
    compute->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* certify = app.add_subcommand("certify", "Continuity-bound certificates for a pair");
    certify->add_option("--in", in_path, "First input")->required();
    certify->add_option("--in2", in2_path, "Second input (same kind)")->required();
    certify->add_option("--alpha", alphas, "Alpha grid point (repeatable; default 0.5)");
    certify->add_option("--eps", eps, "Total-variation budget")->required();
    certify->add_option("--out", out_path, "Output path (default stdout)");
    certify->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* pipeline = app.add_subcommand("pipeline", "Proof-chain trace for a classical pair");
    pipeline->add_option("--in", in_path, "First joint (TV-larger entropy side chosen inside)")
        ->required();
    pipeline->add_option("--in2", in2_path, "Second joint")->required();
    pipeline->add_option("--alpha", alpha_single, "Order alpha in (0,1)")->required();
    pipeline->add_option("--out", out_path, "Output path (default stdout)");
    pipeline->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* tightness = app.add_subcommand("tightness", "Hill-climb the saturation ratio");
    tightness->add_option("--nx", nx, "Rows (main alphabet size, >= 2)")->required();
    tightness->add_option("--ny", ny, "Columns (side alphabet size, >= 1)")->required();
    tightness->add_option("--alpha", alpha_single, "Order alpha in [0,1)")->required();
    tightness->add_option("--eps", eps, "Total-variation budget in (0, 1-1/nx]")->required();
    tightness->add_option("--budget", budget, "Proposal budget (default 10000)");
    tightness->add_option("--seed", seed, "Deterministic seed (default 1)");
    tightness->add_flag("--cold", cold, "Skip the saturating-pair seed");
    tightness->add_option("--out", out_path, "Output path (default stdout)");

    CLI::App* lemmas = app.add_subcommand("lemmas", "Run the mass-transfer property suites");
    lemmas->add_option("--trials", trials, "Random trials per suite (default 10000)");
    lemmas->add_option("--seed", seed, "Deterministic seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // flag errors share the parse exit status
    }

    if (alphas.empty()) alphas.push_back(0.5);
    if (pipeline->parsed() && format == "table") format = "json";

    try {
        if (compute->parsed()) return run_compute(in_path, alphas, out_path, format);
        if (certify->parsed())
            return run_certify(in_path, in2_path, alphas, eps, out_path, format);
        if (pipeline->parsed())
            return run_pipeline(in_path, in2_path, alpha_single, out_path, format);
        if (tightness->parsed())
            return run_tightness(nx, ny, alpha_single, eps, budget, seed, cold, out_path);
        if (lemmas->parsed()) return run_lemmas(trials, seed);
    } catch (const arce::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const arce::TvBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const arce::TraceBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const arce::ChainViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const arce::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
