/**
 * @file maxvec_main.cpp
 * @brief Command-line interface: maxima, reference points, mechanism runs,
 *        truthfulness verification, counterexample replays, instance
 *        generation, and micro-benchmarks.
 */

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "maxvec/errors.hpp"
#include "maxvec/io.hpp"
#include "maxvec/mechanism.hpp"
#include "maxvec/pareto.hpp"
#include "maxvec/reference_points.hpp"
#include "maxvec/truthfulness.hpp"

namespace {

using namespace maxvec;

PaymentPolicy make_policy(const std::string& name, std::size_t index) {
    if (name == "lex-min") return PaymentPolicy::lex_min();
    if (name == "lex-max") return PaymentPolicy::lex_max();
    return PaymentPolicy::indexed(index);
}

MechanismKind make_kind(const std::string& name) {
    return name == "m-prime" ? MechanismKind::WeakMaxima : MechanismKind::StrictMaxima;
}

void print_rows(const VectorSet& rows) {
    for (const Vec& v : rows) std::cout << format_row(v) << "\n";
}

double time_best_ms(int reps, const std::function<void()>& fn) {
    double best = -1.0;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (best < 0 || ms < best) best = ms;
    }
    return best;
}

std::string replay_line(const DeviationReport& report) {
    return "agent=" + std::to_string(report.agent + 1) +
           " truthful-utility=" + format_tuple(report.truthful_utility) +
           " deviation-bid=" + format_tuple(report.deviation_bid) +
           " deviation-utility=" + format_tuple(report.deviation_utility) +
           " verdict=" + to_string(report.verdict);
}

int cmd_maxima(const std::string& path, const std::string& method, bool weak) {
    const Instance instance = load_instance(path, /*require_strictly_positive=*/false);
    if (weak) {
        print_rows(wmax_set(instance.bids));
    } else {
        print_rows(method == "naive" ? max_set(instance.bids) : max_set_fast(instance.bids));
    }
    return 0;
}

int cmd_refpoints(const std::string& path, const std::string& method, std::size_t budget) {
    const Instance instance = load_instance(path, /*require_strictly_positive=*/true);
    ReferencePointSet result;
    if (method == "staircase") {
        result = reference_points_2d(instance.bids);
    } else if (method == "vmax-oracle") {
        result = reference_points_vmax_oracle(instance.bids, budget);
    } else {
        result = reference_points(instance.bids, budget);
    }
    print_rows(result.points);
    return 0;
}

int cmd_mech(const std::string& path, const std::string& kind, const std::string& policy,
             std::size_t policy_index, const std::string& format) {
    const Instance instance = load_instance(path, /*require_strictly_positive=*/true);
    const MechanismOutcome outcome =
        run_mechanism(instance, make_kind(kind), make_policy(policy, policy_index));
    if (format == "machine") {
        std::cout << render_outcome_machine(outcome, instance.valuations.has_value());
    } else {
        std::cout << render_outcome_text(outcome);
    }
    return 0;
}

int cmd_verify(const std::string& path, const std::string& kind, const std::string& policy,
               std::size_t policy_index, std::size_t max_deviations, std::uint64_t seed,
               const std::string& format) {
    const Instance instance = load_instance(path, /*require_strictly_positive=*/true);
    DeviationGridConfig grid_config;
    grid_config.max_deviations = max_deviations;
    grid_config.seed = seed;
    const VectorSet grid = deviation_grid(instance, grid_config);
    const std::vector<DeviationReport> reports = verify_equilibria_truthfulness(
        instance, make_kind(kind), make_policy(policy, policy_index), grid);

    std::size_t weakly_better = 0, incomparable_count = 0, violations = 0;
    for (const DeviationReport& report : reports) {
        switch (report.verdict) {
            case UtilityComparison::TruthWeaklyBetter: ++weakly_better; break;
            case UtilityComparison::MutuallyIncomparable: ++incomparable_count; break;
            case UtilityComparison::DeviationBetter:
                ++violations;
                std::cout << "violation: " << replay_line(report) << "\n";
                break;
        }
    }
    if (format == "machine") {
        std::cout << "checked=" << reports.size() << " truth-weakly-better=" << weakly_better
                  << " incomparable=" << incomparable_count << " violations=" << violations
                  << "\n";
    } else {
        std::cout << "agents=" << instance.bids.size()
                  << " deviations-per-agent=" << grid.size() << " mechanism=" << kind
                  << " policy=" << policy << "\n";
        std::cout << "checked=" << reports.size() << " violations=" << violations << "\n";
    }
    return violations == 0 ? 0 : 1;
}

int cmd_replay(const std::string& which, const std::string& payment_text) {
    if (which == "dv") {
        bool all_better = true;
        for (int proof_case : {1, 2}) {
            const DeviationReport report = replay_impossibility_dv(proof_case);
            std::cout << "case=" << proof_case << " " << replay_line(report) << "\n";
            all_better = all_better && report.verdict == UtilityComparison::DeviationBetter;
        }
        std::cout << "note: the constructed valuation repeats a coordinate of a truthful "
                     "agent, so the distinct-values property fails here\n";
        return all_better ? 0 : 1;
    }

    if (!payment_text.empty()) {
        std::istringstream in(payment_text);
        std::vector<Rational> coords;
        std::string tok;
        while (in >> tok) coords.push_back(Rational::from_string(tok));
        const DeviationReport report = replay_impossibility_truthful(Vec(std::move(coords)));
        std::cout << replay_line(report) << "\n";
        return report.verdict == UtilityComparison::DeviationBetter ? 0 : 1;
    }

    // Sweep a 0.1-step payment grid over [0,2]^2; every individually
    // rational payment must admit a profitable deviation.
    std::size_t checked = 0, better = 0;
    for (int a = 0; a <= 20; ++a) {
        for (int b = 0; b <= 20; ++b) {
            const Vec payment{Rational(a, 10), Rational(b, 10)};
            const DeviationReport report = replay_impossibility_truthful(payment);
            ++checked;
            if (report.verdict == UtilityComparison::DeviationBetter) {
                ++better;
            } else {
                std::cout << "unexpected: payment=" << format_tuple(payment) << " "
                          << replay_line(report) << "\n";
            }
        }
    }
    std::cout << "payments-checked=" << checked << " deviation-better=" << better << "\n";
    return checked == better ? 0 : 1;
}

int cmd_gen(const GenerateConfig& config, const std::string& output) {
    const Instance instance = generate_instance(config);
    const std::string text = serialize_instance(instance);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw Error("cannot write '" + output + "'");
        out << text;
    }
    return 0;
}

int cmd_bench(const std::string& op, const std::vector<std::size_t>& sizes, std::size_t k,
              std::uint64_t seed, int reps) {
    for (std::size_t n : sizes) {
        GenerateConfig config;
        config.n = n;
        config.k = k;
        config.seed = seed;
        config.max_value = static_cast<std::int64_t>(4 * n) + 4;
        config.enforce_dv = true;
        const Instance instance = generate_instance(config);

        if (op == "refpoints") {
            std::size_t points = 0;
            const double ms = time_best_ms(reps, [&] {
                points = reference_points(instance.bids).points.size();
            });
            std::cout << "op=refpoints n=" << n << " k=" << k << " points=" << points
                      << " best-ms=" << ms << "\n";
        } else {
            std::size_t maxima = 0;
            const double ms = time_best_ms(reps, [&] {
                maxima = max_set_fast(instance.bids).size();
            });
            std::cout << "op=max-fast n=" << n << " k=" << k << " maxima=" << maxima
                      << " best-ms=" << ms << "\n";
            if (n <= 4000) {
                const double naive_ms =
                    time_best_ms(reps, [&] { maxima = max_set(instance.bids).size(); });
                std::cout << "op=max-naive n=" << n << " k=" << k << " maxima=" << maxima
                          << " best-ms=" << naive_ms << "\n";
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxima of vector sets, reference points, and vector-payment mechanisms"};
    app.require_subcommand(1);

    std::string file, method = "fast", refpoints_method = "grid";
    std::string kind = "m", policy = "lex-min", format = "text";
    std::string replay_case, replay_payment, gen_output, bench_op = "max";
    std::size_t policy_index = 0, budget = kDefaultGridBudget, max_deviations = 10'000;
    std::uint64_t verify_seed = 1;
    std::string deviations_mode = "grid";
    GenerateConfig gen_config;
    std::vector<std::size_t> bench_sizes{100'000, 200'000};
    std::size_t bench_k = 2;
    std::uint64_t bench_seed = 1;
    int bench_reps = 3;

    CLI::App* cmd_max = app.add_subcommand("max", "nondominated members of a bid set");
    cmd_max->add_option("file", file, "instance file")->required();
    cmd_max->add_option("--method", method, "fast | naive")
        ->check(CLI::IsMember({"fast", "naive"}));

    CLI::App* cmd_wmax = app.add_subcommand("wmax", "weakly nondominated members of a bid set");
    cmd_wmax->add_option("file", file, "instance file")->required();

    CLI::App* cmd_ref = app.add_subcommand("refpoints", "reference points of a bid set");
    cmd_ref->add_option("file", file, "instance file")->required();
    cmd_ref->add_option("--method", refpoints_method, "grid | staircase | vmax-oracle")
        ->check(CLI::IsMember({"grid", "staircase", "vmax-oracle"}));
    cmd_ref->add_option("--budget", budget, "enumeration budget");

    CLI::App* cmd_mechanism = app.add_subcommand("mech", "run a payment mechanism");
    cmd_mechanism->add_option("file", file, "instance file")->required();
    cmd_mechanism->add_option("--kind", kind, "m | m-prime")
        ->check(CLI::IsMember({"m", "m-prime"}));
    cmd_mechanism->add_option("--policy", policy, "lex-min | lex-max | indexed")
        ->check(CLI::IsMember({"lex-min", "lex-max", "indexed"}));
    cmd_mechanism->add_option("--policy-index", policy_index, "candidate index for 'indexed'");
    cmd_mechanism->add_option("--format", format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI::App* cmd_ver = app.add_subcommand("verify", "deviation search for profitable lies");
    cmd_ver->add_option("file", file, "instance file with valuations")->required();
    cmd_ver->add_option("--kind", kind, "m | m-prime")->check(CLI::IsMember({"m", "m-prime"}));
    cmd_ver->add_option("--policy", policy, "lex-min | lex-max | indexed")
        ->check(CLI::IsMember({"lex-min", "lex-max", "indexed"}));
    cmd_ver->add_option("--policy-index", policy_index, "candidate index for 'indexed'");
    cmd_ver->add_option("--deviations", deviations_mode, "deviation set construction")
        ->check(CLI::IsMember({"grid"}));
    cmd_ver->add_option("--max-deviations", max_deviations, "cap per agent");
    cmd_ver->add_option("--seed", verify_seed, "subsampling seed");
    cmd_ver->add_option("--format", format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI::App* cmd_rep = app.add_subcommand("replay", "impossibility counterexample replays");
    cmd_rep->add_option("--case", replay_case, "truthful | dv")
        ->required()
        ->check(CLI::IsMember({"truthful", "dv"}));
    cmd_rep->add_option("--payment", replay_payment,
                        "single payment \"p1 p2\" instead of the grid sweep");

    CLI::App* cmd_generate = app.add_subcommand("gen", "generate a random instance");
    cmd_generate->add_option("--n", gen_config.n, "agents")->required();
    cmd_generate->add_option("--k", gen_config.k, "dimension")->required();
    cmd_generate->add_option("--seed", gen_config.seed, "random seed");
    cmd_generate->add_option("--max-value", gen_config.max_value, "values drawn from [1, max]");
    cmd_generate->add_flag("--enforce-dv", gen_config.enforce_dv,
                           "distinct values per dimension");
    cmd_generate->add_flag("--with-valuations", gen_config.with_valuations,
                           "append a truthful valuation block");
    cmd_generate->add_option("-o,--output", gen_output, "output path (default stdout)");

    CLI::App* cmd_benchmark = app.add_subcommand("bench", "micro-benchmarks");
    cmd_benchmark->add_option("--op", bench_op, "max | refpoints")
        ->check(CLI::IsMember({"max", "refpoints"}));
    cmd_benchmark->add_option("--n", bench_sizes, "instance sizes");
    cmd_benchmark->add_option("--k", bench_k, "dimension");
    cmd_benchmark->add_option("--seed", bench_seed, "random seed");
    cmd_benchmark->add_option("--reps", bench_reps, "repetitions, best time reported");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_max->parsed()) return cmd_maxima(file, method, /*weak=*/false);
        if (cmd_wmax->parsed()) return cmd_maxima(file, method, /*weak=*/true);
        if (cmd_ref->parsed()) return cmd_refpoints(file, refpoints_method, budget);
        if (cmd_mechanism->parsed())
            return cmd_mech(file, kind, policy, policy_index, format);
        if (cmd_ver->parsed())
            return cmd_verify(file, kind, policy, policy_index, max_deviations, verify_seed,
                              format);
        if (cmd_rep->parsed()) return cmd_replay(replay_case, replay_payment);
        if (cmd_generate->parsed()) return cmd_gen(gen_config, gen_output);
        if (cmd_benchmark->parsed())
            return cmd_bench(bench_op, bench_sizes, bench_k, bench_seed, bench_reps);
    } catch (const maxvec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
