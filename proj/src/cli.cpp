#include "hgcrp/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "hgcrp/checks.hpp"
#include "hgcrp/exact.hpp"
#include "hgcrp/generators.hpp"
#include "hgcrp/greedy.hpp"
#include "hgcrp/io.hpp"
#include "hgcrp/matching.hpp"
#include "hgcrp/metrics.hpp"

namespace hgcrp {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

std::string with_decimal(const Utility& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", r.to_double());
    return r.str() + " (≈" + buf + ")";
}

std::string psi_prefix(const PsiVector& v, int limit = 16) {
    std::string s;
    int shown = std::min(limit, v.size());
    for (int i = 0; i < shown; ++i) {
        if (!s.empty()) s += ", ";
        s += v.values()[i].str();
    }
    if (shown < v.size()) s += ", ...";
    return s;
}

Utility parse_rational_arg(const std::string& text, const std::string& name) {
    try {
        return Utility::parse(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(name, e.what());
    }
}

EnumerationBudget budget_from_env() {
    EnumerationBudget budget;
    if (const char* env = std::getenv("HGCRP_BUDGET_AGENTS")) {
        try {
            budget.max_agents = std::stoi(env);
        } catch (const std::exception&) {
            throw ParseError("bad HGCRP_BUDGET_AGENTS value: " + std::string(env));
        }
    }
    return budget;
}

std::string move_str(const AgentMove& mv) {
    return "agent=" + std::to_string(mv.agent) +
           " target=" + (mv.target ? "{" + mv.target->str() + "}" : "empty");
}

struct SolveOpts {
    std::string alg;
    std::string in_path;
    std::string out_path;
};

int run_solve(const SolveOpts& opt, const EnumerationBudget& budget, std::ostream& out,
              std::ostream& err) {
    Instance inst = load_instance(opt.in_path);
    std::optional<Partition> pi;
    std::vector<std::string> verified;
    bool within_budget = inst.agent_count() <= budget.max_agents;

    auto verify = [&](const std::string& name, bool ok) {
        if (!ok) {
            err << "error: solver self-check '" << name << "' failed on " << opt.alg << " output"
                << "\n";
            return false;
        }
        verified.push_back(name);
        return true;
    };

    if (opt.alg == "greedy") {
        pi = greedy_solve(inst);
    } else if (opt.alg == "exact") {
        pi = psi_max_partition(inst, budget);
    } else if (opt.alg == "opt") {
        pi = socially_optimal(inst, budget);
    } else if (opt.alg == "perfect") {
        auto found = perfect_partition(inst, budget);
        if (!found) {
            out << "algorithm: perfect\n";
            out << "agents: " << inst.agent_count() << "\n";
            out << "perfect-partition: none\n";
            return kExitOk;
        }
        pi = *found;
    } else if (opt.alg == "match2-opt") {
        pi = match2_opt(inst);
    } else {
        pi = match2_pcis(inst);
    }

    // Fail closed: re-check the guarantees each algorithm claims before
    // reporting success. Enumeration-backed checks only run within budget.
    bool ok = true;
    if (opt.alg == "greedy" || opt.alg == "match2-pcis") {
        ok = ok && verify("core", !find_blocking_coalition(inst, *pi));
        ok = ok && verify("is", !find_is_deviation(inst, *pi));
    }
    if (opt.alg == "exact") {
        ok = ok && verify("core", !find_blocking_coalition(inst, *pi));
        ok = ok && verify("is", !find_is_deviation(inst, *pi));
    }
    if (opt.alg == "perfect") {
        ok = ok && verify("perfect", is_perfect(inst, *pi));
    }
    if (opt.alg == "match2-opt" && within_budget) {
        ok = ok && verify("welfare-opt",
                          welfare(inst, *pi) == welfare(inst, socially_optimal(inst, budget)));
    }
    if ((opt.alg == "exact" || opt.alg == "opt" || opt.alg == "match2-opt" ||
         opt.alg == "match2-pcis") &&
        within_budget) {
        ok = ok && verify("pareto", !find_pareto_dominator(inst, *pi, budget));
    }
    if (!ok) return kExitCheckFailed;

    if (!opt.out_path.empty()) {
        save_partition(*pi, opt.out_path);
    } else {
        out << serialize_partition(*pi);
    }
    out << "algorithm: " << opt.alg << "\n";
    out << "agents: " << inst.agent_count() << "\n";
    out << "partition: " << pi->str() << "\n";
    out << "welfare: " << with_decimal(welfare(inst, *pi)) << "\n";
    out << "psi: " << psi_prefix(psi(inst, *pi)) << "\n";
    if (verified.empty()) {
        out << "verified: (enumeration checks skipped: over budget)\n";
    } else {
        std::string joined;
        for (const auto& v : verified) {
            if (!joined.empty()) joined += ", ";
            joined += v;
        }
        out << "verified: " << joined << "\n";
    }
    return kExitOk;
}

int run_check(const std::string& in_path, const std::string& partition_path,
              const std::string& props_csv, const EnumerationBudget& budget, std::ostream& out) {
    Instance inst = load_instance(in_path);
    Partition pi = load_partition(inst, partition_path);
    bool all_ok = true;
    std::stringstream props(props_csv);
    std::string prop;
    while (std::getline(props, prop, ',')) {
        if (prop == "core") {
            auto s = find_blocking_coalition(inst, pi);
            if (s) {
                out << "core: FAIL blocking={" << s->str() << "}\n";
            } else {
                out << "core: ok\n";
            }
            all_ok = all_ok && !s;
        } else if (prop == "is") {
            auto mv = find_is_deviation(inst, pi);
            if (mv) {
                out << "is: FAIL " << move_str(*mv) << "\n";
            } else {
                out << "is: ok\n";
            }
            all_ok = all_ok && !mv;
        } else if (prop == "nash") {
            auto mv = find_nash_deviation(inst, pi);
            if (mv) {
                out << "nash: FAIL " << move_str(*mv) << "\n";
            } else {
                out << "nash: ok\n";
            }
            all_ok = all_ok && !mv;
        } else if (prop == "pareto") {
            auto dom = find_pareto_dominator(inst, pi, budget);
            if (dom) {
                out << "pareto: FAIL dominator=" << dom->str() << "\n";
            } else {
                out << "pareto: ok\n";
            }
            all_ok = all_ok && !dom;
        } else if (prop == "perfect") {
            bool perfect = is_perfect(inst, pi);
            if (perfect) {
                out << "perfect: ok\n";
            } else {
                // Witness: the first agent below its attainable maximum.
                for (AgentId a = 0; a < inst.agent_count(); ++a) {
                    Utility best = inst.singleton_utility(a);
                    for (int idx : inst.coalitions_containing(a)) {
                        best = std::max(best, inst.utility_at(idx));
                    }
                    if (utility_of(inst, pi, a) < best) {
                        out << "perfect: FAIL agent=" << a << " has "
                            << utility_of(inst, pi, a).str() << ", attainable " << best.str()
                            << "\n";
                        break;
                    }
                }
            }
            all_ok = all_ok && perfect;
        } else {
            throw CLI::ValidationError("--props", "unknown property '" + prop + "'");
        }
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int run_metrics(const std::string& in_path, const std::string& what,
                const std::string& partition_path, const EnumerationBudget& budget,
                std::ostream& out) {
    Instance inst = load_instance(in_path);
    if (what == "poa" || what == "pos") {
        try {
            Utility r = what == "poa" ? price_of_anarchy(inst, budget)
                                      : price_of_stability(inst, budget);
            out << what << ": " << with_decimal(r) << "\n";
        } catch (const UnboundedError&) {
            out << what << ": unbounded\n";
        }
    } else if (what == "welfare") {
        Utility w = partition_path.empty()
                        ? welfare(inst, socially_optimal(inst, budget))
                        : welfare(inst, load_partition(inst, partition_path));
        out << "welfare: " << with_decimal(w) << "\n";
    } else {
        out << "core-count: " << enumerate_core_stable(inst, budget).size() << "\n";
    }
    return kExitOk;
}

void emit_instance(const Instance& inst, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << serialize_instance(inst);
    } else {
        save_instance(inst, out_path);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"HGCRP coalition-formation toolkit: solvers, stability checks, "
                 "instance generators and welfare-loss metrics"};
    app.require_subcommand(1);

    int budget_agents = -1;
    std::int64_t budget_partitions = -1;
    app.add_option("--max-agents", budget_agents,
                   "enumeration budget: max agents (env HGCRP_BUDGET_AGENTS)");
    app.add_option("--max-partitions", budget_partitions,
                   "enumeration budget: max partitions visited");

    SolveOpts solve_opts;
    auto* solve = app.add_subcommand("solve", "compute a partition and re-verify it");
    solve->add_option("--alg", solve_opts.alg, "algorithm")
        ->required()
        ->check(CLI::IsMember({"greedy", "exact", "opt", "perfect", "match2-opt", "match2-pcis"}));
    solve->add_option("--in", solve_opts.in_path, "instance file")->required();
    solve->add_option("--out", solve_opts.out_path, "partition output file (default: stdout)");

    std::string check_in, check_partition, check_props;
    auto* check = app.add_subcommand("check", "check properties of a partition");
    check->add_option("--in", check_in, "instance file")->required();
    check->add_option("--partition", check_partition, "partition file")->required();
    check->add_option("--props", check_props, "comma list of core,is,nash,pareto,perfect")
        ->required();

    std::string metrics_in, metrics_what, metrics_partition;
    auto* metrics = app.add_subcommand("metrics", "welfare-loss metrics");
    metrics->add_option("--in", metrics_in, "instance file")->required();
    metrics->add_option("--what", metrics_what, "metric")
        ->required()
        ->check(CLI::IsMember({"poa", "pos", "welfare", "core-count"}));
    metrics->add_option("--partition", metrics_partition,
                        "with --what welfare: evaluate this partition instead of OPT");

    auto* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);

    std::string gen_out;
    std::string ec_spec;
    auto* gen_ec = gen->add_subcommand("exact-cover", "exact-cover reduction instance");
    gen_ec->add_option("--spec", ec_spec, "set system file")->required();
    gen_ec->add_option("--out", gen_out, "instance output file (default: stdout)");

    std::string mis_graph, mis_eps;
    auto* gen_mis = gen->add_subcommand("mis", "independent-set reduction instance");
    gen_mis->add_option("--graph", mis_graph, "graph file")->required();
    gen_mis->add_option("--eps", mis_eps, "singleton utility, 0 < eps <= 1/|E|^2");
    gen_mis->add_option("--out", gen_out, "instance output file (default: stdout)");

    int pf_agents = 0;
    std::string pf_eps;
    auto* gen_pf = gen->add_subcommand("pos-family", "tight price-of-stability family");
    gen_pf->add_option("--agents", pf_agents, "agent count (>= 2)")->required();
    gen_pf->add_option("--eps", pf_eps, "eps > 0")->required();
    gen_pf->add_option("--out", gen_out, "instance output file (default: stdout)");

    int rnd_agents = 0, rnd_max_size = 0, rnd_max_den = 6;
    std::uint64_t rnd_seed = 1;
    std::string rnd_density = "1/2";
    auto* gen_rnd = gen->add_subcommand("random", "seeded random instance");
    gen_rnd->add_option("--agents", rnd_agents, "agent count")->required();
    gen_rnd->add_option("--max-size", rnd_max_size, "largest coalition size")->required();
    gen_rnd->add_option("--density", rnd_density, "listing probability (rational)");
    gen_rnd->add_option("--max-den", rnd_max_den, "largest utility denominator");
    gen_rnd->add_option("--seed", rnd_seed, "RNG seed");
    gen_rnd->add_option("--out", gen_out, "instance output file (default: stdout)");

    std::vector<const char*> argv;
    argv.push_back("hgcrp");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        EnumerationBudget budget = budget_from_env();
        if (budget_agents > 0) budget.max_agents = budget_agents;
        if (budget_partitions > 0) budget.max_partitions = budget_partitions;

        if (*solve) return run_solve(solve_opts, budget, out, err);
        if (*check) return run_check(check_in, check_partition, check_props, budget, out);
        if (*metrics) return run_metrics(metrics_in, metrics_what, metrics_partition, budget, out);
        if (*gen_ec) {
            emit_instance(from_exact_cover(load_set_cover(ec_spec)), gen_out, out);
            return kExitOk;
        }
        if (*gen_mis) {
            std::optional<Utility> eps;
            if (!mis_eps.empty()) eps = parse_rational_arg(mis_eps, "--eps");
            emit_instance(from_independent_set(load_graph(mis_graph), eps), gen_out, out);
            return kExitOk;
        }
        if (*gen_pf) {
            emit_instance(pos_family(pf_agents, parse_rational_arg(pf_eps, "--eps")), gen_out,
                          out);
            return kExitOk;
        }
        if (*gen_rnd) {
            emit_instance(random_instance(rnd_agents, rnd_max_size,
                                          parse_rational_arg(rnd_density, "--density"),
                                          rnd_max_den, rnd_seed),
                          gen_out, out);
            return kExitOk;
        }
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace hgcrp
