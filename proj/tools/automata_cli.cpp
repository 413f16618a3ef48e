// Command-line front end. Every command writes one JSON document to stdout
// or --output. Exit status: 0 success, 1 verdict fails, 2 usage or parameter
// error, 3 resource cap exceeded, 4 malformed machine file.
#include "automata/acceptance.hpp"
#include "automata/bounds.hpp"
#include "automata/constructions.hpp"
#include "automata/conversions.hpp"
#include "automata/errors.hpp"
#include "automata/json_io.hpp"
#include "automata/probabilistic.hpp"
#include "automata/simulate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace automata;

namespace {

enum Exit : int { exit_ok = 0, exit_fails = 1, exit_usage = 2, exit_cap = 3, exit_format = 4 };

struct Common {
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string output;
    Caps caps = Caps::from_environment();
};

struct ProblemArgs {
    std::string name;
    unsigned k = 1;
    unsigned n = 1;
    unsigned r = 1;
    std::string p = "1/2";
    std::uint64_t c = 3;
    std::size_t max_length = 0;  // 0 selects the problem's default
};

void emit(const Common& common, const Json& j)
{
    const auto text = render(j);
    if (common.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(common.output, std::ios::binary);
    if (!out) throw ParameterError("cannot write '" + common.output + "'");
    out << text;
}

AnyMachine load_machine(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read machine file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_machine(buffer.str());
}

template <typename Machine>
Machine load_as(const std::string& path, const char* what)
{
    auto any = load_machine(path);
    if (auto* m = std::get_if<Machine>(&any)) return std::move(*m);
    throw ParameterError(std::string("this command needs a ") + what + " machine");
}

PromiseProblem make_problem(const ProblemArgs& a, const Caps& caps)
{
    if (a.name == "evenodd") return evenodd_problem({a.k});
    if (a.name == "trios") return trios_problem({a.n, a.r}, caps);
    if (a.name == "up") return up_problem(parse_rational(a.p));
    if (a.name == "parity") return parity_problem([](std::size_t) { return true; });
    if (a.name == "expeq") return expeq_problem(a.c);
    throw ParameterError("unknown problem '" + a.name + "' (evenodd, trios, up, parity, expeq)");
}

std::size_t default_length(const ProblemArgs& a, const Caps& caps)
{
    if (a.max_length != 0) return a.max_length;
    if (a.name == "evenodd") return std::size_t{8} << a.k;
    if (a.name == "trios") return (3 * std::size_t{a.n} + 1) * a.r;
    if (a.name == "up") {
        const auto c = critical_lengths(parse_rational(a.p), caps);
        return c.reject_start + c.accept_limit + 2;
    }
    if (a.name == "parity") return 16;
    throw ParameterError("problem '" + a.name + "' needs --max-length");
}

void add_problem_options(CLI::App* cmd, ProblemArgs& a, bool required)
{
    auto* opt = cmd->add_option("--problem", a.name, "evenodd, trios, up, parity or expeq");
    if (required) opt->required();
    cmd->add_option("--k", a.k, "EvenOdd exponent")->capture_default_str();
    cmd->add_option("--n", a.n, "TRIOS block width")->capture_default_str();
    cmd->add_option("--r", a.r, "TRIOS segment count")->capture_default_str();
    cmd->add_option("--p", a.p, "UP parameter as num/den or decimal")->capture_default_str();
    cmd->add_option("--c", a.c, "ExpEQ constant")->capture_default_str();
    cmd->add_option("--max-length", a.max_length, "longest instance checked (0 = problem default)");
}

Json to_json(const OutcomeDistribution& d)
{
    return {{"accept", to_string(d.accept)}, {"reject", to_string(d.reject)}, {"neutral", to_string(d.neutral)}};
}

Json to_json(const Enclosure& e) { return {{"lo", to_string(e.lo)}, {"hi", to_string(e.hi)}}; }

int verdict_exit(const VerificationReport& report) { return report.ok() ? exit_ok : exit_fails; }

// build

AnyMachine build_construction(const std::string& name, const ProblemArgs& a, const Caps& caps)
{
    if (name == "evenodd-dfa") return evenodd_dfa({a.k}, caps);
    if (name == "evenodd-afa") return evenodd_afa_rt({a.k});
    if (name == "evenodd-afa-epsfree") return evenodd_afa_epsfree({a.k});
    if (name == "trios-dfa") return trios_dfa({a.n, a.r}, caps);
    if (name == "trios-2dfa") return trios_twoway_dfa({a.n, a.r});
    if (name == "trios-lv") return OneWayPfa(trios_lasvegas_pfa(a.n));
    if (name == "up-pfa") return up_pfa(parse_rational(a.p));
    if (name == "up-dfa") return up_dfa(parse_rational(a.p), caps);
    if (name == "parity-dfa") return parity_dfa();
    throw ParameterError("unknown construction '" + name +
                         "' (evenodd-dfa, evenodd-afa, evenodd-afa-epsfree, trios-dfa, trios-2dfa, trios-lv, "
                         "up-pfa, up-dfa, parity-dfa)");
}

// verify

int verify(const std::string& target, const ProblemArgs& given, const std::string& machine_path,
           const std::string& threshold, const Common& common)
{
    ProblemArgs a = given;
    if (target == "lv-trios") {
        a.name = "trios";
        const auto problem = make_problem(a, common.caps);
        const Rational t = threshold.empty() ? trios_success_bound(a.n, a.r) : parse_rational(threshold);
        const auto report = lasvegas_success(trios_lasvegas_pfa(a.n), problem, default_length(a, common.caps), t);
        emit(common, to_json(report));
        return verdict_exit(report);
    }
    auto check = [&](const auto& machine) {
        const auto report = promise_check(machine, make_problem(a, common.caps), default_length(a, common.caps));
        emit(common, to_json(report));
        return verdict_exit(report);
    };
    if (target == "machine") {
        if (machine_path.empty() || a.name.empty()) throw ParameterError("verify machine needs --machine and --problem");
        auto any = load_machine(machine_path);
        if (auto* pfa = std::get_if<OneWayPfa>(&any)) {
            const Rational t = threshold.empty() ? Rational(1, 2) : parse_rational(threshold);
            const auto report = lasvegas_success(LasVegasPfa(*pfa), make_problem(a, common.caps),
                                                 default_length(a, common.caps), t);
            emit(common, to_json(report));
            return verdict_exit(report);
        }
        return std::visit(
            [&](const auto& m) -> int {
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, OneWayPfa>)
                    return exit_usage;
                else
                    return check(m);
            },
            any);
    }
    if (target == "evenodd-afa" || target == "evenodd-afa-epsfree" || target == "evenodd-dfa") {
        a.name = "evenodd";
        if (target == "evenodd-afa") return check(evenodd_afa_rt({a.k}));
        if (target == "evenodd-dfa") return check(evenodd_dfa({a.k}, common.caps));
        return check(evenodd_afa_epsfree({a.k}));
    }
    if (target == "trios-dfa" || target == "trios-2dfa") {
        a.name = "trios";
        if (target == "trios-dfa") return check(trios_dfa({a.n, a.r}, common.caps));
        return check(trios_twoway_dfa({a.n, a.r}));
    }
    if (target == "up-dfa") {
        a.name = "up";
        if (given.max_length == 0) a.max_length = critical_lengths(parse_rational(a.p), common.caps).reject_start + 5;
        return check(up_dfa(parse_rational(a.p), common.caps));
    }
    throw ParameterError("unknown verify target '" + target +
                         "' (lv-trios, evenodd-afa, evenodd-afa-epsfree, evenodd-dfa, trios-dfa, trios-2dfa, up-dfa, "
                         "machine)");
}

// minsize

Json search_json(const SearchSpec& spec, const SearchResult& r)
{
    Json j{{"kind", to_string(spec.kind)},
           {"problem", spec.problem.name()},
           {"max_states", spec.max_states},
           {"max_length", spec.max_length},
           {"value", r.size ? Json(*r.size) : Json()},
           {"candidates", r.candidates},
           {"instances", r.instances}};
    if (r.dfa_witness) j["witness"] = to_json(*r.dfa_witness);
    if (r.nfa_witness) j["witness"] = to_json(*r.nfa_witness);
    if (r.validation) j["validation"] = to_json(*r.validation);
    return j;
}

int run(int argc, char** argv)
{
    CLI::App app{"Descriptional complexity workbench for finite automata and promise problems"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--jobs", common.jobs, "worker threads")->envname("AUTOMATA_JOBS")->capture_default_str();
    app.add_option("--seed", common.seed, "random seed")->capture_default_str();
    app.add_option("--output,-o", common.output, "write the JSON report here instead of stdout");
    app.add_option("--max-states", common.caps.max_states, "cap on constructed or explored states")
        ->envname("AUTOMATA_MAX_STATES")
        ->capture_default_str();
    app.add_option("--max-instances", common.caps.max_instances, "cap on enumerated promise instances")
        ->envname("AUTOMATA_MAX_INSTANCES")
        ->capture_default_str();
    app.add_option("--max-critical-length", common.caps.max_critical_length, "cap on A_p and R_p")
        ->envname("AUTOMATA_MAX_CRITICAL_LENGTH")
        ->capture_default_str();

    int status = exit_ok;
    ProblemArgs problem;
    std::string machine_path, word, name, threshold;

    auto* build = app.add_subcommand("build", "emit a construction as a JSON machine");
    build->add_option("construction", name, "construction name")->required();
    add_problem_options(build, problem, false);
    build->callback([&] { emit(common, to_json(build_construction(name, problem, common.caps))); });

    auto* simulate = app.add_subcommand("simulate", "run a machine on a word");
    simulate->add_option("--machine", machine_path, "machine JSON file")->required();
    simulate->add_option("--word", word, "input word")->required();
    simulate->callback([&] {
        const auto any = load_machine(machine_path);
        if (auto* pfa = std::get_if<OneWayPfa>(&any)) {
            emit(common, {{"word", word}, {"distribution", to_json(outcome_dist(*pfa, word))}});
            return;
        }
        const bool accepted = std::visit(
            [&](const auto& m) {
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, OneWayPfa>)
                    return false;
                else
                    return accepts(m, word);
            },
            any);
        emit(common, {{"word", word}, {"accepted", accepted}});
    });

    std::string algorithm;
    auto* convert = app.add_subcommand("convert", "apply a conversion to a machine");
    convert->add_option("--from", machine_path, "machine JSON file")->required();
    convert->add_option("--algorithm", algorithm, "subset, eps-remove, unary-afa-dfa, minimize or complete")->required();
    convert->callback([&] {
        if (algorithm == "subset")
            emit(common, to_json(nfa_to_dfa(load_as<OneWayNfa>(machine_path, "nfa"), common.caps)));
        else if (algorithm == "eps-remove")
            emit(common, to_json(remove_epsilon(load_as<OneWayNfa>(machine_path, "nfa"))));
        else if (algorithm == "unary-afa-dfa")
            emit(common, to_json(unary_afa_to_dfa(load_as<OneWayAfa>(machine_path, "afa"), common.caps)));
        else if (algorithm == "minimize")
            emit(common, to_json(dfa_minimize(load_as<OneWayDfa>(machine_path, "dfa"))));
        else if (algorithm == "complete")
            emit(common, to_json(dfa_complete(load_as<OneWayDfa>(machine_path, "dfa"))));
        else
            throw ParameterError("unknown algorithm '" + algorithm + "'");
    });

    std::uint64_t bound_n = 1;
    auto* bounds = app.add_subcommand("bounds", "evaluate a trade-off formula exactly");
    bounds->add_option("--formula", name, "afa-to-dfa, 2nfa-to-dfa or svfa-to-dfa")->required();
    bounds->add_option("--n", bound_n, "state count of the source machine")->required();
    bounds->callback([&] {
        const auto b = evaluate_bound(name, bound_n);
        emit(common, {{"formula", b.formula},
                      {"n", b.n},
                      {"value", to_string(b.value)},
                      {"exact", b.exact},
                      {"expression", b.expression},
                      {"approximate", b.approximate}});
    });

    auto* prob = app.add_subcommand("prob", "probabilistic analyses");
    prob->require_subcommand(1);

    auto* exact = prob->add_subcommand("exact", "exact outcome distribution of a PFA on a word");
    exact->add_option("--machine", machine_path, "PFA JSON file")->required();
    exact->add_option("--word", word, "input word")->required();
    exact->callback([&] {
        const auto pfa = load_as<OneWayPfa>(machine_path, "pfa");
        emit(common, {{"word", word}, {"distribution", to_json(outcome_dist(pfa, word))}});
    });

    std::uint64_t trials = 100000;
    auto* mc = prob->add_subcommand("mc", "Monte Carlo estimate of the outcome frequencies");
    mc->add_option("--machine", machine_path, "PFA JSON file")->required();
    mc->add_option("--word", word, "input word")->required();
    mc->add_option("--trials", trials, "number of runs")->capture_default_str();
    mc->callback([&] {
        const auto pfa = load_as<OneWayPfa>(machine_path, "pfa");
        const auto r = monte_carlo(pfa, word, trials, common.seed, common.jobs);
        emit(common, {{"word", word},
                      {"trials", r.trials},
                      {"accept", r.accept},
                      {"reject", r.reject},
                      {"neutral", r.neutral},
                      {"seed", r.seed},
                      {"generator", monte_carlo_generator},
                      {"accept_frequency", r.frequency(r.accept)},
                      {"exact_accept", to_string(accept_prob(pfa, word))}});
    });

    ProblemArgs lv_problem;
    auto* lv = prob->add_subcommand("lasvegas", "guaranteed Las Vegas success over a promise problem");
    lv->add_option("--machine", machine_path, "PFA JSON file (default: the TRIOS construction for --n)");
    lv->add_option("--threshold", threshold, "required success probability");
    add_problem_options(lv, lv_problem, false);
    lv->callback([&] {
        if (lv_problem.name.empty()) lv_problem.name = "trios";
        const auto pfa = machine_path.empty() ? trios_lasvegas_pfa(lv_problem.n)
                                              : LasVegasPfa(load_as<OneWayPfa>(machine_path, "pfa"));
        const Rational t = !threshold.empty()         ? parse_rational(threshold)
                           : lv_problem.name == "trios" ? trios_success_bound(lv_problem.n, lv_problem.r)
                                                        : Rational(1, 2);
        const auto report =
            lasvegas_success(pfa, make_problem(lv_problem, common.caps), default_length(lv_problem, common.caps), t);
        emit(common, to_json(report));
        status = verdict_exit(report);
    });

    std::uint64_t c = 3, m = 1, n = 1;
    std::string outcome_case = "yes", method = "auto", rate;
    auto* params = prob->add_subcommand("expeq-params", "per-round acceptance a and round count t");
    params->add_option("--c", c)->capture_default_str();
    params->add_option("--m", m)->capture_default_str();
    params->add_option("--n", n)->capture_default_str();
    params->callback([&] {
        const auto model = expeq_params(c, m, n);
        emit(common, {{"c", c}, {"m", m}, {"n", n}, {"a", to_string(model.a)}, {"t", to_string(model.t)}});
    });

    auto* compose = prob->add_subcommand("expeq-compose", "compose t independent rounds");
    compose->add_option("--c", c)->capture_default_str();
    compose->add_option("--m", m)->capture_default_str();
    compose->add_option("--n", n)->capture_default_str();
    compose->add_option("--case", outcome_case, "yes (r = a/c) or no (r = c a)")->capture_default_str();
    compose->add_option("--rate", rate, "explicit per-round reject probability r");
    compose->add_option("--method", method, "auto, exact or enclosure")->capture_default_str();
    compose->callback([&] {
        auto model = expeq_params(c, m, n);
        if (!rate.empty())
            model.r = parse_rational(rate);
        else if (outcome_case == "yes")
            model.r = model.a / c;
        else if (outcome_case == "no")
            model.r = model.a * c;
        else
            throw ParameterError("--case must be yes or no");
        Json j{{"c", c}, {"m", m}, {"n", n}, {"a", to_string(model.a)}, {"r", to_string(model.r)}, {"t", to_string(model.t)}};
        const bool small = model.t <= 200000;
        if (method == "exact" || (method == "auto" && small)) {
            j["method"] = "exact";
            j["distribution"] = to_json(expeq_compose(model));
        } else if (method == "enclosure" || method == "auto") {
            const auto e = expeq_compose_bounds(model);
            j["method"] = "enclosure";
            j["distribution"] = {{"accept", to_json(e.accept)}, {"reject", to_json(e.reject)}, {"neutral", to_json(e.neutral)}};
        } else {
            throw ParameterError("--method must be auto, exact or enclosure");
        }
        emit(common, j);
    });

    std::string kind = "unary-dfa";
    std::size_t search_states = 0;
    ProblemArgs search_problem;
    auto* minsize = app.add_subcommand("minsize", "exhaustive minimal machine size for a promise problem");
    minsize->add_option("--kind", kind, "unary-dfa, dfa or unary-nfa")->capture_default_str();
    minsize->add_option("--max-states", search_states, "largest size tried (default: the cap for --kind)");
    add_problem_options(minsize, search_problem, true);
    minsize->callback([&] {
        const auto k = parse_machine_kind(kind);
        const SearchSpec spec{k, search_states ? search_states : max_search_states(k),
                              make_problem(search_problem, common.caps), default_length(search_problem, common.caps),
                              common.jobs};
        const auto r = min_size(spec);
        emit(common, search_json(spec, r));
        status = r.size ? exit_ok : exit_fails;
    });

    std::uint64_t pump_m = 0;
    std::vector<std::uint64_t> pump_h{1};
    bool expeq_mode = false;
    auto* pumping = app.add_subcommand("pumping", "n -> n+n! pumping checks");
    pumping->add_option("--machine", machine_path, "unary DFA/NFA, or a DFA over {a,b} with --expeq")->required();
    pumping->add_option("--m", pump_m, "pumped length (default: state count)");
    pumping->add_option("--multipliers", pump_h, "multipliers h, or repetitions T with --expeq")->delimiter(',');
    pumping->add_flag("--expeq", expeq_mode, "check the ExpEQ traversal triple instead");
    pumping->callback([&] {
        const auto any = load_machine(machine_path);
        VerificationReport report = VerificationReport::inconclusive();
        if (expeq_mode) {
            report = expeq_pumping_check(load_as<OneWayDfa>(machine_path, "dfa"), pump_h);
        } else if (auto* dfa = std::get_if<OneWayDfa>(&any)) {
            report = pumping_check(*dfa, pump_m ? pump_m : dfa->state_count(), pump_h);
        } else if (auto* nfa = std::get_if<OneWayNfa>(&any)) {
            report = pumping_check(*nfa, pump_m ? pump_m : nfa->state_count(), pump_h);
        } else {
            throw ParameterError("pumping needs a DFA or NFA");
        }
        emit(common, to_json(report));
        status = verdict_exit(report);
    });

    ProblemArgs verify_problem;
    auto* verify_cmd = app.add_subcommand("verify", "check a construction against its promise problem");
    verify_cmd->add_option("target", name, "lv-trios, evenodd-afa, evenodd-afa-epsfree, evenodd-dfa, trios-dfa, "
                                           "trios-2dfa, up-dfa or machine")
        ->required();
    verify_cmd->add_option("--machine", machine_path, "machine JSON file for target 'machine'");
    verify_cmd->add_option("--threshold", threshold, "Las Vegas success threshold");
    add_problem_options(verify_cmd, verify_problem, false);
    verify_cmd->callback([&] { status = verify(name, verify_problem, machine_path, threshold, common); });

    auto* reproduce = app.add_subcommand("reproduce-all", "run the acceptance suite");
    reproduce->add_option("tier", name, "fast or slow")->required();
    reproduce->callback([&] {
        const auto tier = parse_tier(name);
        const auto results = run_acceptance({tier, common.jobs});
        bool all = true;
        for (const auto& r : results) {
            std::cerr << summary_line(r) << '\n';
            all = all && r.passed();
        }
        emit(common, to_json(results, tier));
        status = all ? exit_ok : exit_fails;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << '\n';
        return exit_cap;
    } catch (const FormatError& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return exit_format;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
