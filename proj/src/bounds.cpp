#include "automata/bounds.hpp"

#include "automata/conversions.hpp"
#include "automata/errors.hpp"
#include "automata/simulate.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <thread>

namespace automata {

std::string to_string(MachineKind kind)
{
    switch (kind) {
    case MachineKind::unary_dfa: return "unary-dfa";
    case MachineKind::dfa: return "dfa";
    case MachineKind::unary_nfa: return "unary-nfa";
    }
    return "unary-dfa";
}

MachineKind parse_machine_kind(const std::string& text)
{
    if (text == "unary-dfa") return MachineKind::unary_dfa;
    if (text == "dfa") return MachineKind::dfa;
    if (text == "unary-nfa") return MachineKind::unary_nfa;
    throw ParameterError("unknown machine kind '" + text + "'");
}

std::size_t max_search_states(MachineKind kind)
{
    switch (kind) {
    case MachineKind::unary_dfa: return 18;
    case MachineKind::dfa: return 4;
    case MachineKind::unary_nfa: return 4;
    }
    return 0;
}

namespace {

void check_spec(const SearchSpec& spec)
{
    if (spec.max_states < 1) throw ParameterError("search requires max_states >= 1");
    if (spec.max_states > max_search_states(spec.kind))
        throw ResourceCapExceeded(to_string(spec.kind) + " search is capped at " +
                                  std::to_string(max_search_states(spec.kind)) + " states");
    if (spec.kind != MachineKind::dfa && !spec.problem.is_unary())
        throw ParameterError(to_string(spec.kind) + " search requires a unary problem");
    if (spec.kind == MachineKind::dfa && spec.problem.alphabet().size() > 3)
        throw ResourceCapExceeded("dfa search is capped at alphabets of size 3");
}

std::vector<Instance> bounded_instances(const SearchSpec& spec)
{
    auto instances = spec.problem.instances(spec.max_length);
    std::erase_if(instances, [&](const Instance& i) { return i.word.size() > spec.max_length; });
    return instances;
}

template <typename Machine>
void validate(SearchResult& result, const Machine& witness, const SearchSpec& spec)
{
    result.validation = promise_check(witness, spec.problem, spec.max_length);
    if (!result.validation->ok())
        throw std::logic_error("search produced a witness that fails promise_check");
}

}  // namespace

// ------------------------------------------------------------------ unary DFA

SearchResult min_unary_dfa_size(const SearchSpec& spec)
{
    check_spec(spec);
    const auto instances = bounded_instances(spec);
    SearchResult result;
    result.instances = instances.size();
    const char symbol = spec.problem.alphabet()[0];

    for (std::size_t s = 1; s <= spec.max_states; ++s) {
        // loop target s means "last transition undefined"; tried first
        for (std::size_t shape = 0; shape <= s; ++shape) {
            const std::size_t loop = shape == 0 ? s : shape - 1;
            ++result.candidates;
            // The accepting set is forced by the instances: a state must
            // accept iff some yes-instance ends there. Any other choice of
            // accepting set solves a subset of what this one solves.
            std::vector<int> demand(s, -1);
            bool ok = true;
            for (const auto& inst : instances) {
                const std::size_t j = inst.word.size();
                const bool want = inst.expected == Classification::yes;
                std::size_t q;
                if (j < s)
                    q = j;
                else if (loop == s) {
                    if (want) ok = false;
                    if (!ok) break;
                    continue;
                } else
                    q = loop + (j - loop) % (s - loop);
                if (demand[q] == -1)
                    demand[q] = want;
                else if (demand[q] != static_cast<int>(want))
                    ok = false;
                if (!ok) break;
            }
            if (!ok) continue;
            std::vector<DfaTransition> tr;
            std::vector<State> accepting;
            for (State q = 0; q < s; ++q) {
                if (q + 1 < s)
                    tr.push_back({q, symbol, q + 1});
                else if (loop < s)
                    tr.push_back({q, symbol, static_cast<State>(loop)});
                if (demand[q] == 1) accepting.push_back(q);
            }
            OneWayDfa witness(s, spec.problem.alphabet(), 0, std::move(tr), std::move(accepting));
            result.size = s;
            validate(result, witness, spec);
            result.dfa_witness = std::move(witness);
            return result;
        }
    }
    return result;
}

// ------------------------------------------------------------------ DFA

namespace {

class DfaSearch {
public:
    DfaSearch(const Alphabet& alphabet, const std::vector<Instance>& instances, std::size_t states)
        : sigma_(alphabet.size()), states_(states), table_(states * alphabet.size(), unassigned),
          demand_(states, -1)
    {
        for (const auto& inst : instances) {
            words_.push_back(alphabet.encode(inst.word));
            yes_.push_back(inst.expected == Classification::yes);
        }
    }

    bool solve() { return run(0); }
    std::uint64_t candidates() const { return candidates_; }

    OneWayDfa witness(const Alphabet& alphabet) const
    {
        std::vector<DfaTransition> tr;
        std::vector<State> accepting;
        for (State q = 0; q < used_; ++q) {
            for (std::size_t a = 0; a < sigma_; ++a) {
                const int e = table_[q * sigma_ + a];
                if (e >= 0) tr.push_back({q, alphabet[a], static_cast<State>(e)});
            }
            if (demand_[q] == 1) accepting.push_back(q);
        }
        return OneWayDfa(used_, alphabet, 0, std::move(tr), std::move(accepting));
    }

private:
    static constexpr int unassigned = -2;
    static constexpr int undefined = -1;

    bool run(std::size_t i) { return i == words_.size() || step(i, 0, 0); }

    bool step(std::size_t i, State q, std::size_t pos)
    {
        const auto& w = words_[i];
        while (pos < w.size()) {
            int& entry = table_[q * sigma_ + w[pos]];
            if (entry == unassigned) {
                const int options = static_cast<int>(std::min(used_ + 1, states_));
                for (int option = undefined; option < options; ++option) {
                    ++candidates_;
                    entry = option;
                    const bool fresh = option == static_cast<int>(used_);
                    if (fresh) ++used_;
                    if (step(i, q, pos)) return true;
                    if (fresh) --used_;
                }
                entry = unassigned;
                return false;
            }
            if (entry == undefined) return !yes_[i] && run(i + 1);
            q = static_cast<State>(entry);
            ++pos;
        }
        int& d = demand_[q];
        if (d == -1) {
            d = yes_[i];
            if (run(i + 1)) return true;
            d = -1;
            return false;
        }
        return d == static_cast<int>(yes_[i]) && run(i + 1);
    }

    std::size_t sigma_;
    std::size_t states_;
    std::size_t used_ = 1;
    std::vector<int> table_;
    std::vector<int> demand_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<bool> yes_;
    std::uint64_t candidates_ = 0;
};

}  // namespace

SearchResult min_dfa_size(const SearchSpec& spec)
{
    check_spec(spec);
    const auto instances = bounded_instances(spec);
    SearchResult result;
    result.instances = instances.size();
    for (std::size_t s = 1; s <= spec.max_states; ++s) {
        DfaSearch search(spec.problem.alphabet(), instances, s);
        const bool found = search.solve();
        result.candidates += search.candidates();
        if (!found) continue;
        auto witness = search.witness(spec.problem.alphabet());
        result.size = witness.state_count();
        validate(result, witness, spec);
        result.dfa_witness = std::move(witness);
        return result;
    }
    return result;
}

// ------------------------------------------------------------------ unary NFA

SearchResult min_unary_nfa_size(const SearchSpec& spec)
{
    check_spec(spec);
    const auto instances = bounded_instances(spec);
    SearchResult result;
    result.instances = instances.size();
    std::size_t longest = 0;
    for (const auto& inst : instances) longest = std::max(longest, inst.word.size());
    const char symbol = spec.problem.alphabet()[0];

    for (std::size_t s = 1; s <= spec.max_states; ++s) {
        const std::uint64_t relations = std::uint64_t{1} << (s * s);
        const std::uint32_t acc_sets = 1u << s;
        const unsigned jobs = std::max(1u, spec.jobs);
        constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
        // (relation, accepting set) of the first solver in enumeration order
        std::vector<std::pair<std::uint64_t, std::uint32_t>> best(jobs, {none, 0});

        auto worker = [&](unsigned id) {
            std::vector<std::uint32_t> reach(longest + 1);
            for (std::uint64_t rel = id; rel < relations && rel < best[id].first; rel += jobs) {
                reach[0] = 1;
                for (std::size_t j = 0; j < longest; ++j) {
                    std::uint32_t next = 0;
                    for (std::size_t q = 0; q < s; ++q)
                        if (reach[j] >> q & 1) next |= static_cast<std::uint32_t>(rel >> (q * s)) & (acc_sets - 1);
                    reach[j + 1] = next;
                }
                std::uint32_t forbidden = 0;
                for (const auto& inst : instances)
                    if (inst.expected == Classification::no) forbidden |= reach[inst.word.size()];
                for (std::uint32_t acc = 0; acc < acc_sets; ++acc) {
                    if (acc & forbidden) continue;
                    bool ok = true;
                    for (const auto& inst : instances)
                        if (inst.expected == Classification::yes && !(reach[inst.word.size()] & acc)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        best[id] = {rel, acc};
                        return;
                    }
                }
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
            for (auto& t : pool) t.join();
        }
        result.candidates += relations * acc_sets;
        const auto winner = *std::min_element(best.begin(), best.end());
        if (winner.first == none) continue;

        std::vector<NfaTransition> tr;
        std::vector<State> accepting;
        for (State q = 0; q < s; ++q) {
            for (State r = 0; r < s; ++r)
                if (winner.first >> (q * s + r) & 1) tr.push_back({q, symbol, r});
            if (winner.second >> q & 1) accepting.push_back(q);
        }
        OneWayNfa witness(s, spec.problem.alphabet(), 0, std::move(tr), std::move(accepting));
        result.size = s;
        validate(result, witness, spec);
        result.nfa_witness = std::move(witness);
        return result;
    }
    return result;
}

SearchResult min_size(const SearchSpec& spec)
{
    switch (spec.kind) {
    case MachineKind::unary_dfa: return min_unary_dfa_size(spec);
    case MachineKind::dfa: return min_dfa_size(spec);
    case MachineKind::unary_nfa: return min_unary_nfa_size(spec);
    }
    throw ParameterError("unknown machine kind");
}

// ------------------------------------------------------------------ pumping

namespace {

using Subset = std::vector<State>;

// Element `index` of the sequence x_0 = start, x_{i+1} = step(x_i), found
// through cycle detection so huge indices cost only the preperiod + period.
template <typename Step>
Subset iterate(Subset start, std::uint64_t index, Step step)
{
    std::map<Subset, std::uint64_t> seen;
    std::vector<Subset> seq;
    while (seq.size() <= index) {
        auto [it, fresh] = seen.emplace(start, seq.size());
        if (!fresh) {
            const std::uint64_t mu = it->second, lambda = seq.size() - mu;
            return seq[mu + (index - mu) % lambda];
        }
        seq.push_back(start);
        start = step(start);
    }
    return seq[index];
}

std::uint64_t factorial_u64(std::uint64_t m)
{
    if (m > 12) throw ParameterError("pumping_check requires m <= 12 so that m! fits");
    std::uint64_t f = 1;
    for (std::uint64_t i = 2; i <= m; ++i) f *= i;
    return f;
}

// Deterministic runs must end in the same state. For nondeterministic ones
// only the pumped direction holds: every endpoint of a^m stays reachable.
template <typename Step>
VerificationReport pumping_generic(std::size_t states, std::uint64_t m, const std::vector<std::uint64_t>& h_values,
                                   bool exact, Step step)
{
    if (m < states) throw ParameterError("pumping_check requires m >= number of states");
    const std::uint64_t mf = factorial_u64(m);
    std::size_t checked = 0;
    for (State q = 0; q < states; ++q) {
        const Subset base = iterate({q}, m, step);
        for (std::uint64_t h : h_values) {
            if (h < 1) throw ParameterError("pumping_check requires h >= 1");
            if (h > (std::numeric_limits<std::uint64_t>::max() - m) / mf)
                throw ParameterError("pumping_check: m + h m! overflows");
            const std::uint64_t length = m + h * mf;
            ++checked;
            const Subset pumped = iterate({q}, length, step);
            const bool holds = exact ? pumped == base : std::includes(pumped.begin(), pumped.end(), base.begin(), base.end());
            if (!holds)
                return VerificationReport::fails({"a^" + std::to_string(length),
                                                  (exact ? "same states as a^" : "superset of the states of a^") +
                                                      std::to_string(m) + " from " + std::to_string(q),
                                                  "state missing"})
                    .measure("checked", checked);
        }
    }
    return VerificationReport::solves().measure("checked", checked).measure("m", static_cast<std::size_t>(m));
}

}  // namespace

VerificationReport pumping_check(const OneWayDfa& machine, std::uint64_t m, const std::vector<std::uint64_t>& h_values)
{
    if (machine.alphabet().size() != 1) throw ParameterError("pumping_check requires a unary machine");
    return pumping_generic(machine.state_count(), m, h_values, true, [&](const Subset& s) {
        Subset next;
        for (State q : s)
            if (auto r = machine.next(q, std::size_t{0})) next.push_back(*r);
        return next;
    });
}

VerificationReport pumping_check(const OneWayNfa& machine, std::uint64_t m, const std::vector<std::uint64_t>& h_values)
{
    if (machine.alphabet().size() != 1) throw ParameterError("pumping_check requires a unary machine");
    return pumping_generic(machine.state_count(), m, h_values, false, [&](const Subset& s) {
        Subset next;
        for (State q : s)
            for (State r : machine.successors(q, 0)) next.push_back(r);
        return epsilon_closure(machine, std::move(next));
    });
}

VerificationReport expeq_pumping_check(const OneWayDfa& input, const std::vector<std::uint64_t>& repetitions)
{
    if (!(input.alphabet() == Alphabet{'a', 'b'}))
        throw ParameterError("expeq_pumping_check requires the alphabet {a, b}");
    const OneWayDfa dfa = dfa_complete(input);
    const std::uint64_t n = dfa.state_count();
    const std::uint64_t nf = factorial_u64(n);

    auto run = [&](State q, std::size_t symbol, std::uint64_t count) {
        return iterate({q}, count, [&](const Subset& s) { return Subset{*dfa.next(s[0], symbol)}; })[0];
    };
    auto final_state = [&](std::uint64_t x, std::uint64_t y, std::uint64_t reps) {
        State q = dfa.initial();
        for (std::uint64_t i = 0; i < reps; ++i) q = run(run(q, 0, x), 1, y);
        return q;
    };
    auto word = [](std::uint64_t x, std::uint64_t y, std::uint64_t reps) {
        return "(a^" + std::to_string(x) + " b^" + std::to_string(y) + ")^" + std::to_string(reps);
    };
    for (std::uint64_t reps : repetitions) {
        const State base = final_state(n, n, reps);
        if (final_state(n + nf, n + nf, reps) != base)
            return VerificationReport::fails({word(n + nf, n + nf, reps), "final state of " + word(n, n, reps),
                                              "different final state"});
        if (final_state(n, n + 2 * nf, reps) != base)
            return VerificationReport::fails({word(n, n + 2 * nf, reps), "final state of " + word(n, n, reps),
                                              "different final state"});
    }
    return VerificationReport::solves()
        .measure("n", static_cast<std::size_t>(n))
        .measure("repetitions", repetitions.size());
}

}  // namespace automata
