#include "automata/conversions.hpp"

#include "automata/errors.hpp"
#include "automata/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace automata {

namespace {

std::string subset_label(const std::vector<State>& subset)
{
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

}  // namespace

OneWayDfa nfa_to_dfa(const OneWayNfa& nfa, const Caps& caps)
{
    const std::size_t sigma = nfa.alphabet().size();
    std::map<std::vector<State>, State> index;
    std::vector<std::vector<State>> subsets;
    std::vector<DfaTransition> transitions;

    auto intern = [&](std::vector<State> subset) {
        auto [it, inserted] = index.emplace(subset, static_cast<State>(subsets.size()));
        if (inserted) {
            if (subsets.size() >= caps.max_states)
                throw ResourceCapExceeded("nfa_to_dfa: more than " + std::to_string(caps.max_states) + " subsets");
            subsets.push_back(std::move(subset));
        }
        return it->second;
    };

    intern(epsilon_closure(nfa, {nfa.initial()}));
    for (std::size_t done = 0; done < subsets.size(); ++done) {
        for (std::size_t a = 0; a < sigma; ++a) {
            std::vector<State> next;
            for (State q : subsets[done])
                for (State r : nfa.successors(q, a)) next.push_back(r);
            if (next.empty()) continue;
            State to = intern(epsilon_closure(nfa, std::move(next)));
            transitions.push_back({static_cast<State>(done), nfa.alphabet()[a], to});
        }
    }

    std::vector<State> accepting;
    std::vector<std::string> labels;
    for (State s = 0; s < subsets.size(); ++s) {
        if (std::any_of(subsets[s].begin(), subsets[s].end(), [&](State q) { return nfa.is_accepting(q); }))
            accepting.push_back(s);
        labels.push_back(subset_label(subsets[s]));
    }
    return OneWayDfa(subsets.size(), nfa.alphabet(), 0, std::move(transitions), std::move(accepting),
                     std::move(labels));
}

OneWayNfa remove_epsilon(const OneWayNfa& nfa)
{
    const std::size_t sigma = nfa.alphabet().size();
    std::vector<NfaTransition> transitions;
    std::vector<State> accepting;
    for (State q = 0; q < nfa.state_count(); ++q) {
        const auto closure = epsilon_closure(nfa, {q});
        if (std::any_of(closure.begin(), closure.end(), [&](State p) { return nfa.is_accepting(p); }))
            accepting.push_back(q);
        for (std::size_t a = 0; a < sigma; ++a) {
            std::vector<State> reached;
            for (State p : closure)
                for (State r : nfa.successors(p, a)) reached.push_back(r);
            if (reached.empty()) continue;
            for (State r : epsilon_closure(nfa, std::move(reached)))
                transitions.push_back({q, nfa.alphabet()[a], r});
        }
    }
    return OneWayNfa(nfa.state_count(), nfa.alphabet(), nfa.initial(), std::move(transitions), std::move(accepting),
                     nfa.labels());
}

namespace {

// One backward step of the suffix evaluation: values with j+1 symbols left
// from the values with j symbols left (or the base case when `previous` is
// null).
std::vector<bool> afa_step(const OneWayAfa& afa, const std::vector<bool>* previous)
{
    std::vector<bool> here(afa.state_count(), false);
    auto combine = [&](State q, const std::vector<State>& targets, const std::vector<bool>& level) {
        if (afa.is_existential(q))
            return std::any_of(targets.begin(), targets.end(), [&](State r) { return level[r]; });
        return std::all_of(targets.begin(), targets.end(), [&](State r) { return level[r]; });
    };
    for (State q : afa.epsilon_order()) {
        if (afa.has_epsilon_moves(q))
            here[q] = combine(q, afa.epsilon_successors(q), here);
        else if (previous && !afa.successors(q, 0).empty())
            here[q] = combine(q, afa.successors(q, 0), *previous);
        else
            here[q] = !previous && afa.is_accepting(q);
    }
    return here;
}

std::vector<std::vector<bool>> afa_vectors(const OneWayAfa& afa, const Caps& caps)
{
    if (afa.alphabet().size() != 1) throw ParameterError("unary_afa_to_dfa requires a unary alphabet");
    std::vector<std::vector<bool>> seq;
    std::map<std::vector<bool>, std::size_t> seen;
    auto v = afa_step(afa, nullptr);
    while (seen.emplace(v, seq.size()).second) {
        if (seq.size() >= caps.max_states)
            throw ResourceCapExceeded("unary_afa_to_dfa: more than " + std::to_string(caps.max_states) + " vectors");
        seq.push_back(v);
        v = afa_step(afa, &seq.back());
    }
    seq.push_back(std::move(v));  // the repeated vector closes the lasso
    return seq;
}

}  // namespace

OneWayDfa unary_afa_to_dfa(const OneWayAfa& afa, const Caps& caps)
{
    auto seq = afa_vectors(afa, caps);
    const std::size_t count = seq.size() - 1;
    const State loop_to = static_cast<State>(std::find(seq.begin(), seq.end() - 1, seq.back()) - seq.begin());
    std::vector<DfaTransition> transitions;
    std::vector<State> accepting;
    std::vector<std::string> labels;
    const char a = afa.alphabet()[0];
    for (State s = 0; s < count; ++s) {
        transitions.push_back({s, a, s + 1 < count ? s + 1 : loop_to});
        if (seq[s][afa.initial()]) accepting.push_back(s);
        std::string label;
        for (bool bit : seq[s]) label += bit ? '1' : '0';
        labels.push_back(std::move(label));
    }
    return OneWayDfa(count, afa.alphabet(), 0, std::move(transitions), std::move(accepting), std::move(labels));
}

std::size_t unary_afa_vector_count(const OneWayAfa& afa, const Caps& caps)
{
    return afa_vectors(afa, caps).size() - 1;
}

OneWayDfa dfa_complete(const OneWayDfa& dfa)
{
    const std::size_t sigma = dfa.alphabet().size();
    auto transitions = dfa.transitions();
    if (transitions.size() == dfa.state_count() * sigma) return dfa;
    const State dead = static_cast<State>(dfa.state_count());
    for (State q = 0; q <= dead; ++q)
        for (std::size_t a = 0; a < sigma; ++a)
            if (q == dead || !dfa.next(q, a)) transitions.push_back({q, dfa.alphabet()[a], dead});
    auto labels = dfa.labels();
    labels.push_back("dead");
    return OneWayDfa(dfa.state_count() + 1, dfa.alphabet(), dfa.initial(), std::move(transitions),
                     dfa.accepting_states(), std::move(labels));
}

OneWayDfa dfa_minimize(const OneWayDfa& input)
{
    const OneWayDfa dfa = dfa_complete(input);
    const std::size_t sigma = dfa.alphabet().size();
    const std::size_t n = dfa.state_count();

    // reachable states only
    std::vector<bool> reachable(n, false);
    std::vector<State> order{dfa.initial()};
    reachable[dfa.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t a = 0; a < sigma; ++a) {
            State r = *dfa.next(order[i], a);
            if (!reachable[r]) {
                reachable[r] = true;
                order.push_back(r);
            }
        }

    // Moore refinement on signatures (class, class of each successor)
    std::vector<std::size_t> cls(n, 0);
    for (State q : order) cls[q] = dfa.is_accepting(q) ? 1 : 0;
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n, 0);
        for (State q : order) {
            std::vector<std::size_t> sig{cls[q]};
            for (std::size_t a = 0; a < sigma; ++a) sig.push_back(cls[*dfa.next(q, a)]);
            next[q] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        cls = std::move(next);
        if (ids.size() == classes) break;
        classes = ids.size();
    }

    // a class is dead when no accepting class is reachable from it
    std::vector<State> rep(classes, 0);
    std::vector<bool> has_rep(classes, false);
    for (State q : order)
        if (!has_rep[cls[q]]) {
            has_rep[cls[q]] = true;
            rep[cls[q]] = q;
        }
    std::vector<bool> live(classes, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t c = 0; c < classes; ++c) {
            if (live[c]) continue;
            bool l = dfa.is_accepting(rep[c]);
            for (std::size_t a = 0; a < sigma && !l; ++a) l = live[cls[*dfa.next(rep[c], a)]];
            if (l) live[c] = changed = true;
        }
    }

    // renumber live classes breadth-first from the initial class
    std::vector<State> number(classes, static_cast<State>(-1));
    std::vector<std::size_t> bfs;
    auto visit = [&](std::size_t c) {
        if (!live[c] || number[c] != static_cast<State>(-1)) return;
        number[c] = static_cast<State>(bfs.size());
        bfs.push_back(c);
    };
    visit(cls[dfa.initial()]);
    std::vector<DfaTransition> transitions;
    std::vector<State> accepting;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        const State q = rep[bfs[i]];
        if (dfa.is_accepting(q)) accepting.push_back(static_cast<State>(i));
        for (std::size_t a = 0; a < sigma; ++a) {
            const std::size_t c = cls[*dfa.next(q, a)];
            visit(c);
            if (live[c]) transitions.push_back({static_cast<State>(i), dfa.alphabet()[a], number[c]});
        }
    }
    if (bfs.empty()) {
        // empty language: a single rejecting state with no transitions
        return OneWayDfa(1, dfa.alphabet(), 0, {}, {});
    }
    return OneWayDfa(bfs.size(), dfa.alphabet(), 0, std::move(transitions), std::move(accepting));
}

bool dfa_equivalent(const OneWayDfa& a, const OneWayDfa& b)
{
    if (!(a.alphabet() == b.alphabet())) return false;
    const std::size_t sigma = a.alphabet().size();
    using Side = std::optional<State>;  // nullopt: stuck, i.e. the dead sink
    std::map<std::pair<Side, Side>, bool> seen;
    std::deque<std::pair<Side, Side>> queue{{a.initial(), b.initial()}};
    seen[queue.front()] = true;
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        const bool pa = p && a.is_accepting(*p);
        const bool qa = q && b.is_accepting(*q);
        if (pa != qa) return false;
        for (std::size_t s = 0; s < sigma; ++s) {
            std::pair<Side, Side> next{p ? a.next(*p, s) : std::nullopt, q ? b.next(*q, s) : std::nullopt};
            if (!next.first && !next.second) continue;
            if (seen.emplace(next, true).second) queue.push_back(next);
        }
    }
    return true;
}

// ------------------------------------------------------------------ bounds

BoundValue bound_afa_to_dfa(std::uint64_t n)
{
    if (n < 1) throw ParameterError("bound_afa_to_dfa requires n >= 1");
    if (n > 20) throw ResourceCapExceeded("bound_afa_to_dfa: 2^(n 2^n) too large to materialize for n > 20");
    BoundValue b{"afa_to_dfa", n, pow(BigNatural(2), n << n), true,
                 "2^(" + std::to_string(n) + "*2^" + std::to_string(n) + ")", 0};
    b.approximate = std::ldexp(1.0, static_cast<int>(std::min<std::uint64_t>(n << n, 2000)));
    return b;
}

BoundValue bound_2nfa_to_dfa(std::uint64_t n)
{
    if (n < 1) throw ParameterError("bound_2nfa_to_dfa requires n >= 1");
    if (n > 512) throw ResourceCapExceeded("bound_2nfa_to_dfa: n > 512");
    BigNatural total = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const BigNatural base = pow(BigNatural(2), i) - 1;
        for (std::uint64_t j = 0; j < n; ++j)
            total += binomial(n, i) * binomial(n, j) * pow(base, j);  // mpz gives 0^0 = 1
    }
    BoundValue b{"2nfa_to_dfa", n, total, true, "sum_{i,j<" + std::to_string(n) + "} C(n,i)C(n,j)(2^i-1)^j", 0};
    b.approximate = total.get_d();
    return b;
}

BoundValue bound_svfa_to_dfa(std::uint64_t n)
{
    if (n < 1) throw ParameterError("bound_svfa_to_dfa requires n >= 1");
    if (n > 100000) throw ResourceCapExceeded("bound_svfa_to_dfa: n > 100000");
    // 3^((n-1)/3) = cube root of 3^(n-1)
    const BigNatural cube = pow(BigNatural(3), n - 1);
    BigNatural root;
    const bool exact = mpz_root(root.get_mpz_t(), cube.get_mpz_t(), 3) != 0;
    if (!exact) root += 1;
    BoundValue b{"svfa_to_dfa", n, root + 1, exact, "", 0};
    b.expression = (n - 1) % 3 == 0 ? "1+3^" + std::to_string((n - 1) / 3)
                                    : "1+3^(" + std::to_string(n - 1) + "/3)";
    b.approximate = 1 + std::pow(3.0, static_cast<double>(n - 1) / 3.0);
    return b;
}

BoundValue evaluate_bound(const std::string& formula, std::uint64_t n)
{
    if (formula == "afa_to_dfa" || formula == "afa-to-dfa") return bound_afa_to_dfa(n);
    if (formula == "2nfa_to_dfa" || formula == "2nfa-to-dfa") return bound_2nfa_to_dfa(n);
    if (formula == "svfa_to_dfa" || formula == "svfa-to-dfa") return bound_svfa_to_dfa(n);
    throw ParameterError("unknown bound formula '" + formula + "'");
}

}  // namespace automata
