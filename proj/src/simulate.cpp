#include "automata/simulate.hpp"

#include <algorithm>
#include <deque>

namespace automata {

DfaRunResult dfa_run(const OneWayDfa& dfa, std::string_view word)
{
    const auto symbols = dfa.alphabet().encode(word);
    State q = dfa.initial();
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        auto next = dfa.next(q, symbols[i]);
        if (!next) return {DfaRunResult::Kind::stuck, i};
        q = *next;
    }
    return {dfa.is_accepting(q) ? DfaRunResult::Kind::accept : DfaRunResult::Kind::reject, symbols.size()};
}

std::optional<State> dfa_state_after(const OneWayDfa& dfa, State from, std::string_view word)
{
    std::optional<State> q = from;
    for (std::size_t a : dfa.alphabet().encode(word)) {
        q = dfa.next(*q, a);
        if (!q) break;
    }
    return q;
}

std::vector<State> epsilon_closure(const OneWayNfa& nfa, std::vector<State> states)
{
    std::vector<bool> seen(nfa.state_count(), false);
    std::vector<State> stack;
    for (State q : states)
        if (!seen[q]) {
            seen[q] = true;
            stack.push_back(q);
        }
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State r : nfa.epsilon_successors(q))
            if (!seen[r]) {
                seen[r] = true;
                stack.push_back(r);
            }
    }
    std::vector<State> out;
    for (State q = 0; q < seen.size(); ++q)
        if (seen[q]) out.push_back(q);
    return out;
}

bool nfa_accepts(const OneWayNfa& nfa, std::string_view word)
{
    const auto symbols = nfa.alphabet().encode(word);
    auto current = epsilon_closure(nfa, {nfa.initial()});
    for (std::size_t a : symbols) {
        std::vector<State> next;
        for (State q : current) {
            const auto& succ = nfa.successors(q, a);
            next.insert(next.end(), succ.begin(), succ.end());
        }
        if (next.empty()) return false;
        current = epsilon_closure(nfa, std::move(next));
    }
    return std::any_of(current.begin(), current.end(), [&](State q) { return nfa.is_accepting(q); });
}

bool twoway_accepts(const TwoWayMachine& machine, std::string_view word)
{
    const auto symbols = machine.alphabet().encode(word);
    const std::size_t cells = symbols.size() + 2;
    auto tape_index = [&](std::size_t pos) {
        if (pos == 0) return machine.left_end_index();
        if (pos == cells - 1) return machine.right_end_index();
        return symbols[pos - 1];
    };

    std::vector<bool> seen(machine.state_count() * cells, false);
    std::deque<std::pair<State, std::size_t>> frontier;
    auto push = [&](State q, std::size_t pos) {
        auto key = static_cast<std::size_t>(q) * cells + pos;
        if (!seen[key]) {
            seen[key] = true;
            frontier.emplace_back(q, pos);
        }
    };
    push(machine.initial(), 0);
    while (!frontier.empty()) {
        auto [q, pos] = frontier.front();
        frontier.pop_front();
        const auto& moves = machine.moves(q, tape_index(pos));
        if (moves.empty()) {
            if (machine.is_accepting(q)) return true;
            continue;
        }
        for (auto [to, move] : moves)
            push(to, static_cast<std::size_t>(static_cast<std::ptrdiff_t>(pos) + static_cast<int>(move)));
    }
    return false;
}

std::vector<std::vector<bool>> afa_suffix_values(const OneWayAfa& afa, std::string_view word)
{
    const auto symbols = afa.alphabet().encode(word);
    const std::size_t n = symbols.size();
    std::vector<std::vector<bool>> value(n + 1, std::vector<bool>(afa.state_count(), false));

    auto combine = [&](State q, const std::vector<State>& targets, const std::vector<bool>& level) {
        if (afa.is_existential(q))
            return std::any_of(targets.begin(), targets.end(), [&](State r) { return level[r]; });
        return std::all_of(targets.begin(), targets.end(), [&](State r) { return level[r]; });
    };

    for (std::size_t pos = n + 1; pos-- > 0;) {
        auto& here = value[pos];
        for (State q : afa.epsilon_order()) {
            if (afa.has_epsilon_moves(q)) {
                here[q] = combine(q, afa.epsilon_successors(q), here);
            } else if (pos < n && !afa.successors(q, symbols[pos]).empty()) {
                here[q] = combine(q, afa.successors(q, symbols[pos]), value[pos + 1]);
            } else {
                here[q] = pos == n && afa.is_accepting(q);
            }
        }
    }
    return value;
}

bool afa_accepts(const OneWayAfa& afa, std::string_view word)
{
    return afa_suffix_values(afa, word)[0][afa.initial()];
}

}  // namespace automata
