#pragma once

#include "automata/caps.hpp"
#include "automata/machines.hpp"
#include "automata/numeric.hpp"

#include <cstdint>
#include <string>

namespace automata {

/// Subset construction over reachable epsilon-closed subsets. The empty
/// subset is not materialized; it becomes an undefined transition.
OneWayDfa nfa_to_dfa(const OneWayNfa& nfa, const Caps& caps = {});

/// Closure-based epsilon elimination; keeps the state set unchanged.
OneWayNfa remove_epsilon(const OneWayNfa& nfa);

/// DFA over the valuation vectors v_j(q) = [afa accepts a^j from q],
/// restricted to the vectors reachable from v_0.
OneWayDfa unary_afa_to_dfa(const OneWayAfa& afa, const Caps& caps = {});

/// Number of distinct valuation vectors visited by unary_afa_to_dfa.
std::size_t unary_afa_vector_count(const OneWayAfa& afa, const Caps& caps = {});

/// Adds an absorbing rejecting state for undefined transitions (when any).
OneWayDfa dfa_complete(const OneWayDfa& dfa);

/// Minimal DFA for the language, with states numbered in breadth-first
/// order from the initial state. The dead class, when present, is removed
/// and its transitions left undefined, so the result is partial.
OneWayDfa dfa_minimize(const OneWayDfa& dfa);

/// Language equality by breadth-first search over the product.
bool dfa_equivalent(const OneWayDfa& a, const OneWayDfa& b);

struct BoundValue {
    std::string formula;
    std::uint64_t n = 0;
    /// The bound itself when exact, otherwise its ceiling.
    BigNatural value;
    bool exact = true;
    /// Closed form of the bound, e.g. "1+3^(5/3)".
    std::string expression;
    double approximate = 0;
};

/// 2^(n * 2^n).
BoundValue bound_afa_to_dfa(std::uint64_t n);
/// sum_{i,j < n} C(n,i) C(n,j) (2^i - 1)^j with 0^0 = 1.
BoundValue bound_2nfa_to_dfa(std::uint64_t n);
/// 1 + 3^((n-1)/3); exact iff 3 divides n-1.
BoundValue bound_svfa_to_dfa(std::uint64_t n);

BoundValue evaluate_bound(const std::string& formula, std::uint64_t n);

}  // namespace automata
