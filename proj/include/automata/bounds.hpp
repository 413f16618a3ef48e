#pragma once

// Exhaustive minimal-size search over small machines and the pumping
// checks behind the unary lower-bound arguments. Minimality is always
// relative to the instances of length <= max_length and to the state cap.

#include "automata/machines.hpp"
#include "automata/promise.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace automata {

enum class MachineKind { unary_dfa, dfa, unary_nfa };

std::string to_string(MachineKind kind);
MachineKind parse_machine_kind(const std::string& text);

/// Feasibility caps on the search space.
std::size_t max_search_states(MachineKind kind);

struct SearchSpec {
    MachineKind kind;
    std::size_t max_states;
    PromiseProblem problem;
    std::size_t max_length;
    unsigned jobs = 1;
};

struct SearchResult {
    /// Smallest solving size, or nullopt when none exists within max_states.
    std::optional<std::size_t> size;
    std::optional<OneWayDfa> dfa_witness;
    std::optional<OneWayNfa> nfa_witness;
    std::uint64_t candidates = 0;  // candidate machines examined
    std::size_t instances = 0;
    /// promise_check of the witness on the same instance set.
    std::optional<VerificationReport> validation;
};

/// Lasso-form enumeration: tail plus cycle (or a chain whose last
/// transition is undefined), initial state first.
SearchResult min_unary_dfa_size(const SearchSpec& spec);

/// Depth-first search over partial transition tables, assigning an entry
/// only when some instance reads it. States are numbered in order of first
/// use, which removes relabelled duplicates.
SearchResult min_dfa_size(const SearchSpec& spec);

/// Enumerates epsilon-free relations and accepting sets with initial state
/// 0. Epsilon moves can be removed without adding states, so this covers
/// every unary NFA of the given size.
SearchResult min_unary_nfa_size(const SearchSpec& spec);

SearchResult min_size(const SearchSpec& spec);

/// From every start state, checks that a^(m + h m!) reaches the same state
/// as a^m (DFA) or a superset of its reachable states (NFA), for every h.
VerificationReport pumping_check(const OneWayDfa& machine, std::uint64_t m, const std::vector<std::uint64_t>& h_values);
VerificationReport pumping_check(const OneWayNfa& machine, std::uint64_t m, const std::vector<std::uint64_t>& h_values);

/// For a DFA over {a, b} with n states (after completion), checks that the
/// final states on (a^n b^n)^T, (a^(n+n!) b^(n+n!))^T and (a^n b^(n+2n!))^T
/// coincide for every T in `repetitions`.
VerificationReport expeq_pumping_check(const OneWayDfa& machine, const std::vector<std::uint64_t>& repetitions);

}  // namespace automata
