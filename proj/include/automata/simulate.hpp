#pragma once

#include "automata/machines.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace automata {

struct DfaRunResult {
    enum class Kind { accept, reject, stuck };
    Kind kind;
    std::size_t position = 0;  // offset of the undefined transition when stuck

    bool accepted() const { return kind == Kind::accept; }
    bool operator==(const DfaRunResult&) const = default;
};

/// Runs the unique computation; an undefined transition stops it early.
DfaRunResult dfa_run(const OneWayDfa& dfa, std::string_view word);

/// State reached on `word` from `from`, or nullopt once a transition is
/// undefined.
std::optional<State> dfa_state_after(const OneWayDfa& dfa, State from, std::string_view word);

/// Epsilon closure of a set of states (sorted, unique).
std::vector<State> epsilon_closure(const OneWayNfa& nfa, std::vector<State> states);

bool nfa_accepts(const OneWayNfa& nfa, std::string_view word);

/// Configuration-graph reachability over (state, head position).
bool twoway_accepts(const TwoWayMachine& machine, std::string_view word);

/// Values of every state on every suffix: result[pos][q] is true iff the
/// machine started in q at offset `pos` accepts the rest of `word`.
std::vector<std::vector<bool>> afa_suffix_values(const OneWayAfa& afa, std::string_view word);

bool afa_accepts(const OneWayAfa& afa, std::string_view word);

inline bool accepts(const OneWayDfa& m, std::string_view w) { return dfa_run(m, w).accepted(); }
inline bool accepts(const OneWayNfa& m, std::string_view w) { return nfa_accepts(m, w); }
inline bool accepts(const TwoWayMachine& m, std::string_view w) { return twoway_accepts(m, w); }
inline bool accepts(const OneWayAfa& m, std::string_view w) { return afa_accepts(m, w); }

}  // namespace automata
