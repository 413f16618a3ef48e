#pragma once

// Finite-state acceptors in the four nonprobabilistic semantics plus the
// stochastic ones. Every machine is validated on construction and immutable
// afterwards; simulators are free functions in simulate.hpp.

#include "automata/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace automata {

using State = std::uint32_t;

/// Sorted set of single-character input symbols.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<char> symbols);
    explicit Alphabet(std::vector<char> symbols);
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::vector<char>& symbols() const { return symbols_; }
    std::optional<std::size_t> index_of(char symbol) const;
    bool contains(char symbol) const { return index_of(symbol).has_value(); }
    char operator[](std::size_t i) const { return symbols_[i]; }

    /// Symbol index of every character of `word`; InputDomainError otherwise.
    std::vector<std::size_t> encode(std::string_view word) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<char> symbols_;
};

struct DfaTransition {
    State from;
    char symbol;
    State to;
    auto operator<=>(const DfaTransition&) const = default;
};

/// One-way deterministic automaton with a partial transition function.
class OneWayDfa {
public:
    OneWayDfa(std::size_t state_count, Alphabet alphabet, State initial,
              std::vector<DfaTransition> transitions, std::vector<State> accepting,
              std::vector<std::string> labels = {});

    std::size_t state_count() const { return accepting_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }
    bool is_accepting(State q) const { return accepting_[q]; }
    std::optional<State> next(State q, std::size_t symbol_index) const;
    std::optional<State> next(State q, char symbol) const;
    const std::string& label(State q) const { return labels_[q]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<DfaTransition> transitions() const;
    std::vector<State> accepting_states() const;
    std::size_t transition_count() const;

    bool operator==(const OneWayDfa&) const = default;

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<bool> accepting_;
    std::vector<std::optional<State>> table_;  // [state * |alphabet| + symbol]
    std::vector<std::string> labels_;
};

/// Symbol of an NFA/AFA transition; std::nullopt stands for epsilon.
using MaybeSymbol = std::optional<char>;

struct NfaTransition {
    State from;
    MaybeSymbol symbol;
    State to;
    auto operator<=>(const NfaTransition&) const = default;
};

/// One-way nondeterministic automaton with epsilon moves.
class OneWayNfa {
public:
    OneWayNfa(std::size_t state_count, Alphabet alphabet, State initial,
              std::vector<NfaTransition> transitions, std::vector<State> accepting,
              std::vector<std::string> labels = {});

    std::size_t state_count() const { return accepting_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }
    bool is_accepting(State q) const { return accepting_[q]; }
    const std::vector<State>& successors(State q, std::size_t symbol_index) const;
    const std::vector<State>& epsilon_successors(State q) const;
    const std::string& label(State q) const { return labels_[q]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<NfaTransition>& transitions() const { return transitions_; }
    std::vector<State> accepting_states() const;
    bool has_epsilon() const;

    bool operator==(const OneWayNfa& other) const;

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<bool> accepting_;
    std::vector<NfaTransition> transitions_;  // sorted, unique
    std::vector<std::vector<State>> adjacency_;  // [state * (|alphabet|+1) + symbol], epsilon last
    std::vector<std::string> labels_;
};

/// One-way alternating automaton. States are existential or universal;
/// outgoing transitions of a state are either all epsilon or all symbol
/// labelled, and the epsilon subgraph is acyclic with bounded chains.
class OneWayAfa {
public:
    OneWayAfa(std::size_t state_count, Alphabet alphabet, State initial,
              std::vector<NfaTransition> transitions, std::vector<State> accepting,
              std::vector<State> existential, std::size_t epsilon_chain_bound,
              std::vector<std::string> labels = {});

    std::size_t state_count() const { return accepting_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }
    bool is_accepting(State q) const { return accepting_[q]; }
    bool is_existential(State q) const { return existential_[q]; }
    std::size_t epsilon_chain_bound() const { return chain_bound_; }
    /// Longest epsilon chain actually present.
    std::size_t longest_epsilon_chain() const { return longest_chain_; }
    const std::vector<State>& successors(State q, std::size_t symbol_index) const;
    const std::vector<State>& epsilon_successors(State q) const;
    bool has_epsilon_moves(State q) const { return !epsilon_successors(q).empty(); }
    /// States ordered so that every epsilon target precedes its source.
    const std::vector<State>& epsilon_order() const { return epsilon_order_; }
    const std::string& label(State q) const { return labels_[q]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<NfaTransition>& transitions() const { return transitions_; }
    std::vector<State> accepting_states() const;
    std::vector<State> existential_states() const;

    /// The same transition relation read as an NFA.
    OneWayNfa as_nfa() const;

    bool operator==(const OneWayAfa& other) const;

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<bool> accepting_;
    std::vector<bool> existential_;
    std::size_t chain_bound_;
    std::size_t longest_chain_ = 0;
    std::vector<NfaTransition> transitions_;
    std::vector<std::vector<State>> adjacency_;
    std::vector<State> epsilon_order_;
    std::vector<std::string> labels_;
};

enum class TapeKind : std::uint8_t { symbol, left_end, right_end };

struct TapeSymbol {
    TapeKind kind = TapeKind::symbol;
    char symbol = 0;

    static TapeSymbol left_end() { return {TapeKind::left_end, 0}; }
    static TapeSymbol right_end() { return {TapeKind::right_end, 0}; }
    static TapeSymbol of(char c) { return {TapeKind::symbol, c}; }
    auto operator<=>(const TapeSymbol&) const = default;
};

enum class HeadMove : std::int8_t { left = -1, stay = 0, right = 1 };

struct TwoWayTransition {
    State from;
    TapeSymbol read;
    State to;
    HeadMove move;
    auto operator<=>(const TwoWayTransition&) const = default;
};

/// Two-way automaton over a tape |- w -|. Accepts by halting (no executable
/// transition) in an accepting state anywhere on the tape.
class TwoWayMachine {
public:
    TwoWayMachine(std::size_t state_count, Alphabet alphabet, State initial,
                  std::vector<TwoWayTransition> transitions, std::vector<State> accepting,
                  bool deterministic, std::vector<std::string> labels = {});

    std::size_t state_count() const { return accepting_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }
    bool is_accepting(State q) const { return accepting_[q]; }
    bool deterministic() const { return deterministic_; }
    /// Moves for (state, tape cell); tape index is the alphabet index,
    /// |alphabet| for |- and |alphabet|+1 for -|.
    const std::vector<std::pair<State, HeadMove>>& moves(State q, std::size_t tape_index) const;
    std::size_t left_end_index() const { return alphabet_.size(); }
    std::size_t right_end_index() const { return alphabet_.size() + 1; }
    const std::string& label(State q) const { return labels_[q]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<TwoWayTransition>& transitions() const { return transitions_; }
    std::vector<State> accepting_states() const;

    bool operator==(const TwoWayMachine& other) const;

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<bool> accepting_;
    bool deterministic_;
    std::vector<TwoWayTransition> transitions_;
    std::vector<std::vector<std::pair<State, HeadMove>>> adjacency_;
    std::vector<std::string> labels_;
};

enum class StateRole : std::uint8_t { accepting, rejecting, neutral };

struct PfaTransition {
    State from;
    char symbol;
    State to;
    Rational probability;
    bool operator==(const PfaTransition&) const = default;
};

/// Epsilon-free one-way probabilistic automaton with exact probabilities.
/// Every (state, symbol) row that has transitions sums to exactly 1; a row
/// without transitions halts the computation there.
class OneWayPfa {
public:
    struct Branch {
        State to;
        Rational probability;
        bool operator==(const Branch&) const = default;
    };

    OneWayPfa(std::size_t state_count, Alphabet alphabet, State initial,
              std::vector<PfaTransition> transitions, std::vector<StateRole> roles,
              std::vector<std::string> labels = {});

    std::size_t state_count() const { return roles_.size(); }
    const Alphabet& alphabet() const { return alphabet_; }
    State initial() const { return initial_; }
    StateRole role(State q) const { return roles_[q]; }
    const std::vector<StateRole>& roles() const { return roles_; }
    const std::vector<Branch>& row(State q, std::size_t symbol_index) const;
    const std::string& label(State q) const { return labels_[q]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<PfaTransition> transitions() const;

    bool operator==(const OneWayPfa&) const = default;

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<StateRole> roles_;
    std::vector<std::vector<Branch>> rows_;  // [state * |alphabet| + symbol]
    std::vector<std::string> labels_;
};

/// Las Vegas reading of a PFA: accepting and rejecting roles are decisive,
/// neutral states answer "don't know".
class LasVegasPfa : public OneWayPfa {
public:
    using OneWayPfa::OneWayPfa;
    explicit LasVegasPfa(OneWayPfa machine) : OneWayPfa(std::move(machine)) {}
};

/// Default labels "0", "1", ... for unlabelled machines.
std::vector<std::string> default_labels(std::size_t state_count);

}  // namespace automata
