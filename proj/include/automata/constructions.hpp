#pragma once

// Concrete promise problems and the machines solving them. State labels
// follow the naming of the original constructions ("3_1,allone", "s_ini",
// "t_2,0", ...) so that transition lists can be audited by eye.

#include "automata/caps.hpp"
#include "automata/machines.hpp"
#include "automata/promise.hpp"

#include <cstdint>
#include <functional>

namespace automata {

// ------------------------------------------------------------------ EvenOdd

struct EvenOddParams {
    unsigned k;
};

/// yes: a^{m 2^k} with m even; no: m odd. The empty word is a yes-instance.
PromiseProblem evenodd_problem(EvenOddParams params);

/// Cyclic counter modulo 2^{k+1}; accepting iff the counter is 0.
OneWayDfa evenodd_dfa(EvenOddParams params, const Caps& caps = {});

/// Realtime alternating machine with 7k+2 states; each process tracks a
/// single bit of the number of symbols still to be read.
OneWayAfa evenodd_afa_rt(EvenOddParams params);

/// Epsilon-free alternating machine with 11k-14 states (k >= 3), obtained
/// from evenodd_afa_rt(k-2) by padding every post-read epsilon chain to
/// length three and then reading a symbol on every former epsilon move.
OneWayAfa evenodd_afa_epsfree(EvenOddParams params);

// ------------------------------------------------------------------ TRIOS

struct TriosParams {
    unsigned n;  // block bit-width
    unsigned r;  // segment count
};

/// Segments #xxy (yes, some bit x_j < y_j) or #xyx (no, some bit x_j > y_j).
PromiseProblem trios_problem(TriosParams params, const Caps& caps = {});

/// Selection probabilities p_1..p_n of the Las Vegas machine; p_n is 1.
std::vector<Rational> trios_ladder(unsigned n);

/// Las Vegas machine with 4n+3 states. The segment count does not affect it.
LasVegasPfa trios_lasvegas_pfa(unsigned n);
LasVegasPfa trios_lasvegas_pfa(TriosParams params);

/// One-way DFA: memorizes x in a binary trie, checks u against the
/// remaining suffix of x, then counts the n bits of v while looking for a
/// 1-bit. One block of states serves every segment.
OneWayDfa trios_dfa(TriosParams params, const Caps& caps = {});

/// Exact state count of trios_dfa: 3 * 2^n + 2n - 2, at most 4 * 2^n.
std::size_t trios_dfa_state_count(unsigned n);

/// Deterministic two-way machine with 8n - 1 states (9 for n = 1) that
/// verifies u = x by measured shuttling and then searches for u_j < v_j.
TwoWayMachine trios_twoway_dfa(TriosParams params);

/// Linear-size guarantee asserted for trios_twoway_dfa.
constexpr std::size_t trios_twoway_state_limit(unsigned n) { return 12 * std::size_t{n} + 8; }

// ------------------------------------------------------------------ UP(p)

/// yes: a^j with p^j >= 3/4; no: a^j with p^j <= 1/4.
PromiseProblem up_problem(const Rational& p);

/// Two-state machine staying in s_ini with probability p per symbol.
OneWayPfa up_pfa(const Rational& p);

struct CriticalLengths {
    std::uint64_t accept_limit;  // largest j with p^j >= 3/4
    std::uint64_t reject_start;  // smallest j with p^j <= 1/4
    bool operator==(const CriticalLengths&) const = default;
};

CriticalLengths critical_lengths(const Rational& p, const Caps& caps = {});

/// Chain of accept_limit + 1 accepting states; the last transition is left
/// undefined so every longer input is rejected.
OneWayDfa up_dfa(const Rational& p, const Caps& caps = {});

// ------------------------------------------------------------------ parity

/// yes: a^{2n}, no: a^{2n+1}, for every n with member(n).
PromiseProblem parity_problem(std::function<bool(std::size_t)> member, std::string name = "parity");

/// Two states swapping on every symbol; the initial one accepts.
OneWayDfa parity_dfa();

}  // namespace automata
