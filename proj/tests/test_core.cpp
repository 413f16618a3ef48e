#include "automata/caps.hpp"
#include "automata/constructions.hpp"
#include "automata/errors.hpp"
#include "automata/numeric.hpp"
#include "automata/promise.hpp"
#include "automata/simulate.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

using namespace automata;

namespace {

OneWayNfa even_length_nfa()
{
    return OneWayNfa(2, Alphabet{'a'}, 0, {{0, 'a', 1}, {1, 'a', 0}}, {0});
}

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("rationals print in lowest terms and parse back")
{
    CHECK(to_string(Rational(2, 4)) == "1/2");
    CHECK(to_string(Rational(3)) == "3/1");
    CHECK(parse_rational("6/8") == Rational(3, 4));
    CHECK(parse_rational("0.9") == Rational(9, 10));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK_THROWS_AS(parse_rational("x"), FormatError);
    CHECK(parse_natural("123456789012345678901234567890") == BigNatural("123456789012345678901234567890"));
}

TEST_CASE("binomials and factorials against Pascal's rule")
{
    for (std::uint64_t n = 1; n < 30; ++n)
        for (std::uint64_t k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    BigNatural f = 1;
    for (std::uint64_t n = 1; n < 25; ++n) {
        f *= static_cast<unsigned long>(n);
        CHECK(factorial(n) == f);
    }
}

TEST_CASE("enclosure of e brackets the double value")
{
    const auto e = euler_enclosure();
    CHECK(e.lo < e.hi);
    CHECK(to_double(e.lo) <= 2.718281828459045);
    CHECK(to_double(e.hi) >= 2.718281828459045);
    CHECK(e.hi - e.lo < Rational(1, 1000000000));
}

TEST_CASE("ceil_ln agrees with floating point away from the boundary")
{
    CHECK(ceil_ln(1) == 0);
    CHECK(ceil_ln(2) == 1);
    CHECK(ceil_ln(3) == 2);
    CHECK(ceil_ln(7) == 2);   // e^2 = 7.389
    CHECK(ceil_ln(8) == 3);
    CHECK(ceil_ln(20) == 3);  // e^3 = 20.09
    CHECK(ceil_ln(21) == 4);
    for (std::uint64_t c = 3; c < 2000; ++c) {
        const double l = std::log(static_cast<double>(c));
        if (std::abs(l - std::round(l)) > 1e-9) CHECK(ceil_ln(c) == static_cast<std::uint64_t>(std::ceil(l)));
    }
}

TEST_CASE("pow_enclosure contains the exact power")
{
    for (auto [base, exp] : std::vector<std::pair<Rational, unsigned>>{
             {Rational(1, 2), 10}, {Rational(970, 972), 1944}, {Rational(1), 5}, {Rational(0), 3}, {Rational(2, 3), 0}}) {
        const auto enc = pow_enclosure(base, BigNatural(exp), 256);
        const Rational exact = pow(base, exp);
        CHECK(enc.contains(exact));
        CHECK(enc.hi - enc.lo < Rational(1, 1000000));
    }
}

}  // TEST_SUITE numeric

TEST_SUITE("machines") {

TEST_CASE("dfa_run: evenodd_dfa(1) on aaaa and aa")
{
    const auto dfa = evenodd_dfa({1});
    CHECK(dfa_run(dfa, "aaaa").kind == DfaRunResult::Kind::accept);
    CHECK(dfa_run(dfa, "aa").kind == DfaRunResult::Kind::reject);
}

TEST_CASE("dfa_run: stuck on an undefined transition")
{
    const OneWayDfa dfa(1, Alphabet{'a'}, 0, {}, {0});
    CHECK(dfa_run(dfa, "a") == DfaRunResult{DfaRunResult::Kind::stuck, 0});
    CHECK(dfa_run(dfa, "").accepted());
    CHECK_THROWS_AS(dfa_run(dfa, "b"), InputDomainError);
}

TEST_CASE("constructor validation")
{
    CHECK_THROWS_AS(OneWayDfa(2, Alphabet{'a'}, 2, {}, {}), ParameterError);
    CHECK_THROWS_AS(OneWayDfa(2, Alphabet{'a'}, 0, {{0, 'a', 5}}, {}), ParameterError);
    CHECK_THROWS_AS(OneWayDfa(2, Alphabet{'a'}, 0, {{0, 'a', 1}, {0, 'a', 0}}, {}), ParameterError);
    CHECK_THROWS_AS(OneWayDfa(2, Alphabet{'a'}, 0, {{0, 'b', 1}}, {}), ParameterError);
    CHECK_THROWS_AS(OneWayDfa(1, Alphabet{'a'}, 0, {}, {3}), ParameterError);
    // mixing epsilon and symbol moves
    CHECK_THROWS_AS(OneWayAfa(2, Alphabet{'a'}, 0, {{0, std::nullopt, 1}, {0, 'a', 1}}, {}, {}, 3), ParameterError);
    // epsilon cycle
    CHECK_THROWS_AS(OneWayAfa(2, Alphabet{'a'}, 0, {{0, std::nullopt, 1}, {1, std::nullopt, 0}}, {}, {}, 3),
                    ParameterError);
    // chain longer than declared
    CHECK_THROWS_AS(OneWayAfa(3, Alphabet{'a'}, 0, {{0, std::nullopt, 1}, {1, std::nullopt, 2}}, {}, {}, 1),
                    ParameterError);
    // endmarker escapes
    CHECK_THROWS_AS(TwoWayMachine(1, Alphabet{'a'}, 0, {{0, TapeSymbol::left_end(), 0, HeadMove::left}}, {}, false),
                    ParameterError);
    CHECK_THROWS_AS(TwoWayMachine(1, Alphabet{'a'}, 0, {{0, TapeSymbol::right_end(), 0, HeadMove::right}}, {}, false),
                    ParameterError);
    CHECK_THROWS_AS(TwoWayMachine(2, Alphabet{'a'}, 0,
                                  {{0, TapeSymbol::of('a'), 0, HeadMove::right}, {0, TapeSymbol::of('a'), 1, HeadMove::right}},
                                  {}, true),
                    ParameterError);
}

TEST_CASE("pfa rows must sum to exactly one")
{
    const std::vector<StateRole> roles{StateRole::accepting, StateRole::rejecting};
    CHECK_NOTHROW(OneWayPfa(2, Alphabet{'a'}, 0, {{0, 'a', 0, Rational(1, 3)}, {0, 'a', 1, Rational(2, 3)}}, roles));
    CHECK_THROWS_AS(OneWayPfa(2, Alphabet{'a'}, 0, {{0, 'a', 0, Rational(1, 3)}, {0, 'a', 1, Rational(1, 3)}}, roles),
                    ParameterError);
    CHECK_THROWS_AS(OneWayPfa(2, Alphabet{'a'}, 0, {{0, 'a', 0, Rational(3, 2)}, {0, 'a', 1, Rational(-1, 2)}}, roles),
                    ParameterError);
}

TEST_CASE("pfa row sums hold for every construction")
{
    auto check_rows = [](const OneWayPfa& pfa) {
        for (State q = 0; q < pfa.state_count(); ++q)
            for (std::size_t a = 0; a < pfa.alphabet().size(); ++a) {
                const auto& row = pfa.row(q, a);
                if (row.empty()) continue;
                Rational sum = 0;
                for (const auto& b : row) {
                    CHECK(b.probability > 0);
                    CHECK(b.probability <= 1);
                    sum += b.probability;
                }
                CHECK(sum == 1);
            }
    };
    for (unsigned n = 1; n <= 6; ++n) check_rows(trios_lasvegas_pfa(n));
    for (auto p : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) check_rows(up_pfa(p));
}

TEST_CASE("nfa_accepts examples")
{
    const auto nfa = even_length_nfa();
    CHECK(nfa_accepts(nfa, "aaaa"));
    CHECK_FALSE(nfa_accepts(nfa, "aaa"));
    const OneWayNfa eps(2, Alphabet{'a'}, 0, {{0, std::nullopt, 1}}, {1});
    CHECK(nfa_accepts(eps, ""));
}

TEST_CASE("nfa_accepts agrees with path search on random machines")
{
    std::mt19937 gen(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto nfa = oracle::random_nfa(gen, 5, "ab");
        for (const auto& w : oracle::words("ab", 7)) REQUIRE(nfa_accepts(nfa, w) == oracle::nfa_path_exists(nfa, w));
    }
}

TEST_CASE("twoway_accepts without transitions halts at once")
{
    const TwoWayMachine yes(1, Alphabet{'a'}, 0, {}, {0}, true);
    const TwoWayMachine no(1, Alphabet{'a'}, 0, {}, {}, true);
    for (const auto& w : oracle::words("a", 5)) {
        CHECK(twoway_accepts(yes, w));
        CHECK_FALSE(twoway_accepts(no, w));
    }
}

TEST_CASE("twoway_accepts: trios_twoway_dfa(1,1) on #001")
{
    const auto m = trios_twoway_dfa({1, 1});
    CHECK(trios_problem({1, 1}).is_yes("#001"));
    CHECK(twoway_accepts(m, "#001"));
    CHECK_FALSE(twoway_accepts(m, "#101"));
}

TEST_CASE("right-moving two-way machines match their one-way NFA")
{
    // A total NFA with a final accepting check at -| becomes a two-way machine
    // that walks right; it halts on -| in q and accepts iff q accepts.
    std::mt19937 gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto nfa = oracle::random_nfa(gen, 4, "ab", false, true);
        std::vector<TwoWayTransition> tr{{nfa.initial(), TapeSymbol::left_end(), nfa.initial(), HeadMove::right}};
        for (const auto& t : nfa.transitions()) tr.push_back({t.from, TapeSymbol::of(*t.symbol), t.to, HeadMove::right});
        const TwoWayMachine m(nfa.state_count(), nfa.alphabet(), nfa.initial(), tr, nfa.accepting_states(), false);
        for (const auto& w : oracle::words("ab", 8)) REQUIRE(twoway_accepts(m, w) == nfa_accepts(nfa, w));
    }
}

TEST_CASE("deterministic two-way simulation matches step-by-step execution")
{
    for (unsigned n = 1; n <= 3; ++n) {
        const auto m = trios_twoway_dfa({n, 2});
        for (const auto& inst : trios_problem({n, 2}).instances(100))
            REQUIRE(twoway_accepts(m, inst.word) == oracle::twoway_run(m, inst.word));
        // arbitrary words outside the promise too
        for (const auto& w : oracle::words("#01", 6)) REQUIRE(twoway_accepts(m, w) == oracle::twoway_run(m, w));
    }
}

TEST_CASE("afa_accepts examples")
{
    CHECK(afa_accepts(evenodd_afa_rt({1}), "aaaa"));
    CHECK_FALSE(afa_accepts(evenodd_afa_rt({1}), "aa"));
    CHECK(afa_accepts(evenodd_afa_rt({2}), ""));
}

TEST_CASE("all-existential AFAs behave like NFAs")
{
    std::mt19937 gen(3);
    int built = 0;
    while (built < 60) {
        auto nfa = oracle::random_nfa(gen, 5, "ab");
        // states with epsilon moves may not mix, and may not accept on their own
        std::vector<NfaTransition> tr;
        std::vector<bool> has_eps(nfa.state_count(), false);
        for (const auto& t : nfa.transitions())
            if (!t.symbol) has_eps[t.from] = true;
        for (const auto& t : nfa.transitions())
            if (!t.symbol || !has_eps[t.from]) tr.push_back(t);
        std::vector<State> accepting, existential;
        for (State q = 0; q < nfa.state_count(); ++q) {
            existential.push_back(q);
            if (nfa.is_accepting(q) && !has_eps[q]) accepting.push_back(q);
        }
        std::optional<OneWayAfa> afa;
        try {
            afa.emplace(nfa.state_count(), nfa.alphabet(), 0, tr, accepting, existential, nfa.state_count());
        } catch (const ParameterError&) {
            continue;  // epsilon cycle
        }
        ++built;
        const auto as_nfa = afa->as_nfa();
        for (const auto& w : oracle::words("ab", 8)) {
            REQUIRE(afa_accepts(*afa, w) == nfa_accepts(as_nfa, w));
            REQUIRE(afa_accepts(*afa, w) == oracle::afa_value(*afa, w));
        }
    }
}

TEST_CASE("afa_accepts matches the top-down definition on the EvenOdd machines")
{
    for (unsigned k = 1; k <= 3; ++k) {
        const auto afa = evenodd_afa_rt({k});
        for (std::size_t len = 0; len <= 40; ++len) REQUIRE(afa_accepts(afa, std::string(len, 'a')) == oracle::afa_value(afa, std::string(len, 'a')));
    }
    const auto ef = evenodd_afa_epsfree({3});
    for (std::size_t len = 0; len <= 40; ++len) REQUIRE(afa_accepts(ef, std::string(len, 'a')) == oracle::afa_value(ef, std::string(len, 'a')));
}

TEST_CASE("dfa_run is repeatable")
{
    std::mt19937 gen(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto dfa = oracle::random_dfa(gen, 1, 5, "ab", 0.8);
        for (const auto& w : oracle::words("ab", 6)) REQUIRE(dfa_run(dfa, w) == dfa_run(dfa, w));
    }
}

}  // TEST_SUITE machines

TEST_SUITE("promise") {

TEST_CASE("promise_check examples")
{
    CHECK(promise_check(evenodd_dfa({1}), evenodd_problem({1}), 32).verdict() == Verdict::solves);
    const OneWayDfa all(1, Alphabet{'a'}, 0, {{0, 'a', 0}}, {0});
    const auto report = promise_check(all, evenodd_problem({1}), 8);
    REQUIRE(report.verdict() == Verdict::fails);
    CHECK(report.counterexample()->word == "aa");
    auto all_naturals = [](std::size_t) { return true; };
    CHECK(promise_check(parity_dfa(), parity_problem(all_naturals), 10).ok());
}

TEST_CASE("counterexample present exactly when failing")
{
    const OneWayDfa none(1, Alphabet{'a'}, 0, {{0, 'a', 0}}, {});
    for (const auto& r : {promise_check(none, evenodd_problem({1}), 16), promise_check(evenodd_dfa({1}), evenodd_problem({1}), 16),
                          VerificationReport::inconclusive()})
        CHECK(r.counterexample().has_value() == (r.verdict() == Verdict::fails));
}

TEST_CASE("alphabet mismatch is an input-domain error")
{
    CHECK_THROWS_AS(promise_check(trios_dfa({1, 1}), evenodd_problem({1}), 4), InputDomainError);
}

TEST_CASE("enumerators return exactly the promise strings")
{
    auto check = [](const PromiseProblem& p, const std::string& symbols, std::size_t max_length) {
        const auto inst = p.instances(max_length);
        std::set<std::string> listed;
        for (const auto& i : inst) {
            listed.insert(i.word);
            CHECK(p.classify(i.word) == i.expected);
        }
        CHECK(listed.size() == inst.size());
        for (const auto& w : oracle::words(symbols, max_length)) CHECK(listed.count(w) == (p.classify(w) ? 1u : 0u));
    };
    check(evenodd_problem({1}), "a", 20);
    check(evenodd_problem({2}), "a", 40);
    check(up_problem(Rational(9, 10)), "a", 30);
    check(trios_problem({1, 1}), "#01", 4);
    check(trios_problem({1, 2}), "#01", 8);
    check(trios_problem({2, 1}), "#01", 7);
}

TEST_CASE("verdicts do not depend on state numbering")
{
    std::mt19937 gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto dfa = oracle::random_dfa(gen, 2, 6, "a", 0.9);
        std::vector<State> perm(dfa.state_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        const auto copy = oracle::permute(dfa, perm);
        for (unsigned k = 1; k <= 2; ++k)
            CHECK(promise_check(dfa, evenodd_problem({k}), 32).verdict() ==
                  promise_check(copy, evenodd_problem({k}), 32).verdict());
    }
}

}  // TEST_SUITE promise

TEST_CASE("caps read from the environment")
{
    setenv("AUTOMATA_MAX_STATES", "77", 1);
    CHECK(Caps::from_environment().max_states == 77);
    setenv("AUTOMATA_MAX_STATES", "lots", 1);
    CHECK_THROWS_AS(Caps::from_environment(), ParameterError);
    unsetenv("AUTOMATA_MAX_STATES");
    CHECK(Caps::from_environment().max_states == Caps{}.max_states);
}
