#include "automata/constructions.hpp"
#include "automata/errors.hpp"
#include "automata/simulate.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace automata;

namespace {

std::string a(std::size_t n) { return std::string(n, 'a'); }

// Independent TRIOS oracle: builds segments from explicit bit vectors.
std::string segment(const std::string& x, const std::string& u, const std::string& v) { return "#" + x + u + v; }

bool some_less(const std::string& x, const std::string& y)
{
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < y[j]) return true;
    return false;
}

}  // namespace

TEST_SUITE("evenodd") {

TEST_CASE("problem membership")
{
    const auto p = evenodd_problem({1});
    CHECK(p.classify(a(4)) == Classification::yes);
    CHECK(p.classify(a(2)) == Classification::no);
    CHECK_FALSE(p.classify(a(3)).has_value());
    CHECK(p.classify("") == Classification::yes);
    CHECK_THROWS_AS(evenodd_problem({0}), ParameterError);
}

TEST_CASE("dfa sizes and correctness")
{
    CHECK(evenodd_dfa({1}).state_count() == 4);
    CHECK(evenodd_dfa({3}).state_count() == 16);
    CHECK(promise_check(evenodd_dfa({2}), evenodd_problem({2}), 64).ok());
    Caps tiny;
    tiny.max_states = 8;
    CHECK_THROWS_AS(evenodd_dfa({3}, tiny), ResourceCapExceeded);
}

TEST_CASE("realtime AFA state counts")
{
    for (unsigned k = 1; k <= 8; ++k) CHECK(evenodd_afa_rt({k}).state_count() == 7 * k + 2);
    CHECK(evenodd_afa_rt({3}).state_count() == 23);
    CHECK(evenodd_afa_rt({3}).longest_epsilon_chain() <= 2);
}

TEST_CASE("realtime AFA structure follows the transition list")
{
    const auto afa = evenodd_afa_rt({2});
    auto find = [&](const std::string& label) {
        for (State q = 0; q < afa.state_count(); ++q)
            if (afa.label(q) == label) return q;
        FAIL("missing state " << label);
        return State{0};
    };
    CHECK(afa.initial() == find("s_ini"));
    for (auto name : {"s_ini", "2_0", "1_0", "0_0"}) CHECK(afa.is_accepting(find(name)));
    for (auto name : {"2_1", "1_1", "0_1", "2_1,allone", "2_0,exzero", "2_exzero"}) CHECK_FALSE(afa.is_accepting(find(name)));
    for (auto name : {"2_0", "2_1", "0_1", "2_exzero"}) CHECK(afa.is_existential(find(name)));
    for (auto name : {"s_ini", "2_1,allone", "1_0,exzero"}) CHECK_FALSE(afa.is_existential(find(name)));
    const auto& eps = afa.epsilon_successors(find("2_1,allone"));
    CHECK(std::vector<State>(eps.begin(), eps.end()) ==
          [&] {
              std::vector<State> v{find("2_1"), find("1_1"), find("0_1")};
              std::sort(v.begin(), v.end());
              return v;
          }());
}

TEST_CASE("realtime AFA accepts exactly the multiples of 2^(k+1)")
{
    for (unsigned k = 1; k <= 5; ++k) {
        const auto afa = evenodd_afa_rt({k});
        for (std::size_t n = 0; n <= (std::size_t{1} << (k + 3)); ++n)
            REQUIRE(afa_accepts(afa, a(n)) == (n % (std::size_t{2} << k) == 0));
    }
    CHECK(afa_accepts(evenodd_afa_rt({3}), a(16)));
    CHECK_FALSE(afa_accepts(evenodd_afa_rt({3}), a(8)));
}

TEST_CASE("epsilon-free AFA")
{
    for (unsigned k = 3; k <= 8; ++k) {
        const auto afa = evenodd_afa_epsfree({k});
        CHECK(afa.state_count() == 11 * k - 14);
        for (const auto& t : afa.transitions()) CHECK(t.symbol.has_value());
    }
    CHECK(evenodd_afa_epsfree({3}).state_count() == 19);
    CHECK(evenodd_afa_epsfree({4}).state_count() == 30);
    CHECK(promise_check(evenodd_afa_epsfree({3}), evenodd_problem({3}), 64).ok());
    CHECK_THROWS_AS(evenodd_afa_epsfree({2}), ParameterError);
    // only multiples of four are ever accepted
    const auto ef = evenodd_afa_epsfree({3});
    for (std::size_t n = 0; n <= 128; ++n)
        if (afa_accepts(ef, a(n))) CHECK(n % 4 == 0);
    for (unsigned k = 3; k <= 5; ++k)
        CHECK(promise_check(evenodd_afa_epsfree({k}), evenodd_problem({k}), std::size_t{1} << (k + 3)).ok());
}

}  // TEST_SUITE evenodd

TEST_SUITE("trios") {

TEST_CASE("problem membership")
{
    const auto p = trios_problem({1, 1});
    CHECK(p.classify("#001") == Classification::yes);
    CHECK(p.classify("#101") == Classification::no);
    // x = y has no witness bit
    CHECK_FALSE(p.classify("#000").has_value());
    CHECK_FALSE(p.classify("#111").has_value());
    for (const auto& inst : p.instances(4)) CHECK(inst.word != "#000");
}

TEST_CASE("enumeration matches an explicit construction")
{
    for (unsigned n = 1; n <= 2; ++n) {
        std::set<std::string> yes, no;
        for (const auto& x : oracle::words("01", n))
            for (const auto& y : oracle::words("01", n)) {
                if (x.size() != n || y.size() != n) continue;
                if (some_less(x, y)) yes.insert(segment(x, x, y));
                if (some_less(y, x)) no.insert(segment(x, y, x));
            }
        std::set<std::string> got_yes, got_no;
        for (const auto& inst : trios_problem({n, 1}).instances(3 * n + 1))
            (inst.expected == Classification::yes ? got_yes : got_no).insert(inst.word);
        CHECK(got_yes == yes);
        CHECK(got_no == no);
    }
}

TEST_CASE("probability ladder")
{
    CHECK(trios_ladder(2) == std::vector<Rational>{Rational(1, 2), Rational(1)});
    CHECK(trios_ladder(3) == std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(1)});
    for (unsigned n = 1; n <= 10; ++n) {
        const auto ladder = trios_ladder(n);
        CHECK(ladder.back() == 1);
        // each position j is selected with probability exactly 1/n
        Rational stay = 1;
        for (const auto& p : ladder) {
            CHECK(p > 0);
            CHECK(p <= 1);
            CHECK(stay * p == Rational(1, n));
            stay *= 1 - p;
        }
    }
}

TEST_CASE("Las Vegas machine size")
{
    for (unsigned n = 1; n <= 8; ++n) CHECK(trios_lasvegas_pfa(n).state_count() == 4 * n + 3);
    CHECK(trios_lasvegas_pfa(2).state_count() == 11);
}

TEST_CASE("one-way DFA")
{
    CHECK(promise_check(trios_dfa({1, 1}), trios_problem({1, 1}), 4).ok());
    CHECK(promise_check(trios_dfa({2, 2}), trios_problem({2, 2}), 14).ok());
    for (unsigned n = 1; n <= 6; ++n) {
        const auto dfa = trios_dfa({n, 1});
        CHECK(dfa.state_count() == trios_dfa_state_count(n));
        CHECK(dfa.state_count() >= (std::size_t{1} << n));
        CHECK(dfa.state_count() <= 4 * (std::size_t{1} << n));
        CHECK(trios_dfa({n, 3}).state_count() == dfa.state_count());
    }
}

TEST_CASE("two-way DFA")
{
    CHECK(promise_check(trios_twoway_dfa({2, 1}), trios_problem({2, 1}), 7).ok());
    CHECK(promise_check(trios_twoway_dfa({2, 3}), trios_problem({2, 3}), 21).ok());
    for (unsigned n = 1; n <= 6; ++n) {
        const auto m = trios_twoway_dfa({n, 1});
        CHECK(m.deterministic());
        CHECK(m.state_count() <= trios_twoway_state_limit(n));
        CHECK(m.state_count() == (n == 1 ? 9u : 8 * n - 1));
        CHECK(trios_twoway_dfa({n, 4}).state_count() == m.state_count());
    }
    for (unsigned n = 3; n <= 4; ++n) CHECK(promise_check(trios_twoway_dfa({n, 1}), trios_problem({n, 1}), 3 * n + 1).ok());
}

TEST_CASE("all three TRIOS solvers agree with the predicates")
{
    for (unsigned n = 1; n <= 2; ++n)
        for (unsigned r = 1; r <= 2; ++r) {
            const auto p = trios_problem({n, r});
            const auto dfa = trios_dfa({n, r});
            const auto two = trios_twoway_dfa({n, r});
            const auto pfa = trios_lasvegas_pfa(n);
            for (const auto& inst : p.instances(100)) {
                const bool yes = inst.expected == Classification::yes;
                REQUIRE(accepts(dfa, inst.word) == yes);
                REQUIRE(accepts(two, inst.word) == yes);
                const auto paths = oracle::pfa_paths(pfa, inst.word);
                REQUIRE((yes ? paths.reject : paths.accept) == 0);
            }
        }
}

}  // TEST_SUITE trios

TEST_SUITE("up") {

TEST_CASE("problem membership")
{
    const auto p = up_problem(Rational(1, 2));
    CHECK(p.classify("") == Classification::yes);
    CHECK(p.classify("aa") == Classification::no);
    CHECK_FALSE(p.classify("a").has_value());
    CHECK_THROWS_AS(up_problem(Rational(1)), ParameterError);
    CHECK_THROWS_AS(up_problem(Rational(0)), ParameterError);
}

TEST_CASE("critical lengths")
{
    CHECK(critical_lengths(Rational(1, 2)) == CriticalLengths{0, 2});
    CHECK(critical_lengths(Rational(9, 10)) == CriticalLengths{2, 14});
    CHECK(critical_lengths(Rational(9, 10)).accept_limit >= critical_lengths(Rational(1, 2)).accept_limit);
    // against the definitions, computed with direct powers
    for (auto p : {Rational(1, 3), Rational(3, 5), Rational(9, 10), Rational(99, 100)}) {
        const auto c = critical_lengths(p);
        CHECK(pow(p, c.accept_limit) >= Rational(3, 4));
        CHECK(pow(p, c.accept_limit + 1) < Rational(3, 4));
        CHECK(pow(p, c.reject_start) <= Rational(1, 4));
        if (c.reject_start > 0) CHECK(pow(p, c.reject_start - 1) > Rational(1, 4));
    }
    Caps caps;
    caps.max_critical_length = 10;
    CHECK_THROWS_AS(critical_lengths(Rational(999, 1000), caps), ResourceCapExceeded);
}

TEST_CASE("pfa and dfa")
{
    CHECK(up_pfa(Rational(1, 2)).state_count() == 2);
    CHECK(up_pfa(Rational(7, 9)).state_count() == 2);
    CHECK(up_dfa(Rational(1, 2)).state_count() == 1);
    CHECK(up_dfa(Rational(9, 10)).state_count() == 3);
    CHECK(promise_check(up_dfa(Rational(9, 10)), up_problem(Rational(9, 10)), 30).ok());
    for (auto p : {Rational(1, 2), Rational(3, 5), Rational(9, 10), Rational(19, 20)}) {
        const auto c = critical_lengths(p);
        CHECK(up_dfa(p).state_count() == c.accept_limit + 1);
        CHECK(promise_check(up_dfa(p), up_problem(p), c.reject_start + 5).ok());
    }
}

}  // TEST_SUITE up

TEST_SUITE("parity") {

TEST_CASE("parity problem and machine")
{
    auto all = [](std::size_t) { return true; };
    auto even = [](std::size_t n) { return n % 2 == 0; };
    auto none = [](std::size_t) { return false; };
    const auto p = parity_problem(all);
    CHECK(p.classify("aaaa") == Classification::yes);
    CHECK(p.classify("aaa") == Classification::no);
    CHECK(parity_problem(none).instances(50).empty());
    const OneWayDfa anything(1, Alphabet{'a'}, 0, {}, {});
    CHECK(promise_check(anything, parity_problem(none), 50).ok());
    CHECK(promise_check(parity_dfa(), parity_problem(even), 20).ok());
    CHECK(parity_dfa().state_count() == 2);
}

}  // TEST_SUITE parity
