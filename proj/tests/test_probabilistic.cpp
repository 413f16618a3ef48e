#include "automata/constructions.hpp"
#include "automata/errors.hpp"
#include "automata/probabilistic.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace automata;

namespace {

OneWayPfa random_pfa(std::mt19937& gen)
{
    std::uniform_int_distribution<int> states_dist(2, 5), den_dist(1, 6);
    const int n = states_dist(gen);
    std::uniform_int_distribution<State> state(0, static_cast<State>(n - 1));
    std::vector<PfaTransition> tr;
    for (State q = 0; q < static_cast<State>(n); ++q)
        for (char c : {'a', 'b'}) {
            // split 1 into up to three positive parts with small denominators
            Rational left = 1;
            for (int part = 0; part < 2 && left > 0; ++part) {
                Rational p(1, den_dist(gen) + 1);
                p.canonicalize();
                if (p >= left) break;
                tr.push_back({q, c, state(gen), p});
                left -= p;
            }
            tr.push_back({q, c, state(gen), left});
        }
    std::vector<StateRole> roles;
    for (int q = 0; q < n; ++q) roles.push_back(static_cast<StateRole>(q % 3));
    return OneWayPfa(n, Alphabet{'a', 'b'}, 0, tr, roles);
}

}  // namespace

TEST_SUITE("exact engine") {

TEST_CASE("examples")
{
    CHECK(accept_prob(up_pfa(Rational(1, 2)), "aa") == Rational(1, 4));
    CHECK(accept_prob(up_pfa(Rational(2, 7)), "") == 1);
    CHECK(outcome_dist(trios_lasvegas_pfa(1), "#001") == OutcomeDistribution{1, 0, 0});
    for (const auto& inst : trios_problem({2, 1}).instances(7))
        if (inst.expected == Classification::yes) CHECK(outcome_dist(trios_lasvegas_pfa(2), inst.word).reject == 0);
}

TEST_CASE("up_pfa accepts a^j with probability p^j")
{
    for (auto p : {Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
        Rational expected = 1;
        for (std::size_t j = 0; j <= 40; ++j) {
            REQUIRE(accept_prob(up_pfa(p), std::string(j, 'a')) == expected);
            expected *= p;
        }
    }
}

TEST_CASE("distribution matches path enumeration and sums to one")
{
    std::mt19937 gen(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto pfa = random_pfa(gen);
        for (const auto& w : oracle::words("ab", 5)) {
            const auto d = outcome_dist(pfa, w);
            const auto o = oracle::pfa_paths(pfa, w);
            REQUIRE(d.accept == o.accept);
            REQUIRE(d.reject == o.reject);
            REQUIRE(d.neutral == o.neutral);
            REQUIRE(d.accept + d.reject + d.neutral == 1);
        }
    }
}

TEST_CASE("halted mass is neutral")
{
    const OneWayPfa pfa(2, Alphabet{'a', 'b'}, 0, {{0, 'a', 1, Rational(1)}}, {StateRole::accepting, StateRole::accepting});
    CHECK(outcome_dist(pfa, "b") == OutcomeDistribution{0, 0, 1});
    CHECK(outcome_dist(pfa, "a") == OutcomeDistribution{1, 0, 0});
}

TEST_CASE("neutral-as-reject reporting folds only the report")
{
    const OutcomeDistribution d{Rational(1, 2), Rational(1, 8), Rational(3, 8)};
    CHECK(report_as(d, ReportingMode::neutral_as_reject) == OutcomeDistribution{Rational(1, 2), Rational(1, 2), 0});
    CHECK(report_as(d, ReportingMode::las_vegas) == d);
}

TEST_CASE("alphabet mismatch")
{
    CHECK_THROWS_AS(accept_prob(up_pfa(Rational(1, 2)), "b"), InputDomainError);
    CHECK_THROWS_AS(lasvegas_success(trios_lasvegas_pfa(1), evenodd_problem({1}), 4, Rational(1)), InputDomainError);
}

}  // TEST_SUITE exact engine

TEST_SUITE("las vegas") {

TEST_CASE("success bound")
{
    CHECK(trios_success_bound(2, 1) == Rational(1, 2));
    CHECK(trios_success_bound(1, 5) == 1);
    CHECK(trios_success_bound(3, 2) == Rational(5, 9));
    CHECK_THROWS_AS(trios_success_bound(0, 1), ParameterError);
}

TEST_CASE("lasvegas_success examples")
{
    const auto r21 = lasvegas_success(trios_lasvegas_pfa(2), trios_problem({2, 1}), 7, Rational(1, 2));
    CHECK(r21.ok());
    CHECK(std::get<Rational>(*r21.find("min_success")) == Rational(1, 2));
    for (unsigned r = 1; r <= 3; ++r) {
        const auto rep = lasvegas_success(trios_lasvegas_pfa(1), trios_problem({1, r}), 4 * r, Rational(1));
        CHECK(rep.ok());
        CHECK(std::get<Rational>(*rep.find("min_success")) == 1);
    }
    CHECK(lasvegas_success(trios_lasvegas_pfa(2), trios_problem({2, 2}), 14, Rational(3, 4)).ok());
    // asking for more than the guarantee fails on the worst instance
    CHECK(lasvegas_success(trios_lasvegas_pfa(2), trios_problem({2, 1}), 7, Rational(3, 5)).verdict() == Verdict::fails);
}

TEST_CASE("both directions of the guarantee, n <= 3, r <= 3")
{
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned r = 1; r <= 3; ++r) {
            if (n == 3 && r == 3) continue;  // 37^3 segments per side; covered by r <= 2 here
            const Rational bound = 1 - pow(Rational(n - 1, n), r);
            const auto pfa = trios_lasvegas_pfa(n);
            for (const auto& inst : trios_problem({n, r}).instances((3 * n + 1) * r)) {
                const auto d = outcome_dist(pfa, inst.word);
                if (inst.expected == Classification::yes) {
                    REQUIRE(d.reject == 0);
                    REQUIRE(d.accept >= bound);
                } else {
                    REQUIRE(d.accept == 0);
                    REQUIRE(d.reject >= bound);
                }
            }
        }
}

}  // TEST_SUITE las vegas

TEST_SUITE("monte carlo") {

TEST_CASE("up_pfa(1/2) on aa")
{
    const auto mc = monte_carlo(up_pfa(Rational(1, 2)), "aa", 100000, 42);
    CHECK(std::abs(mc.frequency(mc.accept) - 0.25) <= 3 * std::sqrt(0.25 * 0.75 / 1e5));
}

TEST_CASE("empty word consumes no randomness")
{
    std::mt19937 gen(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto mc = monte_carlo(random_pfa(gen), "", 100, trial);
        CHECK((mc.accept == 0 || mc.accept == 100));
    }
}

TEST_CASE("no-instances are never accepted")
{
    for (const auto& inst : trios_problem({2, 1}).instances(7))
        if (inst.expected == Classification::no) CHECK(monte_carlo(trios_lasvegas_pfa(2), inst.word, 2000, 9).accept == 0);
}

TEST_CASE("counts are independent of the worker count")
{
    const auto pfa = trios_lasvegas_pfa(3);
    const std::string w = "#001001011";
    const auto one = monte_carlo(pfa, w, 20000, 77, 1);
    for (unsigned jobs : {2u, 3u, 8u}) {
        const auto many = monte_carlo(pfa, w, 20000, 77, jobs);
        CHECK(many.accept == one.accept);
        CHECK(many.reject == one.reject);
        CHECK(many.neutral == one.neutral);
    }
    CHECK(monte_carlo(pfa, w, 20000, 78).accept != one.accept);
}

TEST_CASE("empirical frequencies converge on random machines")
{
    std::mt19937 gen(1234);
    std::uniform_int_distribution<int> len(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pfa = random_pfa(gen);
        std::string w;
        for (int i = len(gen); i > 0; --i) w += gen() % 2 ? 'a' : 'b';
        const double p = to_double(accept_prob(pfa, w));
        const auto mc = monte_carlo(pfa, w, 100000, 1000 + trial, 4);
        const double sigma = std::sqrt(p * (1 - p) / 1e5);
        CHECK(std::abs(mc.frequency(mc.accept) - p) <= 4 * sigma + 1e-12);
    }
}

}  // TEST_SUITE monte carlo

TEST_SUITE("rounds") {

TEST_CASE("expected rounds")
{
    CHECK(expected_rounds(Rational(1)) == 1);
    CHECK(expected_rounds(Rational(1, 2)) == 2);
    CHECK_THROWS_AS(expected_rounds(Rational(0)), ParameterError);
    // partial sums of sum i s (1-s)^(i-1) approach 1/s from below
    for (auto s : {Rational(1, 3), Rational(3, 4)}) {
        Rational partial = 0, miss = 1;
        for (int i = 1; i <= 60; ++i) {
            partial += i * s * miss;
            miss *= 1 - s;
        }
        CHECK(partial < expected_rounds(s));
        CHECK(to_double(expected_rounds(s) - partial) < 1e-6);
    }
    const auto sigma = trios_success_bound(3, 9);
    CHECK(to_double(expected_rounds(sigma)) <= sweep_bound(3) + 1e-9);
}

TEST_CASE("ExpEQ parameters")
{
    const auto m11 = expeq_params(3, 1, 1);
    CHECK(m11.a == Rational(1, 972));
    CHECK(m11.t == 1944);
    CHECK(expeq_params(3, 1, 2).a == Rational(1, 17496));
    for (std::uint64_t c : {3, 4, 10, 100})
        for (std::uint64_t m = 1; m <= 2; ++m)
            for (std::uint64_t n = 1; n <= 2; ++n) {
                const auto model = expeq_params(c, m, n);
                CHECK(model.a > 0);
                CHECK(model.a < 1);
                // t = a^{-1} ceil(ln c)
                CHECK(Rational(model.t) == Rational(static_cast<unsigned long>(ceil_ln(c))) / model.a);
            }
    CHECK_THROWS_AS(expeq_params(2, 1, 1), ParameterError);
}

TEST_CASE("composition examples")
{
    RoundModel one;
    one.a = Rational(1, 2);
    one.r = Rational(1, 4);
    one.t = 1;
    CHECK(expeq_compose(one) == OutcomeDistribution{Rational(1, 2), Rational(1, 4), Rational(1, 4)});
    RoundModel two;
    two.a = two.r = Rational(1, 3);
    two.t = 2;
    CHECK(expeq_compose(two).accept == Rational(4, 9));
    RoundModel idle;
    idle.a = idle.r = 0;
    idle.t = 5;
    CHECK(expeq_compose(idle) == OutcomeDistribution{0, 0, 1});
}

TEST_CASE("composition agrees with round-by-round accumulation")
{
    for (auto [a, r, t] : std::vector<std::tuple<Rational, Rational, unsigned>>{
             {Rational(1, 5), Rational(1, 7), 9}, {Rational(1, 972), Rational(1, 2916), 30}, {Rational(1, 2), 0, 4}}) {
        Rational acc = 0, rej = 0, alive = 1;
        for (unsigned i = 0; i < t; ++i) {
            acc += alive * a;
            rej += alive * r;
            alive *= 1 - a - r;
        }
        RoundModel model;
        model.a = a;
        model.r = r;
        model.t = t;
        const auto d = expeq_compose(model);
        CHECK(d.accept == acc);
        CHECK(d.reject == rej);
        CHECK(d.neutral == alive);
        CHECK(d.accept + d.reject + d.neutral == 1);
        if (r > 0) CHECK(d.accept / d.reject == a / r);
    }
}

TEST_CASE("yes-case bound at c = 3, m = n = 1, exactly")
{
    auto model = expeq_params(3, 1, 1);
    model.r = model.a / 3;
    const auto d = expeq_compose(model);
    CHECK(d.neutral < Rational(1, 3));
    CHECK(d.accept > 1 - Rational(2, 4));
}

TEST_CASE("n_t < 1/c exactly for small parameters")
{
    for (std::uint64_t c : {3, 4, 5})
        for (std::uint64_t m = 1; m <= 2; ++m)
            for (std::uint64_t n = 1; m + n <= 3; ++n) {
                auto model = expeq_params(c, m, n);
                if (model.t > 200000) continue;  // exact powers get large; enclosures cover the rest
                model.r = model.a / c;
                CHECK(expeq_compose(model).neutral < Rational(1, c));
            }
}

TEST_CASE("enclosures contain the exact totals")
{
    for (std::uint64_t c : {3, 4, 5}) {
        auto model = expeq_params(c, 1, 1);
        for (const Rational& r : {Rational(model.a / c), Rational(model.a * c)}) {
            model.r = r;
            const auto exact = expeq_compose(model);
            const auto enc = expeq_compose_bounds(model);
            CHECK(enc.neutral.contains(exact.neutral));
            CHECK(enc.accept.contains(exact.accept));
            CHECK(enc.reject.contains(exact.reject));
            CHECK(to_double(enc.neutral.hi - enc.neutral.lo) < 1e-20);
        }
    }
    auto big = expeq_params(100, 2, 1);
    CHECK_THROWS_AS(expeq_compose(big), ResourceCapExceeded);
}

TEST_CASE("ExpEQ problem")
{
    const auto p = expeq_problem(3);
    std::string yes;
    for (int i = 0; i < 1944; ++i) yes += "ab";
    CHECK(p.classify(yes) == Classification::yes);
    CHECK_FALSE(p.classify("ab").has_value());
    CHECK_FALSE(p.classify(yes + "ab").has_value());
    std::string no;
    for (int i = 0; i < 34992; ++i) no += "abb";
    CHECK(expeq_params(3, 1, 2).t == 34992);
    CHECK(p.classify(no) == Classification::no);
    const auto inst = p.instances(4000);
    REQUIRE(inst.size() == 1);
    CHECK(inst[0].word == yes);
    CHECK(p.instances(3000).empty());
}

}  // TEST_SUITE rounds
