#pragma once

#include "automata/caps.hpp"
#include "automata/machines.hpp"
#include "automata/numeric.hpp"
#include "automata/promise.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace automata {

struct OutcomeDistribution {
    Rational accept;
    Rational reject;
    Rational neutral;

    bool operator==(const OutcomeDistribution&) const = default;
};

/// How neutral ("don't know") mass is reported. The distribution itself is
/// never changed; `neutral_as_reject` only folds it into the reject column.
enum class ReportingMode { las_vegas, neutral_as_reject };

OutcomeDistribution report_as(const OutcomeDistribution& d, ReportingMode mode);

/// Exact state distribution after reading `word`. Mass reaching a state with
/// no transition on the next symbol halts there and is reported as neutral.
OutcomeDistribution outcome_dist(const OneWayPfa& pfa, std::string_view word);

Rational accept_prob(const OneWayPfa& pfa, std::string_view word);

/// Exhaustive Las Vegas check: yes-instances are never rejected and
/// accepted with probability >= threshold; symmetrically for no-instances.
/// Records the minimum observed success probability as "min_success".
VerificationReport lasvegas_success(const LasVegasPfa& pfa, const PromiseProblem& problem,
                                    std::size_t max_length, const Rational& threshold);

VerificationReport lasvegas_success(const LasVegasPfa& pfa, const std::vector<Instance>& instances,
                                    const Rational& threshold);

/// 1 - ((n-1)/n)^r.
Rational trios_success_bound(std::uint64_t n, std::uint64_t r);

struct MonteCarloResult {
    std::uint64_t trials = 0;
    std::uint64_t accept = 0;
    std::uint64_t reject = 0;
    std::uint64_t neutral = 0;
    std::uint64_t seed = 0;

    double frequency(std::uint64_t count) const { return static_cast<double>(count) / static_cast<double>(trials); }
};

/// Generator identifier recorded in reports.
inline constexpr const char* monte_carlo_generator = "mt19937_64/splitmix64-per-trial";

/// Samples `trials` runs. Trial i draws from a generator seeded with a mix
/// of (seed, i), so the counts do not depend on `jobs`.
MonteCarloResult monte_carlo(const OneWayPfa& pfa, std::string_view word, std::uint64_t trials,
                             std::uint64_t seed, unsigned jobs = 1);

/// Mean number of restarts until success: 1/success.
Rational expected_rounds(const Rational& success);

/// (1 + 1/(e^n - 1))^2, the bound on the expected number of sweeps.
double sweep_bound(unsigned n);

struct RoundModel {
    Rational a;  // per-round accept
    Rational r;  // per-round reject
    std::uint64_t c = 3;
    std::uint64_t m = 1;
    std::uint64_t n = 1;
    BigNatural t;  // number of rounds

    Rational neutral() const { return 1 - a - r; }
};

/// a = 1/(3 (2c^2)^(m+n)), t = 3 (2c^2)^(m+n) ceil(ln c). The reject rate
/// is a free parameter and is set to 0; use RoundModel::r to fix it.
RoundModel expeq_params(std::uint64_t c, std::uint64_t m, std::uint64_t n);

/// Exact totals after t rounds. Throws when t exceeds `max_exact_rounds`.
OutcomeDistribution expeq_compose(const RoundModel& model, std::uint64_t max_exact_rounds = 200'000);

struct OutcomeEnclosure {
    Enclosure accept;
    Enclosure reject;
    Enclosure neutral;
};

/// Certified enclosures of the t-round totals for arbitrarily large t.
OutcomeEnclosure expeq_compose_bounds(const RoundModel& model);

/// yes: (a^m b^n)^t with m = n; no: the same shape with m != n; t always
/// taken from expeq_params(c, m, n).
PromiseProblem expeq_problem(std::uint64_t c);

}  // namespace automata
