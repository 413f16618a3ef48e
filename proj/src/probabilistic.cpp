#include "automata/probabilistic.hpp"

#include "automata/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace automata {

OutcomeDistribution report_as(const OutcomeDistribution& d, ReportingMode mode)
{
    if (mode == ReportingMode::las_vegas) return d;
    return {d.accept, d.reject + d.neutral, Rational(0)};
}

OutcomeDistribution outcome_dist(const OneWayPfa& pfa, std::string_view word)
{
    const auto symbols = pfa.alphabet().encode(word);
    std::vector<Rational> mass(pfa.state_count());
    mass[pfa.initial()] = 1;
    Rational halted = 0;
    for (std::size_t a : symbols) {
        std::vector<Rational> next(pfa.state_count());
        for (State q = 0; q < pfa.state_count(); ++q) {
            if (mass[q] == 0) continue;
            const auto& row = pfa.row(q, a);
            if (row.empty()) {
                halted += mass[q];
                continue;
            }
            for (const auto& b : row) next[b.to] += mass[q] * b.probability;
        }
        mass = std::move(next);
    }
    OutcomeDistribution d{0, 0, halted};
    for (State q = 0; q < pfa.state_count(); ++q) {
        switch (pfa.role(q)) {
        case StateRole::accepting: d.accept += mass[q]; break;
        case StateRole::rejecting: d.reject += mass[q]; break;
        case StateRole::neutral: d.neutral += mass[q]; break;
        }
    }
    return d;
}

Rational accept_prob(const OneWayPfa& pfa, std::string_view word) { return outcome_dist(pfa, word).accept; }

VerificationReport lasvegas_success(const LasVegasPfa& pfa, const std::vector<Instance>& instances,
                                    const Rational& threshold)
{
    std::optional<Rational> min_success;
    std::size_t checked = 0;
    for (const auto& inst : instances) {
        const auto d = outcome_dist(pfa, inst.word);
        const bool yes = inst.expected == Classification::yes;
        const Rational& wrong = yes ? d.reject : d.accept;
        const Rational& right = yes ? d.accept : d.reject;
        ++checked;
        if (!min_success || right < *min_success) min_success = right;
        if (wrong != 0 || right < threshold) {
            std::string observed = "accept=" + to_string(d.accept) + " reject=" + to_string(d.reject) +
                                   " neutral=" + to_string(d.neutral);
            return VerificationReport::fails({inst.word, to_string(inst.expected), std::move(observed)})
                .measure("threshold", threshold)
                .measure("checked", checked);
        }
    }
    auto report = VerificationReport::solves();
    report.measure("threshold", threshold).measure("checked", checked);
    if (min_success) report.measure("min_success", *min_success);
    return report;
}

VerificationReport lasvegas_success(const LasVegasPfa& pfa, const PromiseProblem& problem,
                                    std::size_t max_length, const Rational& threshold)
{
    if (!(pfa.alphabet() == problem.alphabet()))
        throw InputDomainError("lasvegas_success: machine and problem alphabets differ");
    return lasvegas_success(pfa, problem.instances(max_length), threshold);
}

Rational trios_success_bound(std::uint64_t n, std::uint64_t r)
{
    if (n < 1 || r < 1) throw ParameterError("trios_success_bound requires n, r >= 1");
    Rational miss(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n));
    miss.canonicalize();
    return 1 - pow(miss, r);
}

// ------------------------------------------------------------------ sampling

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// A row prepared for sampling: exact cumulative integer weights when the
// common denominator fits in 64 bits, doubles otherwise.
struct SamplingRow {
    std::vector<State> targets;
    std::vector<std::uint64_t> cumulative;  // exact mode
    std::uint64_t total = 0;
    std::vector<double> cumulative_d;  // fallback
};

SamplingRow prepare(const std::vector<OneWayPfa::Branch>& row)
{
    SamplingRow s;
    BigNatural den = 1;
    for (const auto& b : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), b.probability.get_den_mpz_t());
    const bool fits = mpz_sizeinbase(den.get_mpz_t(), 2) <= 63;
    BigNatural acc = 0;
    double acc_d = 0;
    for (const auto& b : row) {
        s.targets.push_back(b.to);
        if (fits) {
            acc += BigNatural(b.probability * den);
            s.cumulative.push_back(mpz_get_ui(acc.get_mpz_t()));
        } else {
            acc_d += b.probability.get_d();
            s.cumulative_d.push_back(acc_d);
        }
    }
    if (fits) s.total = mpz_get_ui(den.get_mpz_t());
    return s;
}

State draw(const SamplingRow& row, std::mt19937_64& gen)
{
    if (row.targets.size() == 1) return row.targets[0];
    std::size_t i = 0;
    if (!row.cumulative.empty()) {
        const std::uint64_t x = std::uniform_int_distribution<std::uint64_t>(0, row.total - 1)(gen);
        i = std::upper_bound(row.cumulative.begin(), row.cumulative.end(), x) - row.cumulative.begin();
    } else {
        const double x = std::uniform_real_distribution<double>(0, row.cumulative_d.back())(gen);
        i = std::upper_bound(row.cumulative_d.begin(), row.cumulative_d.end(), x) - row.cumulative_d.begin();
    }
    return row.targets[std::min(i, row.targets.size() - 1)];
}

}  // namespace

MonteCarloResult monte_carlo(const OneWayPfa& pfa, std::string_view word, std::uint64_t trials,
                             std::uint64_t seed, unsigned jobs)
{
    if (trials < 1) throw ParameterError("monte_carlo requires at least one trial");
    const auto symbols = pfa.alphabet().encode(word);
    const std::size_t sigma = pfa.alphabet().size();
    std::vector<SamplingRow> rows;
    rows.reserve(pfa.state_count() * sigma);
    for (State q = 0; q < pfa.state_count(); ++q)
        for (std::size_t a = 0; a < sigma; ++a) rows.push_back(prepare(pfa.row(q, a)));

    // outcome per trial: 0 accept, 1 reject, 2 neutral
    auto run = [&](std::uint64_t trial) {
        std::mt19937_64 gen(splitmix64(seed ^ splitmix64(trial)));
        State q = pfa.initial();
        for (std::size_t a : symbols) {
            const auto& row = rows[q * sigma + a];
            if (row.targets.empty()) return 2;
            q = draw(row, gen);
        }
        switch (pfa.role(q)) {
        case StateRole::accepting: return 0;
        case StateRole::rejecting: return 1;
        default: return 2;
        }
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(trials, 256))));
    std::vector<std::array<std::uint64_t, 3>> counts(jobs, {0, 0, 0});
    auto worker = [&](unsigned id) {
        for (std::uint64_t t = id; t < trials; t += jobs) ++counts[id][run(t)];
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }
    MonteCarloResult result;
    result.trials = trials;
    result.seed = seed;
    for (const auto& c : counts) {
        result.accept += c[0];
        result.reject += c[1];
        result.neutral += c[2];
    }
    return result;
}

Rational expected_rounds(const Rational& success)
{
    if (success == 0) throw ParameterError("expected_rounds: success probability 0, the restart loop diverges");
    if (success < 0 || success > 1) throw ParameterError("expected_rounds: success must lie in (0,1]");
    return 1 / success;
}

double sweep_bound(unsigned n)
{
    const double x = 1.0 + 1.0 / std::expm1(static_cast<double>(n));
    return x * x;
}

// ------------------------------------------------------------------ ExpEQ

namespace {

BigNatural expeq_block(std::uint64_t c, std::uint64_t m, std::uint64_t n)
{
    if (c < 3) throw ParameterError("ExpEQ requires c >= 3");
    if (m < 1 || n < 1) throw ParameterError("ExpEQ requires m, n >= 1");
    if (m + n > 4096) throw ResourceCapExceeded("ExpEQ: (2c^2)^(m+n) too large for m+n > 4096");
    const BigNatural base = 2 * BigNatural(static_cast<unsigned long>(c)) * static_cast<unsigned long>(c);
    return 3 * pow(base, m + n);
}

}  // namespace

RoundModel expeq_params(std::uint64_t c, std::uint64_t m, std::uint64_t n)
{
    const BigNatural block = expeq_block(c, m, n);
    RoundModel model;
    model.a = Rational(1) / Rational(block);
    model.r = 0;
    model.c = c;
    model.m = m;
    model.n = n;
    model.t = block * static_cast<unsigned long>(ceil_ln(c));
    return model;
}

namespace {

void check_model(const RoundModel& model)
{
    if (model.a < 0 || model.r < 0 || model.a + model.r > 1)
        throw ParameterError("round model requires a, r >= 0 and a + r <= 1");
}

}  // namespace

OutcomeDistribution expeq_compose(const RoundModel& model, std::uint64_t max_exact_rounds)
{
    check_model(model);
    if (model.t > max_exact_rounds)
        throw ResourceCapExceeded("expeq_compose: t = " + to_string(model.t) +
                                  " rounds exceed the exact-composition cap; use the enclosure");
    const Rational nt = pow(model.neutral(), mpz_get_ui(model.t.get_mpz_t()));
    const Rational decisive = model.a + model.r;
    if (decisive == 0) return {0, 0, nt};
    return {model.a * (1 - nt) / decisive, model.r * (1 - nt) / decisive, nt};
}

OutcomeEnclosure expeq_compose_bounds(const RoundModel& model)
{
    check_model(model);
    const Rational base = model.neutral();
    const unsigned precision = 128 + 2 * static_cast<unsigned>(mpz_sizeinbase(model.t.get_mpz_t(), 2) +
                                                             mpz_sizeinbase(base.get_den_mpz_t(), 2));
    const Enclosure nt = pow_enclosure(base, model.t, precision);
    const Rational decisive = model.a + model.r;
    if (decisive == 0) return {{0, 0}, {0, 0}, nt};
    const Rational sa = model.a / decisive, sr = model.r / decisive;
    return {{sa * (1 - nt.hi), sa * (1 - nt.lo)}, {sr * (1 - nt.hi), sr * (1 - nt.lo)}, nt};
}

PromiseProblem expeq_problem(std::uint64_t c)
{
    if (c < 3) throw ParameterError("ExpEQ requires c >= 3");
    // (m, n, t) when w = (a^m b^n)^t with t from the parameters, else nullopt
    auto shape = [c](std::string_view w) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
        std::size_t m = 0;
        while (m < w.size() && w[m] == 'a') ++m;
        std::size_t n = 0;
        while (m + n < w.size() && w[m + n] == 'b') ++n;
        if (m == 0 || n == 0) return std::nullopt;
        const std::size_t period = m + n;
        if (w.size() % period != 0) return std::nullopt;
        const BigNatural t = expeq_params(c, m, n).t;
        if (t != static_cast<unsigned long>(w.size() / period)) return std::nullopt;
        for (std::size_t i = period; i < w.size(); ++i)
            if (w[i] != w[i - period]) return std::nullopt;
        return std::pair{std::uint64_t{m}, std::uint64_t{n}};
    };
    auto yes = [shape](std::string_view w) {
        auto s = shape(w);
        return s && s->first == s->second;
    };
    auto no = [shape](std::string_view w) {
        auto s = shape(w);
        return s && s->first != s->second;
    };
    auto enumerate = [c](std::size_t max_length) {
        std::vector<Instance> out;
        for (std::uint64_t total = 2;; ++total) {
            // t grows with m+n, so stop at the first period that no longer fits
            const BigNatural t = expeq_params(c, 1, total - 1).t;
            if (t * static_cast<unsigned long>(total) > max_length) break;
            const std::size_t reps = mpz_get_ui(t.get_mpz_t());
            for (std::uint64_t m = 1; m < total; ++m) {
                const std::string block = std::string(m, 'a') + std::string(total - m, 'b');
                std::string w;
                w.reserve(block.size() * reps);
                for (std::size_t i = 0; i < reps; ++i) w += block;
                out.push_back({std::move(w), m == total - m ? Classification::yes : Classification::no});
            }
        }
        return out;
    };
    return PromiseProblem("expeq(" + std::to_string(c) + ")", Alphabet{'a', 'b'}, yes, no, enumerate);
}

}  // namespace automata
