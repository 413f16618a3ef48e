#pragma once

#include "automata/errors.hpp"
#include "automata/machines.hpp"
#include "automata/numeric.hpp"
#include "automata/simulate.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace automata {

enum class Classification { yes, no };

std::string to_string(Classification c);

struct Instance {
    std::string word;
    Classification expected;
    bool operator==(const Instance&) const = default;
};

/// A pair of disjoint languages given by membership predicates, together
/// with an enumerator of all promise instances up to a length bound.
class PromiseProblem {
public:
    using Predicate = std::function<bool(std::string_view)>;
    using Enumerator = std::function<std::vector<Instance>(std::size_t max_length)>;

    PromiseProblem(std::string name, Alphabet alphabet, Predicate yes, Predicate no, Enumerator enumerate);

    const std::string& name() const { return name_; }
    const Alphabet& alphabet() const { return alphabet_; }
    bool is_yes(std::string_view w) const { return yes_(w); }
    bool is_no(std::string_view w) const { return no_(w); }
    /// Classification of `w`, or nullopt when it lies outside the promise.
    std::optional<Classification> classify(std::string_view w) const;
    std::vector<Instance> instances(std::size_t max_length) const { return enumerate_(max_length); }
    bool is_unary() const { return alphabet_.size() == 1; }

private:
    std::string name_;
    Alphabet alphabet_;
    Predicate yes_;
    Predicate no_;
    Enumerator enumerate_;
};

/// Unary problem whose membership depends only on the length; the
/// enumerator walks lengths 0..max_length.
PromiseProblem unary_problem(std::string name, char symbol, std::function<bool(std::size_t)> yes,
                             std::function<bool(std::size_t)> no);

enum class Verdict { solves, fails, inconclusive };

std::string to_string(Verdict v);

struct Counterexample {
    std::string word;
    std::string expected;
    std::string observed;
    bool operator==(const Counterexample&) const = default;
};

using Measure = std::variant<Rational, BigNatural, std::string>;

/// Outcome of an experiment. A counterexample is present exactly when the
/// verdict is `fails`.
class VerificationReport {
public:
    static VerificationReport solves();
    static VerificationReport fails(Counterexample counterexample);
    static VerificationReport inconclusive();

    Verdict verdict() const { return verdict_; }
    bool ok() const { return verdict_ == Verdict::solves; }
    const std::optional<Counterexample>& counterexample() const { return counterexample_; }
    const std::map<std::string, Measure>& measured() const { return measured_; }

    VerificationReport& measure(const std::string& name, Measure value);
    VerificationReport& measure(const std::string& name, std::size_t value);
    const Measure* find(const std::string& name) const;

private:
    VerificationReport(Verdict v, std::optional<Counterexample> c) : verdict_(v), counterexample_(std::move(c)) {}

    Verdict verdict_;
    std::optional<Counterexample> counterexample_;
    std::map<std::string, Measure> measured_;
};

std::string to_string(const Measure& m);

template <typename Machine>
concept Acceptor = requires(const Machine& m, std::string_view w) {
    { accepts(m, w) } -> std::convertible_to<bool>;
    { m.alphabet() } -> std::convertible_to<const Alphabet&>;
};

/// Checks that `machine` accepts every yes-instance and rejects every
/// no-instance of length <= max_length; the first violation is reported.
template <Acceptor Machine>
VerificationReport promise_check(const Machine& machine, const PromiseProblem& problem, std::size_t max_length)
{
    if (!(machine.alphabet() == problem.alphabet()))
        throw InputDomainError("promise_check: machine and problem alphabets differ");
    std::size_t yes = 0, no = 0;
    for (const auto& inst : problem.instances(max_length)) {
        const bool accepted = accepts(machine, inst.word);
        const bool wanted = inst.expected == Classification::yes;
        (wanted ? yes : no) += 1;
        if (accepted != wanted)
            return VerificationReport::fails({inst.word, to_string(inst.expected), accepted ? "accept" : "reject"})
                .measure("yes_instances", yes)
                .measure("no_instances", no);
    }
    return VerificationReport::solves().measure("yes_instances", yes).measure("no_instances", no).measure(
        "max_length", max_length);
}

/// Asserts that no enumerated word satisfies both predicates.
VerificationReport disjointness_check(const PromiseProblem& problem, std::size_t max_length);

}  // namespace automata
