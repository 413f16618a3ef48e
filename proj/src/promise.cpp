#include "automata/promise.hpp"

namespace automata {

std::string to_string(Classification c) { return c == Classification::yes ? "yes" : "no"; }

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::solves: return "solves";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_string(const Measure& m)
{
    return std::visit([](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>)
            return v;
        else
            return automata::to_string(v);
    }, m);
}

PromiseProblem::PromiseProblem(std::string name, Alphabet alphabet, Predicate yes, Predicate no,
                               Enumerator enumerate)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), yes_(std::move(yes)), no_(std::move(no)),
      enumerate_(std::move(enumerate))
{
}

std::optional<Classification> PromiseProblem::classify(std::string_view w) const
{
    if (is_yes(w)) return Classification::yes;
    if (is_no(w)) return Classification::no;
    return std::nullopt;
}

PromiseProblem unary_problem(std::string name, char symbol, std::function<bool(std::size_t)> yes,
                             std::function<bool(std::size_t)> no)
{
    auto unary_length = [symbol](std::string_view w) -> std::optional<std::size_t> {
        for (char c : w)
            if (c != symbol) return std::nullopt;
        return w.size();
    };
    auto yes_pred = [=](std::string_view w) {
        auto len = unary_length(w);
        return len && yes(*len);
    };
    auto no_pred = [=](std::string_view w) {
        auto len = unary_length(w);
        return len && no(*len);
    };
    auto enumerate = [=](std::size_t max_length) {
        std::vector<Instance> out;
        for (std::size_t len = 0; len <= max_length; ++len) {
            if (yes(len))
                out.push_back({std::string(len, symbol), Classification::yes});
            else if (no(len))
                out.push_back({std::string(len, symbol), Classification::no});
        }
        return out;
    };
    return PromiseProblem(std::move(name), Alphabet{symbol}, yes_pred, no_pred, enumerate);
}

VerificationReport VerificationReport::solves() { return VerificationReport(Verdict::solves, std::nullopt); }

VerificationReport VerificationReport::fails(Counterexample counterexample)
{
    return VerificationReport(Verdict::fails, std::move(counterexample));
}

VerificationReport VerificationReport::inconclusive()
{
    return VerificationReport(Verdict::inconclusive, std::nullopt);
}

VerificationReport& VerificationReport::measure(const std::string& name, Measure value)
{
    measured_[name] = std::move(value);
    return *this;
}

VerificationReport& VerificationReport::measure(const std::string& name, std::size_t value)
{
    measured_[name] = BigNatural(static_cast<unsigned long>(value));
    return *this;
}

const Measure* VerificationReport::find(const std::string& name) const
{
    auto it = measured_.find(name);
    return it == measured_.end() ? nullptr : &it->second;
}

VerificationReport disjointness_check(const PromiseProblem& problem, std::size_t max_length)
{
    std::size_t checked = 0;
    for (const auto& inst : problem.instances(max_length)) {
        ++checked;
        if (problem.is_yes(inst.word) && problem.is_no(inst.word))
            return VerificationReport::fails({inst.word, "exactly one of yes/no", "both"}).measure("checked", checked);
    }
    return VerificationReport::solves().measure("checked", checked);
}

}  // namespace automata
