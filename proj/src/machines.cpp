#include "automata/machines.hpp"

#include "automata/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace automata {

namespace {

std::string state_str(State q) { return std::to_string(q); }

void check_state(State q, std::size_t count, const char* what)
{
    if (q >= count)
        throw ParameterError(std::string(what) + ": state " + state_str(q) + " out of range [0, " +
                             std::to_string(count) + ")");
}

std::vector<bool> membership(std::size_t count, const std::vector<State>& states, const char* what)
{
    std::vector<bool> flags(count, false);
    for (State q : states) {
        check_state(q, count, what);
        flags[q] = true;
    }
    return flags;
}

std::vector<State> members(const std::vector<bool>& flags)
{
    std::vector<State> out;
    for (State q = 0; q < flags.size(); ++q)
        if (flags[q]) out.push_back(q);
    return out;
}

std::vector<std::string> resolve_labels(std::vector<std::string> labels, std::size_t count)
{
    if (labels.empty()) return default_labels(count);
    if (labels.size() != count) throw ParameterError("label count does not match state count");
    return labels;
}

std::size_t symbol_index(const Alphabet& alphabet, char symbol)
{
    auto idx = alphabet.index_of(symbol);
    if (!idx) throw ParameterError(std::string("transition symbol '") + symbol + "' not in alphabet");
    return *idx;
}

void check_nonempty(std::size_t state_count)
{
    if (state_count == 0) throw ParameterError("a machine needs at least one state");
}

}  // namespace

std::vector<std::string> default_labels(std::size_t state_count)
{
    std::vector<std::string> out;
    out.reserve(state_count);
    for (std::size_t i = 0; i < state_count; ++i) out.push_back(std::to_string(i));
    return out;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::initializer_list<char> symbols) : Alphabet(std::vector<char>(symbols)) {}

Alphabet::Alphabet(std::string_view symbols) : Alphabet(std::vector<char>(symbols.begin(), symbols.end())) {}

Alphabet::Alphabet(std::vector<char> symbols) : symbols_(std::move(symbols))
{
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end())
        throw ParameterError("alphabet contains a repeated symbol");
}

std::optional<std::size_t> Alphabet::index_of(char symbol) const
{
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end() || *it != symbol) return std::nullopt;
    return static_cast<std::size_t>(it - symbols_.begin());
}

std::vector<std::size_t> Alphabet::encode(std::string_view word) const
{
    std::vector<std::size_t> out;
    out.reserve(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto idx = index_of(word[i]);
        if (!idx)
            throw InputDomainError(std::string("symbol '") + word[i] + "' at position " + std::to_string(i) +
                                   " is not in the alphabet");
        out.push_back(*idx);
    }
    return out;
}

// ---------------------------------------------------------------- OneWayDfa

OneWayDfa::OneWayDfa(std::size_t state_count, Alphabet alphabet, State initial,
                     std::vector<DfaTransition> transitions, std::vector<State> accepting,
                     std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), initial_(initial)
{
    check_nonempty(state_count);
    check_state(initial, state_count, "dfa initial");
    accepting_ = membership(state_count, accepting, "dfa accepting");
    table_.assign(state_count * alphabet_.size(), std::nullopt);
    for (const auto& t : transitions) {
        check_state(t.from, state_count, "dfa transition source");
        check_state(t.to, state_count, "dfa transition target");
        auto& slot = table_[t.from * alphabet_.size() + symbol_index(alphabet_, t.symbol)];
        if (slot && *slot != t.to)
            throw ParameterError("dfa: two targets for state " + state_str(t.from) + " on '" + t.symbol + "'");
        slot = t.to;
    }
    labels_ = resolve_labels(std::move(labels), state_count);
}

std::optional<State> OneWayDfa::next(State q, std::size_t symbol_index) const
{
    return table_[q * alphabet_.size() + symbol_index];
}

std::optional<State> OneWayDfa::next(State q, char symbol) const
{
    auto idx = alphabet_.index_of(symbol);
    if (!idx) throw InputDomainError(std::string("symbol '") + symbol + "' is not in the alphabet");
    return next(q, *idx);
}

std::vector<DfaTransition> OneWayDfa::transitions() const
{
    std::vector<DfaTransition> out;
    for (State q = 0; q < state_count(); ++q)
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            if (auto to = next(q, a)) out.push_back({q, alphabet_[a], *to});
    return out;
}

std::size_t OneWayDfa::transition_count() const
{
    return static_cast<std::size_t>(
        std::count_if(table_.begin(), table_.end(), [](const auto& slot) { return slot.has_value(); }));
}

std::vector<State> OneWayDfa::accepting_states() const { return members(accepting_); }

// ---------------------------------------------------------------- OneWayNfa

namespace {

std::vector<NfaTransition> normalize(std::vector<NfaTransition> transitions)
{
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    return transitions;
}

std::vector<std::vector<State>> build_adjacency(const std::vector<NfaTransition>& transitions,
                                                std::size_t state_count, const Alphabet& alphabet,
                                                const char* what)
{
    const std::size_t width = alphabet.size() + 1;
    std::vector<std::vector<State>> adjacency(state_count * width);
    for (const auto& t : transitions) {
        check_state(t.from, state_count, what);
        check_state(t.to, state_count, what);
        std::size_t col = t.symbol ? symbol_index(alphabet, *t.symbol) : alphabet.size();
        adjacency[t.from * width + col].push_back(t.to);
    }
    return adjacency;
}

}  // namespace

OneWayNfa::OneWayNfa(std::size_t state_count, Alphabet alphabet, State initial,
                     std::vector<NfaTransition> transitions, std::vector<State> accepting,
                     std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), initial_(initial), transitions_(normalize(std::move(transitions)))
{
    check_nonempty(state_count);
    check_state(initial, state_count, "nfa initial");
    accepting_ = membership(state_count, accepting, "nfa accepting");
    adjacency_ = build_adjacency(transitions_, state_count, alphabet_, "nfa transition");
    labels_ = resolve_labels(std::move(labels), state_count);
}

const std::vector<State>& OneWayNfa::successors(State q, std::size_t symbol_index) const
{
    return adjacency_[q * (alphabet_.size() + 1) + symbol_index];
}

const std::vector<State>& OneWayNfa::epsilon_successors(State q) const
{
    return adjacency_[q * (alphabet_.size() + 1) + alphabet_.size()];
}

std::vector<State> OneWayNfa::accepting_states() const { return members(accepting_); }

bool OneWayNfa::has_epsilon() const
{
    return std::any_of(transitions_.begin(), transitions_.end(), [](const auto& t) { return !t.symbol; });
}

bool OneWayNfa::operator==(const OneWayNfa& other) const
{
    return alphabet_ == other.alphabet_ && initial_ == other.initial_ && accepting_ == other.accepting_ &&
           transitions_ == other.transitions_ && labels_ == other.labels_;
}

// ---------------------------------------------------------------- OneWayAfa

OneWayAfa::OneWayAfa(std::size_t state_count, Alphabet alphabet, State initial,
                     std::vector<NfaTransition> transitions, std::vector<State> accepting,
                     std::vector<State> existential, std::size_t epsilon_chain_bound,
                     std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), initial_(initial), chain_bound_(epsilon_chain_bound),
      transitions_(normalize(std::move(transitions)))
{
    check_nonempty(state_count);
    check_state(initial, state_count, "afa initial");
    accepting_ = membership(state_count, accepting, "afa accepting");
    existential_ = membership(state_count, existential, "afa existential");
    adjacency_ = build_adjacency(transitions_, state_count, alphabet_, "afa transition");
    labels_ = resolve_labels(std::move(labels), state_count);

    for (State q = 0; q < state_count; ++q) {
        if (epsilon_successors(q).empty()) continue;
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            if (!successors(q, a).empty())
                throw ParameterError("afa: state " + state_str(q) + " mixes epsilon and symbol transitions");
    }

    // Longest epsilon chain by DFS with cycle detection; also yields the
    // evaluation order (targets before sources).
    enum class Mark : std::uint8_t { unseen, active, done };
    std::vector<Mark> mark(state_count, Mark::unseen);
    std::vector<std::size_t> depth(state_count, 0);
    std::function<void(State)> visit = [&](State q) {
        mark[q] = Mark::active;
        for (State r : epsilon_successors(q)) {
            if (mark[r] == Mark::active) throw ParameterError("afa: epsilon transitions form a cycle");
            if (mark[r] == Mark::unseen) visit(r);
            depth[q] = std::max(depth[q], depth[r] + 1);
        }
        mark[q] = Mark::done;
        epsilon_order_.push_back(q);
    };
    for (State q = 0; q < state_count; ++q)
        if (mark[q] == Mark::unseen) visit(q);
    longest_chain_ = state_count ? *std::max_element(depth.begin(), depth.end()) : 0;
    if (longest_chain_ > chain_bound_)
        throw ParameterError("afa: epsilon chain of length " + std::to_string(longest_chain_) +
                             " exceeds the declared bound " + std::to_string(chain_bound_));
}

const std::vector<State>& OneWayAfa::successors(State q, std::size_t symbol_index) const
{
    return adjacency_[q * (alphabet_.size() + 1) + symbol_index];
}

const std::vector<State>& OneWayAfa::epsilon_successors(State q) const
{
    return adjacency_[q * (alphabet_.size() + 1) + alphabet_.size()];
}

std::vector<State> OneWayAfa::accepting_states() const { return members(accepting_); }
std::vector<State> OneWayAfa::existential_states() const { return members(existential_); }

OneWayNfa OneWayAfa::as_nfa() const
{
    return OneWayNfa(state_count(), alphabet_, initial_, transitions_, accepting_states(), labels_);
}

bool OneWayAfa::operator==(const OneWayAfa& other) const
{
    return alphabet_ == other.alphabet_ && initial_ == other.initial_ && accepting_ == other.accepting_ &&
           existential_ == other.existential_ && chain_bound_ == other.chain_bound_ &&
           transitions_ == other.transitions_ && labels_ == other.labels_;
}

// ---------------------------------------------------------------- TwoWayMachine

TwoWayMachine::TwoWayMachine(std::size_t state_count, Alphabet alphabet, State initial,
                             std::vector<TwoWayTransition> transitions, std::vector<State> accepting,
                             bool deterministic, std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), initial_(initial), deterministic_(deterministic)
{
    check_nonempty(state_count);
    check_state(initial, state_count, "2way initial");
    accepting_ = membership(state_count, accepting, "2way accepting");
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    transitions_ = std::move(transitions);

    const std::size_t width = alphabet_.size() + 2;
    adjacency_.assign(state_count * width, {});
    for (const auto& t : transitions_) {
        check_state(t.from, state_count, "2way transition");
        check_state(t.to, state_count, "2way transition");
        std::size_t col = 0;
        switch (t.read.kind) {
        case TapeKind::symbol: col = symbol_index(alphabet_, t.read.symbol); break;
        case TapeKind::left_end:
            if (t.move == HeadMove::left) throw ParameterError("2way: transition moves left off |-");
            col = left_end_index();
            break;
        case TapeKind::right_end:
            if (t.move == HeadMove::right) throw ParameterError("2way: transition moves right off -|");
            col = right_end_index();
            break;
        }
        auto& cell = adjacency_[t.from * width + col];
        cell.emplace_back(t.to, t.move);
        if (deterministic_ && cell.size() > 1)
            throw ParameterError("2way: deterministic machine has two moves for state " + state_str(t.from));
    }
    labels_ = resolve_labels(std::move(labels), state_count);
}

const std::vector<std::pair<State, HeadMove>>& TwoWayMachine::moves(State q, std::size_t tape_index) const
{
    return adjacency_[q * (alphabet_.size() + 2) + tape_index];
}

std::vector<State> TwoWayMachine::accepting_states() const { return members(accepting_); }

bool TwoWayMachine::operator==(const TwoWayMachine& other) const
{
    return alphabet_ == other.alphabet_ && initial_ == other.initial_ && accepting_ == other.accepting_ &&
           deterministic_ == other.deterministic_ && transitions_ == other.transitions_ &&
           labels_ == other.labels_;
}

// ---------------------------------------------------------------- OneWayPfa

OneWayPfa::OneWayPfa(std::size_t state_count, Alphabet alphabet, State initial,
                     std::vector<PfaTransition> transitions, std::vector<StateRole> roles,
                     std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)), initial_(initial), roles_(std::move(roles))
{
    check_nonempty(state_count);
    if (roles_.size() != state_count) throw ParameterError("pfa: role count does not match state count");
    check_state(initial, state_count, "pfa initial");
    rows_.assign(state_count * alphabet_.size(), {});
    for (auto& t : transitions) {
        check_state(t.from, state_count, "pfa transition");
        check_state(t.to, state_count, "pfa transition");
        if (t.probability < 0 || t.probability > 1)
            throw ParameterError("pfa: probability " + to_string(t.probability) + " outside [0,1]");
        if (t.probability == 0) continue;  // not executable
        auto& row = rows_[t.from * alphabet_.size() + symbol_index(alphabet_, t.symbol)];
        auto it = std::find_if(row.begin(), row.end(), [&](const Branch& b) { return b.to == t.to; });
        if (it != row.end())
            it->probability += t.probability;
        else
            row.push_back({t.to, t.probability});
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto& row = rows_[i];
        if (row.empty()) continue;
        std::sort(row.begin(), row.end(), [](const Branch& a, const Branch& b) { return a.to < b.to; });
        Rational sum(0);
        for (const auto& b : row) sum += b.probability;
        if (sum != 1)
            throw ParameterError("pfa: probabilities of state " + std::to_string(i / alphabet_.size()) +
                                 " on '" + alphabet_[i % alphabet_.size()] + "' sum to " + to_string(sum));
    }
    labels_ = resolve_labels(std::move(labels), state_count);
}

const std::vector<OneWayPfa::Branch>& OneWayPfa::row(State q, std::size_t symbol_index) const
{
    return rows_[q * alphabet_.size() + symbol_index];
}

std::vector<PfaTransition> OneWayPfa::transitions() const
{
    std::vector<PfaTransition> out;
    for (State q = 0; q < state_count(); ++q)
        for (std::size_t a = 0; a < alphabet_.size(); ++a)
            for (const auto& b : row(q, a)) out.push_back({q, alphabet_[a], b.to, b.probability});
    return out;
}

}  // namespace automata
