#include "automata/json_io.hpp"

#include "automata/errors.hpp"

namespace automata {

namespace {

std::string symbol_text(char c) { return std::string(1, c); }

Json alphabet_json(const Alphabet& a)
{
    Json out = Json::array();
    for (char c : a.symbols()) out.push_back(symbol_text(c));
    return out;
}

Json labels_json(const std::vector<std::string>& labels)
{
    Json out = Json::object();
    for (std::size_t q = 0; q < labels.size(); ++q) out[std::to_string(q)] = labels[q];
    return out;
}

Json header(const char* type, std::size_t states, const Alphabet& alphabet, State initial,
            const std::vector<std::string>& labels)
{
    return Json{{"type", type},
                {"states", states},
                {"alphabet", alphabet_json(alphabet)},
                {"initial", initial},
                {"labels", labels_json(labels)}};
}

Json nfa_transitions(const std::vector<NfaTransition>& transitions)
{
    Json out = Json::array();
    for (const auto& t : transitions)
        out.push_back({{"from", t.from}, {"symbol", t.symbol ? symbol_text(*t.symbol) : ""}, {"to", t.to}});
    return out;
}

const char* move_text(HeadMove m)
{
    switch (m) {
    case HeadMove::left: return "L";
    case HeadMove::right: return "R";
    case HeadMove::stay: return "S";
    }
    return "S";
}

std::string tape_text(TapeSymbol s)
{
    switch (s.kind) {
    case TapeKind::left_end: return "|-";
    case TapeKind::right_end: return "-|";
    case TapeKind::symbol: return symbol_text(s.symbol);
    }
    return "";
}

const char* role_text(StateRole r)
{
    switch (r) {
    case StateRole::accepting: return "accepting";
    case StateRole::rejecting: return "rejecting";
    case StateRole::neutral: return "neutral";
    }
    return "neutral";
}

// ---- parsing helpers

char parse_symbol(const Json& j)
{
    const auto s = j.get<std::string>();
    if (s.size() != 1) throw FormatError("symbols must be single characters, got '" + s + "'");
    return s[0];
}

Alphabet parse_alphabet(const Json& j)
{
    std::vector<char> symbols;
    for (const auto& s : j.at("alphabet")) symbols.push_back(parse_symbol(s));
    return Alphabet(std::move(symbols));
}

std::vector<State> parse_states(const Json& j, const char* key)
{
    std::vector<State> out;
    if (j.contains(key))
        for (const auto& q : j.at(key)) out.push_back(q.get<State>());
    return out;
}

std::vector<std::string> parse_labels(const Json& j, std::size_t states)
{
    if (!j.contains("labels") || j.at("labels").empty()) return {};
    auto labels = default_labels(states);
    for (const auto& [key, value] : j.at("labels").items()) {
        std::size_t q = 0;
        try {
            q = std::stoul(key);
        } catch (const std::exception&) {
            throw FormatError("label key '" + key + "' is not a state index");
        }
        if (q >= states) throw FormatError("label for state " + key + " out of range");
        labels[q] = value.get<std::string>();
    }
    return labels;
}

std::vector<NfaTransition> parse_nfa_transitions(const Json& j)
{
    std::vector<NfaTransition> out;
    for (const auto& t : j.at("transitions")) {
        const auto sym = t.at("symbol").get<std::string>();
        if (sym.size() > 1) throw FormatError("symbols must be single characters or \"\" for epsilon");
        out.push_back({t.at("from").get<State>(), sym.empty() ? MaybeSymbol{} : MaybeSymbol{sym[0]},
                       t.at("to").get<State>()});
    }
    return out;
}

TapeSymbol parse_tape(const std::string& s)
{
    if (s == "|-") return TapeSymbol::left_end();
    if (s == "-|") return TapeSymbol::right_end();
    if (s.size() != 1) throw FormatError("tape symbol '" + s + "' is not a symbol or endmarker");
    return TapeSymbol::of(s[0]);
}

HeadMove parse_move(const std::string& s)
{
    if (s == "L") return HeadMove::left;
    if (s == "R") return HeadMove::right;
    if (s == "S") return HeadMove::stay;
    throw FormatError("head move '" + s + "' is not L, R or S");
}

StateRole parse_role(const std::string& s)
{
    if (s == "accepting") return StateRole::accepting;
    if (s == "rejecting") return StateRole::rejecting;
    if (s == "neutral") return StateRole::neutral;
    throw FormatError("state role '" + s + "' is not accepting, rejecting or neutral");
}

AnyMachine build(const Json& j)
{
    const auto type = j.at("type").get<std::string>();
    const auto states = j.at("states").get<std::size_t>();
    const auto alphabet = parse_alphabet(j);
    const auto initial = j.at("initial").get<State>();
    auto labels = parse_labels(j, states);

    if (type == "dfa") {
        std::vector<DfaTransition> tr;
        for (const auto& t : j.at("transitions"))
            tr.push_back({t.at("from").get<State>(), parse_symbol(t.at("symbol")), t.at("to").get<State>()});
        return OneWayDfa(states, alphabet, initial, std::move(tr), parse_states(j, "accepting"), std::move(labels));
    }
    if (type == "nfa")
        return OneWayNfa(states, alphabet, initial, parse_nfa_transitions(j), parse_states(j, "accepting"),
                         std::move(labels));
    if (type == "afa")
        return OneWayAfa(states, alphabet, initial, parse_nfa_transitions(j), parse_states(j, "accepting"),
                         parse_states(j, "existential"), j.at("eps_chain_bound").get<std::size_t>(),
                         std::move(labels));
    if (type == "2way") {
        std::vector<TwoWayTransition> tr;
        for (const auto& t : j.at("transitions"))
            tr.push_back({t.at("from").get<State>(), parse_tape(t.at("read").get<std::string>()),
                          t.at("to").get<State>(), parse_move(t.at("move").get<std::string>())});
        return TwoWayMachine(states, alphabet, initial, std::move(tr), parse_states(j, "accepting"),
                             j.at("deterministic").get<bool>(), std::move(labels));
    }
    if (type == "pfa") {
        std::vector<PfaTransition> tr;
        for (const auto& t : j.at("transitions"))
            tr.push_back({t.at("from").get<State>(), parse_symbol(t.at("symbol")), t.at("to").get<State>(),
                          parse_rational(t.at("probability").get<std::string>())});
        std::vector<StateRole> roles(states, StateRole::neutral);
        for (const auto& [key, value] : j.at("roles").items()) {
            const auto q = std::stoul(key);
            if (q >= states) throw FormatError("role for state " + key + " out of range");
            roles[q] = parse_role(value.get<std::string>());
        }
        return OneWayPfa(states, alphabet, initial, std::move(tr), std::move(roles), std::move(labels));
    }
    throw FormatError("unknown machine type '" + type + "'");
}

}  // namespace

Json to_json(const OneWayDfa& m)
{
    Json j = header("dfa", m.state_count(), m.alphabet(), m.initial(), m.labels());
    j["accepting"] = m.accepting_states();
    Json tr = Json::array();
    for (const auto& t : m.transitions())
        tr.push_back({{"from", t.from}, {"symbol", symbol_text(t.symbol)}, {"to", t.to}});
    j["transitions"] = std::move(tr);
    return j;
}

Json to_json(const OneWayNfa& m)
{
    Json j = header("nfa", m.state_count(), m.alphabet(), m.initial(), m.labels());
    j["accepting"] = m.accepting_states();
    j["transitions"] = nfa_transitions(m.transitions());
    return j;
}

Json to_json(const OneWayAfa& m)
{
    Json j = header("afa", m.state_count(), m.alphabet(), m.initial(), m.labels());
    j["accepting"] = m.accepting_states();
    j["existential"] = m.existential_states();
    j["eps_chain_bound"] = m.epsilon_chain_bound();
    j["transitions"] = nfa_transitions(m.transitions());
    return j;
}

Json to_json(const TwoWayMachine& m)
{
    Json j = header("2way", m.state_count(), m.alphabet(), m.initial(), m.labels());
    j["accepting"] = m.accepting_states();
    j["deterministic"] = m.deterministic();
    Json tr = Json::array();
    for (const auto& t : m.transitions())
        tr.push_back({{"from", t.from}, {"read", tape_text(t.read)}, {"to", t.to}, {"move", move_text(t.move)}});
    j["transitions"] = std::move(tr);
    return j;
}

Json to_json(const OneWayPfa& m)
{
    Json j = header("pfa", m.state_count(), m.alphabet(), m.initial(), m.labels());
    Json roles = Json::object();
    for (State q = 0; q < m.state_count(); ++q) roles[std::to_string(q)] = role_text(m.role(q));
    j["roles"] = std::move(roles);
    Json tr = Json::array();
    for (const auto& t : m.transitions())
        tr.push_back({{"from", t.from},
                      {"symbol", symbol_text(t.symbol)},
                      {"to", t.to},
                      {"probability", to_string(t.probability)}});
    j["transitions"] = std::move(tr);
    return j;
}

Json to_json(const AnyMachine& m)
{
    return std::visit([](const auto& machine) { return to_json(machine); }, m);
}

AnyMachine machine_from_json(const Json& j)
{
    try {
        return build(j);
    } catch (const FormatError&) {
        throw;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed machine document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid machine: ") + e.what());
    }
}

AnyMachine parse_machine(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
    return machine_from_json(j);
}

Json to_json(const Measure& m) { return to_string(m); }

Json to_json(const VerificationReport& report)
{
    Json j{{"verdict", to_string(report.verdict())}};
    if (const auto& c = report.counterexample())
        j["counterexample"] = {{"word", c->word}, {"expected", c->expected}, {"observed", c->observed}};
    Json measured = Json::object();
    for (const auto& [name, value] : report.measured()) measured[name] = to_json(value);
    j["measured"] = std::move(measured);
    return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace automata
