#pragma once

// JSON interchange for machines and reports. Rationals travel as "num/den"
// strings and big naturals as decimal strings, so values survive any JSON
// reader unchanged. Keys are emitted in sorted order, which makes the output
// byte-stable.

#include "automata/machines.hpp"
#include "automata/promise.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace automata {

using Json = nlohmann::json;

using AnyMachine = std::variant<OneWayDfa, OneWayNfa, OneWayAfa, TwoWayMachine, OneWayPfa>;

Json to_json(const OneWayDfa& m);
Json to_json(const OneWayNfa& m);
Json to_json(const OneWayAfa& m);
Json to_json(const TwoWayMachine& m);
Json to_json(const OneWayPfa& m);
Json to_json(const AnyMachine& m);

/// Throws FormatError on malformed documents or invalid machines.
AnyMachine machine_from_json(const Json& j);
AnyMachine parse_machine(const std::string& text);

template <typename Machine>
Machine machine_from_json_as(const Json& j)
{
    auto any = machine_from_json(j);
    if (auto* m = std::get_if<Machine>(&any)) return std::move(*m);
    throw FormatError("machine document has an unexpected type");
}

Json to_json(const Measure& m);
Json to_json(const VerificationReport& report);

/// Two-space indented rendering with a trailing newline.
std::string render(const Json& j);

}  // namespace automata
