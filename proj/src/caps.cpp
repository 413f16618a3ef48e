#include "automata/caps.hpp"

#include "automata/errors.hpp"

#include <cstdlib>
#include <string>

namespace automata {

namespace {

template <typename T>
void override_from(const char* name, T& field)
{
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return;
    try {
        std::size_t used = 0;
        auto value = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument(raw);
        field = static_cast<T>(value);
    } catch (const std::exception&) {
        throw ParameterError(std::string(name) + " must be a natural number, got '" + raw + "'");
    }
}

}  // namespace

Caps Caps::from_environment()
{
    Caps caps;
    override_from("AUTOMATA_MAX_STATES", caps.max_states);
    override_from("AUTOMATA_MAX_INSTANCES", caps.max_instances);
    override_from("AUTOMATA_MAX_CRITICAL_LENGTH", caps.max_critical_length);
    return caps;
}

}  // namespace automata
