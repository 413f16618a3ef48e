#pragma once

#include <cstddef>
#include <cstdint>

namespace automata {

/// Resource limits applied by builders, conversions and enumerators.
struct Caps {
    std::size_t max_states = std::size_t{1} << 22;
    std::size_t max_instances = 10'000'000;
    std::uint64_t max_critical_length = 1'000'000;

    /// Defaults overridden by AUTOMATA_MAX_STATES, AUTOMATA_MAX_INSTANCES and
    /// AUTOMATA_MAX_CRITICAL_LENGTH when set.
    static Caps from_environment();
};

}  // namespace automata
