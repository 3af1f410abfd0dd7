#pragma once

#include <cstdint>

#include "aoaforge/schedule.hpp"

namespace aoaforge {

/// Random layered table: activities a1..an; each ordered pair (ai, aj) with
/// i < j becomes a precedence independently with the given probability, so
/// the result is always acyclic. Durations are uniform in [0, 9]. The raw
/// engine draws are used directly (no distribution adapters), so one seed
/// produces one byte-identical table on every platform.
ScheduleTable generate_random_table(int n, double density, std::uint64_t seed);

}  // namespace aoaforge
