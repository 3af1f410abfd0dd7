#include "aoaforge/gen.hpp"

#include <random>

#include "aoaforge/errors.hpp"

namespace aoaforge {

ScheduleTable generate_random_table(int n, double density,
                                    std::uint64_t seed) {
  if (n < 1) throw ValidationError("node count must be at least 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ValidationError("density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto unit = [&] { return (rng() >> 11) * 0x1.0p-53; };

  std::vector<int> durations(n);
  for (int i = 0; i < n; ++i) durations[i] = static_cast<int>(rng() % 10);

  std::vector<std::vector<int>> preds(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit() < density) preds[j].push_back(i);
    }
  }

  auto name = [](int i) { return "a" + std::to_string(i + 1); };
  ScheduleTable t;
  for (int j = 0; j < n; ++j) {
    ScheduleRow row;
    row.code = name(j);
    row.duration = durations[j];
    for (int i : preds[j]) row.predecessors.push_back(name(i));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace aoaforge
