#pragma once

#include <map>
#include <string>
#include <vector>

#include "aoaforge/aoa.hpp"
#include "aoaforge/graph.hpp"

namespace aoaforge {

struct CpmResult {
  std::map<int, int> early;  // event id → earliest occurrence time
  std::map<int, int> late;   // event id → latest occurrence time
  std::map<std::string, int> total_float;  // per arc label, dummies included
  int makespan = 0;
  // Real activities along the lexicographically least zero-float
  // source→sink walk; the zero-duration dummies the walk crosses are
  // dropped from the report.
  std::vector<std::string> critical;
};

/// Forward/backward pass over the event network.
CpmResult schedule(const AoaDag& aoa);

/// Longest path through the node-weighted precedence dag; equals the
/// network makespan for any faithful conversion.
int aon_longest_path(const AonDag& g);

}  // namespace aoaforge
