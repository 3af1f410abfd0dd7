#pragma once

#include <string>

#include "aoaforge/aoa.hpp"
#include "aoaforge/graph.hpp"

namespace aoaforge {

/// Activity boxes ranked left-to-right by topological level; dummies drawn
/// dashed. Byte-deterministic.
std::string render_dot(const AonDag& g);

/// Event circles labeled by id; real activities as solid edges
/// "label(duration)", dummies dashed. Byte-deterministic.
std::string render_dot(const AoaDag& aoa);

}  // namespace aoaforge
