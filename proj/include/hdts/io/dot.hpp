#pragma once

#include "hdts/core/weak_hdts.hpp"
#include "hdts/precub/precub_set.hpp"

#include <string>

namespace hdts::io
{

// The 1-skeleton as a DOT digraph: one node per state in id order, one edge
// per 1-transition labelled "action:label".
std::string to_dot( const weak_hdts& x, const std::string& graph_name = "hdts" );

// Vertices as nodes, each 1-cell as an edge from its 0-face to its 1-face.
std::string to_dot( const precub_set& k, const std::string& graph_name = "precub" );

} // namespace hdts::io
