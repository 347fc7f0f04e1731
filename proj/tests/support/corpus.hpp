#pragma once

// Shared fixtures: small cubical systems and cofibrations between them.

#include "hdts/core/weak_hdts.hpp"
#include "hdts/precub/precub_set.hpp"

#include <string>
#include <vector>

namespace corpus
{

struct named_object
{
    std::string name;
    hdts::hdts_ptr object;
};

struct named_map
{
    std::string name;
    hdts::hdts_map map;
};

// C_1[x] + C_1[x] glued along their common action: the doublet.
hdts::hdts_map shared_action_pushout_leg();

// Two squares on [x,y] glued along one edge.
hdts::hdts_ptr squares_along_edge();

// C_1[x] with its two states identified.
hdts::hdts_ptr loop();

// C_0 + C_0 + C_1[x] -> doublet[x], the points going to the free ends.
hdts::hdts_map points_and_edge_into_doublet();

// Two standard squares on [x,y] glued along their boundary.
hdts::precub_ptr double_square();

// At least 20 cubical systems.
const std::vector< named_object >& objects();

// At least 10 cofibrations between cubical systems.
const std::vector< named_map >& cofibrations();

// Maps between cubical systems, not all cofibrations, for the deciders.
const std::vector< named_map >& maps();

} // namespace corpus
