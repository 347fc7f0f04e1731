#pragma once

#include "hdts/homotopy/generators.hpp"

namespace hdts
{

// One attachment: the pushout of `generator` along `attaching` into the
// previous stage. `inclusion` is the pushout leg from the previous stage to
// `stage`, and `cell` the leg from the codomain of the generator.
struct cell_attachment
{
    std::string generator_name;
    hdts_map generator;
    hdts_map attaching;
    hdts_map inclusion;
    hdts_map cell;
    hdts_ptr stage;
};

// f = terminal o (inclusion_k o ... o inclusion_1), terminal an isomorphism.
struct cell_factorization
{
    hdts_map input;
    std::vector< cell_attachment > cells;
    hdts_map terminal;
};

// Factors a cofibration between cubical systems through pushouts of the maps
// C, R, boundary inclusions of cubes and C_1[x] -> doublet[x]: first R and C
// cells make the map bijective on states, then one boundary cell of dimension
// 1 per missing action, a doublet cell followed by two R cells per missing
// 1-transition, and boundary cells of dimension n >= 2 per missing
// n-transition. Throws hdts::error on non-cofibrations or non-cubical input.
cell_factorization cellularize( const hdts_map& f, const budget& b = {} );

struct replay_report
{
    bool ok = true;
    std::string message;
};

// Recomputes every pushout from the recorded generator and attaching map,
// checks it against the recorded stage, and checks that the composite of the
// inclusions followed by the terminal isomorphism is the input map.
replay_report replay( const cell_factorization& c, const budget& b = {} );

} // namespace hdts
