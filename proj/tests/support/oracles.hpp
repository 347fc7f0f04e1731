#pragma once

// Independent brute-force procedures the library results are checked against.

#include "hdts/core/weak_hdts.hpp"
#include "hdts/precub/precub_set.hpp"

#include <set>
#include <vector>

namespace oracle
{

using hdts::action_id;
using hdts::state_id;

// (source, u_1, ..., u_n, target) with the actions in order.
struct tuple
{
    state_id source;
    std::vector< action_id > actions;
    state_id target;

    auto operator<=>( const tuple& ) const = default;
};

// Closes a set of ordered tuples under permutation of the actions and under
// the five-tuple composition rule with p, q >= 1 and p + q < n, iterating
// until nothing changes.
std::set< tuple > close_tuples( std::set< tuple > ts );

// The sorted multisets of a set of tuples, as transitions.
std::vector< hdts::transition > as_transitions( const std::set< tuple >& ts );

// Every map x -> y found by trying all functions on states and on actions.
std::vector< hdts::hdts_map > all_maps( const hdts::hdts_ptr& x, const hdts::hdts_ptr& y );

// The number of maps C_n[w] -> x over all words w on the labels of x and all
// n <= n_max.
std::size_t count_cube_maps( const hdts::hdts_ptr& x, std::size_t n_max );

// Every precubical map k -> l found by trying all functions dimensionwise.
std::vector< hdts::precub_map > all_precub_maps( const hdts::precub_ptr& k, const hdts::precub_ptr& l );

} // namespace oracle
