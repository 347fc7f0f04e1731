#pragma once

#include "hdts/core/weak_hdts.hpp"

#include <functional>
#include <limits>

namespace hdts
{

struct hom_options
{
    // Only bijections on states and actions.
    bool bijective = false;
    // Optional per-variable candidate lists (empty outer vector = no
    // restriction; an empty inner list means no candidate).
    std::vector< std::vector< state_id > > allowed_states;
    std::vector< std::vector< action_id > > allowed_actions;
    std::size_t limit = std::numeric_limits< std::size_t >::max();
    budget limits;
};

// All maps x -> y satisfying the options, in lexicographic order of
// (state images, action images) as assigned by the search order.
std::vector< hdts_map > hom_set( const hdts_ptr& x, const hdts_ptr& y, const hom_options& opt = {} );

// Visits maps one by one; returning false from the visitor stops the search.
void for_each_hom( const hdts_ptr& x, const hdts_ptr& y, const hom_options& opt,
                   const std::function< bool( const hdts_map& ) >& visit );

std::optional< hdts_map > find_isomorphism( const hdts_ptr& x, const hdts_ptr& y, const budget& b = {} );
inline bool isomorphic( const hdts_ptr& x, const hdts_ptr& y, const budget& b = {} )
{
    return find_isomorphism( x, y, b ).has_value();
}

// Bijective on states and actions and onto on transitions.
bool is_isomorphism( const hdts_map& f );

// Injective on actions.
bool is_cofibration_hdts( const hdts_map& f );

// Arrow-category isomorphism: isomorphisms a: dom f -> dom g and
// b: cod f -> cod g with b f = g a.
bool isomorphic_arrows( const hdts_map& f, const hdts_map& g, const budget& b = {} );

} // namespace hdts
