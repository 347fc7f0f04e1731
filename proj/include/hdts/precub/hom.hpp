#pragma once

#include "hdts/precub/precub_set.hpp"

#include <functional>
#include <limits>

namespace hdts
{

struct precub_hom_options
{
    bool bijective = false;
    // Optional candidate lists allowed[n][x]; empty outer vector = none.
    std::vector< std::vector< std::vector< int > > > allowed;
    std::size_t limit = std::numeric_limits< std::size_t >::max();
    budget limits;
};

// Enumerates maps k -> l. Cells are chosen from the top dimension down; the
// choice of a cell forces its faces and symmetries.
void for_each_precub_hom( const precub_ptr& k, const precub_ptr& l, const precub_hom_options& opt,
                          const std::function< bool( const precub_map& ) >& visit );

std::vector< precub_map > precub_hom_set( const precub_ptr& k, const precub_ptr& l, const precub_hom_options& opt = {} );

std::optional< precub_map > find_precub_isomorphism( const precub_ptr& k, const precub_ptr& l, const budget& b = {} );
inline bool isomorphic_precub( const precub_ptr& k, const precub_ptr& l, const budget& b = {} )
{
    return find_precub_isomorphism( k, l, b ).has_value();
}

// Bijective in every dimension.
bool is_precub_isomorphism( const precub_map& f );

} // namespace hdts
