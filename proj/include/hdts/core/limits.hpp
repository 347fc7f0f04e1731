#pragma once

#include "hdts/core/weak_hdts.hpp"

#include <map>
#include <utility>

namespace hdts
{

// Binary product: states are all pairs, actions are the pairs with equal
// labels, and a multiset of paired actions is a transition iff both of its
// projections are transitions.
struct product_result
{
    hdts_ptr object;
    hdts_map first;
    hdts_map second;
    // Action of the product for a pair of actions with equal labels.
    std::map< std::pair< action_id, action_id >, action_id > action_of;

    [[nodiscard]] state_id state_of( state_id x, state_id y ) const
    {
        return static_cast< state_id >( x * static_cast< state_id >( second.codomain->state_count() ) + y );
    }
};

product_result product( const hdts_ptr& x, const hdts_ptr& y, const budget& b = {} );

// The map (f, g): Z -> X x Y.
hdts_map pairing( const product_result& p, const hdts_map& f, const hdts_map& g );

// A finite diagram of systems.
struct diagram
{
    struct arrow
    {
        std::size_t from;
        std::size_t to;
        hdts_map map;
    };

    std::vector< hdts_ptr > objects;
    std::vector< arrow > arrows;

    std::size_t add_object( hdts_ptr x )
    {
        objects.push_back( std::move( x ) );
        return objects.size() - 1;
    }
    void add_arrow( std::size_t from, std::size_t to, hdts_map f ) { arrows.push_back( { from, to, std::move( f ) } ); }
};

struct colimit_result
{
    hdts_ptr object;
    std::vector< hdts_map > cocone;
};

// States and actions are the disjoint unions modulo the equivalence generated
// by the arrows; names are "i.name" with i the object index, the class taking
// the name of its smallest member. Transitions are the composition closure of
// the images. Classes are ordered by their smallest member.
colimit_result colimit( const diagram& d, const budget& b = {} );

// The unique map out of a colimit agreeing with a compatible cone. Throws
// hdts::error when the cone is not compatible or the result is not a map.
hdts_map induced_map( const colimit_result& c, const hdts_ptr& apex, const std::vector< hdts_map >& cone );

colimit_result coproduct( const std::vector< hdts_ptr >& xs, const budget& b = {} );

// Pushout of B <-f- A -g-> C; the cocone is indexed A, B, C.
colimit_result pushout( const hdts_map& f, const hdts_map& g, const budget& b = {} );

// Quotient of x by the equivalences generated by the given pairs; names of
// classes are those of their smallest members.
struct quotient_result
{
    hdts_ptr object;
    hdts_map unit;
};

quotient_result quotient( const hdts_ptr& x, const std::vector< std::pair< state_id, state_id > >& state_pairs,
                          const std::vector< std::pair< action_id, action_id > >& action_pairs,
                          const budget& b = {} );

// The map from the image of a quotient: given g: x -> z constant on the
// classes of q.unit, returns the map q.object -> z.
hdts_map factor_through_quotient( const quotient_result& q, const hdts_map& g );

} // namespace hdts
