#include "hdts/core/closure.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace hdts
{

namespace
{

using multiset = std::vector< action_id >;

std::vector< state_id > targets_in( const std::set< transition >& ts, state_id source, const multiset& acts )
{
    std::vector< state_id > out;
    for ( auto it = ts.lower_bound( transition{ source, acts, INT_MIN } ); it != ts.end(); ++it )
    {
        if ( it->source != source || it->actions != acts )
            break;
        out.push_back( it->target );
    }
    return out;
}

// Calls visit(A, B, C) for every ordered decomposition of the sorted multiset
// m into three nonempty sub-multisets.
void for_each_split3( const multiset& m, const std::function< void( const multiset&, const multiset&,
                                                                      const multiset& ) >& visit )
{
    std::vector< std::pair< action_id, int > > groups;
    for ( auto u : m )
    {
        if ( !groups.empty() && groups.back().first == u )
            ++groups.back().second;
        else
            groups.emplace_back( u, 1 );
    }

    std::vector< int > a( groups.size() ), b( groups.size() );
    std::function< void( std::size_t ) > rec = [ & ]( std::size_t g ) {
        if ( g == groups.size() )
        {
            multiset ma, mb, mc;
            for ( std::size_t i = 0; i < groups.size(); ++i )
            {
                ma.insert( ma.end(), a[ i ], groups[ i ].first );
                mb.insert( mb.end(), b[ i ], groups[ i ].first );
                mc.insert( mc.end(), groups[ i ].second - a[ i ] - b[ i ], groups[ i ].first );
            }
            if ( !ma.empty() && !mb.empty() && !mc.empty() )
                visit( ma, mb, mc );
            return;
        }
        for ( int i = 0; i <= groups[ g ].second; ++i )
            for ( int j = 0; i + j <= groups[ g ].second; ++j )
            {
                a[ g ] = i;
                b[ g ] = j;
                rec( g + 1 );
            }
    };
    rec( 0 );
}

multiset sum( const multiset& x, const multiset& y )
{
    multiset out;
    std::merge( x.begin(), x.end(), y.begin(), y.end(), std::back_inserter( out ) );
    return out;
}

} // namespace

std::vector< transition > close_composition( std::size_t state_count, std::size_t action_count,
                                             std::vector< transition > seed, const budget& b )
{
    std::set< transition > all;
    for ( auto& t : seed )
    {
        if ( t.source < 0 || static_cast< std::size_t >( t.source ) >= state_count || t.target < 0
             || static_cast< std::size_t >( t.target ) >= state_count )
            throw error( "close_composition: dangling state" );
        for ( auto u : t.actions )
            if ( u < 0 || static_cast< std::size_t >( u ) >= action_count )
                throw error( "close_composition: dangling action" );
        std::sort( t.actions.begin(), t.actions.end() );
        all.insert( std::move( t ) );
    }

    std::size_t derived = 0;
    bool changed = true;
    while ( changed )
    {
        changed = false;
        std::vector< transition > snapshot;
        for ( const auto& t : all )
            if ( t.arity() >= 3 )
                snapshot.push_back( t );

        for ( const auto& m : snapshot )
        {
            for_each_split3( m.actions, [ & ]( const multiset& ma, const multiset& mb, const multiset& mc ) {
                const auto bc = sum( mb, mc );
                const auto ab = sum( ma, mb );
                for ( auto v1 : targets_in( all, m.source, ma ) )
                {
                    if ( !all.contains( transition{ v1, bc, m.target } ) )
                        continue;
                    for ( auto v2 : targets_in( all, m.source, ab ) )
                    {
                        if ( !all.contains( transition{ v2, mc, m.target } ) )
                            continue;
                        if ( all.insert( transition{ v1, mb, v2 } ).second )
                        {
                            changed = true;
                            if ( ++derived > b.max_derived_transitions )
                                throw budget_exceeded( "derived transitions", b.max_derived_transitions );
                        }
                    }
                }
            } );
        }
    }
    return { all.begin(), all.end() };
}

std::string to_string( violation_kind k )
{
    switch ( k )
    {
    case violation_kind::none: return "none";
    case violation_kind::empty_alphabet: return "empty_alphabet";
    case violation_kind::duplicate_id: return "duplicate_id";
    case violation_kind::dangling_state: return "dangling_state";
    case violation_kind::dangling_action: return "dangling_action";
    case violation_kind::label_outside_alphabet: return "label_outside_alphabet";
    case violation_kind::empty_transition: return "empty_transition";
    case violation_kind::non_canonical: return "non_canonical";
    case violation_kind::composition_not_closed: return "composition_not_closed";
    }
    return "unknown";
}

hdts_validation validate( const weak_hdts& x, const budget& b )
{
    hdts_validation out;
    auto closed = close_composition( x.state_count(), x.action_count(), x.transitions(), b );
    if ( closed.size() == x.transition_count() )
        return out;
    for ( const auto& t : closed )
        if ( !x.has_transition( t ) )
        {
            out.valid = false;
            out.kind = violation_kind::composition_not_closed;
            out.message = "derivable transition missing: " + to_string( x, t );
            out.witness = t;
            break;
        }
    return out;
}

namespace
{

hdts_validation reject( violation_kind k, std::string msg )
{
    hdts_validation out;
    out.valid = false;
    out.kind = k;
    out.message = std::move( msg );
    return out;
}

} // namespace

weak_hdts canonicalize( const hdts_candidate& c )
{
    std::map< std::string, state_id > state_index;
    std::map< std::string, action_id > action_index;
    for ( std::size_t i = 0; i < c.states.size(); ++i )
        if ( !state_index.emplace( c.states[ i ], static_cast< state_id >( i ) ).second )
            throw error( "duplicate state id '" + c.states[ i ] + "'" );
    for ( std::size_t i = 0; i < c.actions.size(); ++i )
        if ( !action_index.emplace( c.actions[ i ].name, static_cast< action_id >( i ) ).second )
            throw error( "duplicate action id '" + c.actions[ i ].name + "'" );

    std::vector< transition > ts;
    for ( const auto& rt : c.transitions )
    {
        auto from = state_index.find( rt.from );
        auto to = state_index.find( rt.to );
        if ( from == state_index.end() )
            throw error( "dangling state id '" + rt.from + "'" );
        if ( to == state_index.end() )
            throw error( "dangling state id '" + rt.to + "'" );
        transition t{ from->second, {}, to->second };
        for ( const auto& a : rt.actions )
        {
            auto it = action_index.find( a );
            if ( it == action_index.end() )
                throw error( "dangling action id '" + a + "'" );
            t.actions.push_back( it->second );
        }
        ts.push_back( std::move( t ) );
    }
    return weak_hdts{ label_alphabet{ c.sigma }, c.states, c.actions, std::move( ts ) };
}

hdts_validation validate( const hdts_candidate& c, const budget& b )
{
    if ( c.sigma.empty() )
        return reject( violation_kind::empty_alphabet, "the label alphabet is empty" );
    {
        std::set< std::string > seen( c.sigma.begin(), c.sigma.end() );
        if ( seen.size() != c.sigma.size() )
            return reject( violation_kind::duplicate_id, "duplicate label in alphabet" );
    }
    std::map< std::string, std::size_t > state_index, action_index;
    for ( std::size_t i = 0; i < c.states.size(); ++i )
        if ( !state_index.emplace( c.states[ i ], i ).second )
            return reject( violation_kind::duplicate_id, "duplicate state id '" + c.states[ i ] + "'" );
    const label_alphabet sigma{ c.sigma };
    for ( std::size_t i = 0; i < c.actions.size(); ++i )
    {
        if ( !action_index.emplace( c.actions[ i ].name, i ).second )
            return reject( violation_kind::duplicate_id, "duplicate action id '" + c.actions[ i ].name + "'" );
        if ( !sigma.contains( c.actions[ i ].label ) )
            return reject( violation_kind::label_outside_alphabet,
                           "action '" + c.actions[ i ].name + "' has label '" + c.actions[ i ].label
                                   + "' outside the alphabet" );
    }
    for ( const auto& rt : c.transitions )
    {
        if ( !state_index.contains( rt.from ) )
            return reject( violation_kind::dangling_state, "dangling state id '" + rt.from + "'" );
        if ( !state_index.contains( rt.to ) )
            return reject( violation_kind::dangling_state, "dangling state id '" + rt.to + "'" );
        if ( rt.actions.empty() )
            return reject( violation_kind::empty_transition, "transition without actions" );
        std::size_t prev = 0;
        for ( std::size_t k = 0; k < rt.actions.size(); ++k )
        {
            auto it = action_index.find( rt.actions[ k ] );
            if ( it == action_index.end() )
                return reject( violation_kind::dangling_action, "dangling action id '" + rt.actions[ k ] + "'" );
            if ( k > 0 && it->second < prev )
                return reject( violation_kind::non_canonical,
                               "transition actions not in canonical order from '" + rt.from + "'" );
            prev = it->second;
        }
    }
    return validate( canonicalize( c ), b );
}

hdts_ptr make_closed( label_alphabet sigma, std::vector< std::string > states, std::vector< action > actions,
                      std::vector< transition > transitions, const budget& b )
{
    auto closed = close_composition( states.size(), actions.size(), std::move( transitions ), b );
    return make_hdts( std::move( sigma ), std::move( states ), std::move( actions ), std::move( closed ) );
}

} // namespace hdts
