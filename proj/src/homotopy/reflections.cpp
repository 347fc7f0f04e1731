#include "hdts/homotopy/reflections.hpp"

#include "hdts/core/limits.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace hdts
{

std::vector< csa1_witness > csa1_violations( const weak_hdts& x )
{
    std::map< std::pair< state_id, state_id >, std::vector< action_id > > parallel;
    for ( const auto& t : x.transitions() )
        if ( t.arity() == 1 )
            parallel[ { t.source, t.target } ].push_back( t.actions[ 0 ] );

    std::set< std::tuple< action_id, action_id, state_id, state_id > > found;
    for ( const auto& [ ends, acts ] : parallel )
        for ( std::size_t i = 0; i < acts.size(); ++i )
            for ( std::size_t j = i + 1; j < acts.size(); ++j )
                if ( acts[ i ] != acts[ j ] && x.label_of( acts[ i ] ) == x.label_of( acts[ j ] ) )
                    found.emplace( std::min( acts[ i ], acts[ j ] ), std::max( acts[ i ], acts[ j ] ), ends.first, ends.second );

    std::vector< csa1_witness > out;
    for ( auto [ u, v, s, t ] : found )
        out.push_back( { u, v, s, t } );
    return out;
}

reflection csa1_reflect( const hdts_ptr& x, const budget& b, std::optional< unsigned > seed )
{
    std::optional< std::mt19937 > rng;
    if ( seed )
        rng.emplace( *seed );
    reflection out{ x, identity_map( x ) };
    for ( ;; )
    {
        const auto v = csa1_violations( *out.object );
        if ( v.empty() )
            return out;
        std::size_t pick = 0;
        if ( rng )
            pick = std::uniform_int_distribution< std::size_t >{ 0, v.size() - 1 }( *rng );
        auto q = quotient( out.object, {}, { { v[ pick ].first, v[ pick ].second } }, b );
        out.unit = compose( q.unit, out.unit );
        out.object = q.object;
    }
}

reflection bls_reflect( const hdts_ptr& x, const budget& b )
{
    std::map< std::string, action_id > first;
    std::vector< std::pair< action_id, action_id > > pairs;
    for ( action_id u = 0; u < static_cast< action_id >( x->action_count() ); ++u )
    {
        auto [ it, fresh ] = first.emplace( x->label_of( u ), u );
        if ( !fresh )
            pairs.emplace_back( it->second, u );
    }
    if ( pairs.empty() )
        return { x, identity_map( x ) };
    auto q = quotient( x, {}, pairs, b );
    return { q.object, q.unit };
}

bool label_injective( const weak_hdts& x )
{
    std::set< std::string > labels;
    for ( const auto& a : x.actions() )
        if ( !labels.insert( a.label ).second )
            return false;
    return true;
}

hdts_map reflect_map( const reflection& rx, const reflection& ry, const hdts_map& f )
{
    const colimit_result along_unit{ rx.object, { rx.unit } };
    return induced_map( along_unit, ry.object, { compose( ry.unit, f ) } );
}

hdts_map csa1_map( const hdts_map& f, const budget& b )
{
    return reflect_map( csa1_reflect( f.domain, b ), csa1_reflect( f.codomain, b ), f );
}

hdts_map bls_map( const hdts_map& f, const budget& b )
{
    return reflect_map( bls_reflect( f.domain, b ), bls_reflect( f.codomain, b ), f );
}

} // namespace hdts
