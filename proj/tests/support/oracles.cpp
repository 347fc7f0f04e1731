#include "oracles.hpp"

#include "hdts/core/constructions.hpp"

#include <algorithm>

namespace oracle
{

std::set< tuple > close_tuples( std::set< tuple > ts )
{
    for ( bool changed = true; changed; )
    {
        changed = false;
        std::set< tuple > add;
        for ( const auto& t : ts )
        {
            auto perm = t.actions;
            std::sort( perm.begin(), perm.end() );
            do
                add.insert( { t.source, perm, t.target } );
            while ( std::next_permutation( perm.begin(), perm.end() ) );
        }
        for ( const auto& t : ts )
        {
            const auto n = t.actions.size();
            if ( n < 3 )
                continue;
            auto segment = [ & ]( std::size_t from, std::size_t to ) {
                return std::vector< action_id >( t.actions.begin() + from, t.actions.begin() + to );
            };
            for ( std::size_t p = 1; p < n; ++p )
                for ( std::size_t q = 1; p + q < n; ++q )
                    for ( const auto& a : ts )
                    {
                        if ( a.source != t.source || a.actions != segment( 0, p ) )
                            continue;
                        const auto nu1 = a.target;
                        if ( !ts.count( { nu1, segment( p, n ), t.target } ) )
                            continue;
                        for ( const auto& c : ts )
                        {
                            if ( c.source != t.source || c.actions != segment( 0, p + q ) )
                                continue;
                            const auto nu2 = c.target;
                            if ( ts.count( { nu2, segment( p + q, n ), t.target } ) )
                                add.insert( { nu1, segment( p, p + q ), nu2 } );
                        }
                    }
        }
        for ( const auto& t : add )
            if ( ts.insert( t ).second )
                changed = true;
    }
    return ts;
}

std::vector< hdts::transition > as_transitions( const std::set< tuple >& ts )
{
    std::set< hdts::transition > out;
    for ( auto t : ts )
    {
        std::sort( t.actions.begin(), t.actions.end() );
        out.insert( { t.source, t.actions, t.target } );
    }
    return { out.begin(), out.end() };
}

namespace
{

// Visits every vector v with v[i] < bound[i].
template < typename F >
void odometer( const std::vector< std::size_t >& bound, F&& visit )
{
    for ( auto b : bound )
        if ( b == 0 )
            return;
    std::vector< std::size_t > v( bound.size(), 0 );
    for ( ;; )
    {
        visit( v );
        std::size_t i = 0;
        while ( i < v.size() && ++v[ i ] == bound[ i ] )
            v[ i++ ] = 0;
        if ( i == v.size() )
            return;
    }
}

} // namespace

std::vector< hdts::hdts_map > all_maps( const hdts::hdts_ptr& x, const hdts::hdts_ptr& y )
{
    std::vector< hdts::hdts_map > out;
    std::vector< std::size_t > bound( x->state_count(), y->state_count() );
    bound.resize( x->state_count() + x->action_count(), y->action_count() );
    odometer( bound, [ & ]( const std::vector< std::size_t >& v ) {
        hdts::hdts_map f{ x, y, {}, {} };
        for ( std::size_t s = 0; s < x->state_count(); ++s )
            f.state_map.push_back( static_cast< state_id >( v[ s ] ) );
        for ( std::size_t u = 0; u < x->action_count(); ++u )
        {
            const auto image = static_cast< action_id >( v[ x->state_count() + u ] );
            if ( y->label_of( image ) != x->label_of( static_cast< action_id >( u ) ) )
                return;
            f.action_map.push_back( image );
        }
        for ( const auto& t : x->transitions() )
            if ( !y->has_transition( f.image( t ) ) )
                return;
        out.push_back( std::move( f ) );
    } );
    return out;
}

std::size_t count_cube_maps( const hdts::hdts_ptr& x, std::size_t n_max )
{
    const auto labels = x->used_labels();
    std::size_t total = 0;
    for ( std::size_t n = 0; n <= n_max; ++n )
        odometer( std::vector< std::size_t >( n, labels.size() ), [ & ]( const std::vector< std::size_t >& v ) {
            hdts::word w;
            for ( auto i : v )
                w.push_back( labels[ i ] );
            total += all_maps( hdts::cube( w ), x ).size();
        } );
    return total;
}

std::vector< hdts::precub_map > all_precub_maps( const hdts::precub_ptr& k, const hdts::precub_ptr& l )
{
    std::vector< std::size_t > bound;
    for ( int n = 0; n <= k->dim_bound(); ++n )
        for ( std::size_t c = 0; c < k->cell_count( n ); ++c )
            bound.push_back( l->cell_count( n ) );
    std::vector< hdts::precub_map > out;
    odometer( bound, [ & ]( const std::vector< std::size_t >& v ) {
        hdts::precub_map f{ k, l, {} };
        std::size_t i = 0;
        for ( int n = 0; n <= k->dim_bound(); ++n )
        {
            f.cell_map.emplace_back();
            for ( std::size_t c = 0; c < k->cell_count( n ); ++c )
                f.cell_map.back().push_back( static_cast< int >( v[ i++ ] ) );
        }
        if ( hdts::is_valid_precub_map( f ) )
            out.push_back( std::move( f ) );
    } );
    return out;
}

} // namespace oracle
