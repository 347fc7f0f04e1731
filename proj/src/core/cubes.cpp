#include "hdts/core/cubes.hpp"

#include "hdts/core/closure.hpp"
#include "hdts/core/constructions.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/core/limits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hdts
{

namespace
{

unsigned insert_bit( unsigned mask, std::size_t i, int alpha )
{
    // i is 1-based; coordinates >= i move up by one.
    const unsigned low = mask & ( ( 1u << ( i - 1 ) ) - 1 );
    const unsigned high = ( mask >> ( i - 1 ) ) << i;
    return low | high | ( alpha ? ( 1u << ( i - 1 ) ) : 0u );
}

unsigned swap_bits( unsigned mask, std::size_t i )
{
    const unsigned a = ( mask >> ( i - 1 ) ) & 1u;
    const unsigned b = ( mask >> i ) & 1u;
    mask &= ~( ( 1u << ( i - 1 ) ) | ( 1u << i ) );
    return mask | ( b << ( i - 1 ) ) | ( a << i );
}

} // namespace

hdts_map cube_face_inclusion( const word& w, std::size_t i, int alpha )
{
    if ( i < 1 || i > w.size() )
        throw error( "cube face index out of range" );
    word v = w;
    v.erase( v.begin() + static_cast< std::ptrdiff_t >( i - 1 ) );
    hdts_map f{ cube( v ), cube( w ), {}, {} };
    for ( unsigned m = 0; m < ( 1u << v.size() ); ++m )
        f.state_map.push_back( static_cast< state_id >( insert_bit( m, i, alpha ) ) );
    for ( std::size_t k = 1; k <= v.size(); ++k )
        f.action_map.push_back( static_cast< action_id >( k < i ? k - 1 : k ) );
    return f;
}

hdts_map cube_swap( const word& w, std::size_t i )
{
    if ( i < 1 || i >= w.size() )
        throw error( "cube symmetry index out of range" );
    word v = w;
    std::swap( v[ i - 1 ], v[ i ] );
    hdts_map f{ cube( v ), cube( w ), {}, {} };
    for ( unsigned m = 0; m < ( 1u << w.size() ); ++m )
        f.state_map.push_back( static_cast< state_id >( swap_bits( m, i ) ) );
    for ( std::size_t k = 1; k <= w.size(); ++k )
    {
        std::size_t j = k;
        if ( k == i )
            j = i + 1;
        else if ( k == i + 1 )
            j = i;
        f.action_map.push_back( static_cast< action_id >( j - 1 ) );
    }
    return f;
}

cube_map cube_face( const cube_map& c, std::size_t i, int alpha )
{
    auto inc = cube_face_inclusion( c.w, i, alpha );
    word v = c.w;
    v.erase( v.begin() + static_cast< std::ptrdiff_t >( i - 1 ) );
    inc.codomain = c.map.domain;
    return { v, compose( c.map, inc ) };
}

cube_map cube_symmetry( const cube_map& c, std::size_t i )
{
    auto sw = cube_swap( c.w, i );
    word v = c.w;
    std::swap( v[ i - 1 ], v[ i ] );
    sw.codomain = c.map.domain;
    return { v, compose( c.map, sw ) };
}

std::vector< cube_map > enumerate_cube_maps( const hdts_ptr& x, std::size_t n_max, const budget& b )
{
    std::vector< cube_map > out;
    auto point = cube( {} );
    for ( std::size_t s = 0; s < x->state_count(); ++s )
        out.push_back( { {}, { point, x, { static_cast< state_id >( s ) }, {} } } );

    std::map< word, hdts_ptr > cubes;
    for ( std::size_t n = 1; n <= n_max; ++n )
        for ( const auto& t : x->transitions() )
        {
            if ( t.arity() != n )
                continue;
            auto perm = t.actions;
            do
            {
                word w;
                for ( auto u : perm )
                    w.push_back( x->label_of( u ) );
                auto& c = cubes[ w ];
                if ( !c )
                    c = cube( w );

                hom_options opt;
                opt.limits = b;
                opt.allowed_actions.resize( n );
                for ( std::size_t k = 0; k < n; ++k )
                    opt.allowed_actions[ k ] = { perm[ k ] };
                opt.allowed_states.resize( c->state_count() );
                for ( std::size_t s = 0; s < c->state_count(); ++s )
                    for ( std::size_t y = 0; y < x->state_count(); ++y )
                        opt.allowed_states[ s ].push_back( static_cast< state_id >( y ) );
                opt.allowed_states.front() = { t.source };
                opt.allowed_states.back() = { t.target };
                for ( auto& f : hom_set( c, x, opt ) )
                    out.push_back( { w, std::move( f ) } );
            } while ( std::next_permutation( perm.begin(), perm.end() ) );
        }
    return out;
}

cubical_verdict check_cubical( const weak_hdts& x )
{
    std::vector< bool > used( x.action_count(), false );
    for ( const auto& t : x.transitions() )
        if ( t.arity() == 1 )
            used[ t.actions.front() ] = true;
    for ( std::size_t u = 0; u < used.size(); ++u )
        if ( !used[ u ] )
            return { false, "action " + x.action_at( static_cast< action_id >( u ) ).name + " is not used" };

    for ( const auto& t : x.transitions() )
    {
        if ( t.arity() < 2 )
            continue;
        std::vector< std::pair< action_id, int > > groups;
        for ( auto u : t.actions )
        {
            if ( !groups.empty() && groups.back().first == u )
                ++groups.back().second;
            else
                groups.emplace_back( u, 1 );
        }
        std::vector< int > take( groups.size(), 0 );
        bool ok = true;
        std::function< void( std::size_t ) > rec = [ & ]( std::size_t g ) {
            if ( !ok )
                return;
            if ( g == groups.size() )
            {
                std::vector< action_id > a, rest;
                for ( std::size_t k = 0; k < groups.size(); ++k )
                {
                    a.insert( a.end(), take[ k ], groups[ k ].first );
                    rest.insert( rest.end(), groups[ k ].second - take[ k ], groups[ k ].first );
                }
                if ( a.empty() || rest.empty() )
                    return;
                for ( auto nu : x.targets( t.source, a ) )
                    if ( x.has_transition( { nu, rest, t.target } ) )
                        return;
                ok = false;
                return;
            }
            for ( int k = 0; k <= groups[ g ].second; ++k )
            {
                take[ g ] = k;
                rec( g + 1 );
            }
        };
        rec( 0 );
        if ( !ok )
            return { false, "transition " + to_string( x, t ) + " has no intermediate state" };
    }
    return {};
}

coreflect_result coreflect_cubical( const hdts_ptr& x, const budget& b )
{
    const auto cubes = enumerate_cube_maps( x, x->max_arity(), b );
    std::set< action_id > kept_actions;
    std::set< transition > kept;
    for ( const auto& c : cubes )
    {
        for ( auto u : c.map.action_map )
            kept_actions.insert( u );
        for ( const auto& t : c.map.domain->transitions() )
            kept.insert( c.map.image( t ) );
    }

    std::vector< action_id > new_id( x->action_count(), -1 );
    std::vector< action > acts;
    hdts_map inclusion{ nullptr, x, {}, {} };
    for ( auto u : kept_actions )
    {
        new_id[ u ] = static_cast< action_id >( acts.size() );
        acts.push_back( x->action_at( u ) );
        inclusion.action_map.push_back( u );
    }
    for ( std::size_t s = 0; s < x->state_count(); ++s )
        inclusion.state_map.push_back( static_cast< state_id >( s ) );

    std::vector< transition > seed;
    for ( auto t : kept )
    {
        for ( auto& u : t.actions )
            u = new_id[ u ];
        seed.push_back( std::move( t ) );
    }
    auto closed = close_composition( x->state_count(), acts.size(), std::move( seed ), b );
    auto object = make_hdts( x->sigma(), x->state_names(), std::move( acts ), std::move( closed ) );
    inclusion.domain = object;
    return { object, std::move( inclusion ) };
}

cubify_result cubify( const hdts_ptr& x, const budget& b )
{
    cubify_result out;
    out.cubes = enumerate_cube_maps( x, x->max_arity(), b );

    using key = std::pair< std::vector< state_id >, std::vector< action_id > >;
    std::map< key, std::size_t > index;
    diagram d;
    for ( std::size_t k = 0; k < out.cubes.size(); ++k )
    {
        index[ { out.cubes[ k ].map.state_map, out.cubes[ k ].map.action_map } ] = k;
        d.add_object( out.cubes[ k ].map.domain );
    }
    auto lookup = [ & ]( const cube_map& c ) {
        auto it = index.find( { c.map.state_map, c.map.action_map } );
        if ( it == index.end() )
            throw error( "cubify: a face of a cube is missing from the enumeration" );
        return it->second;
    };
    for ( std::size_t k = 0; k < out.cubes.size(); ++k )
    {
        const auto& c = out.cubes[ k ];
        for ( std::size_t i = 1; i <= c.dim(); ++i )
            for ( int alpha = 0; alpha < 2; ++alpha )
            {
                auto inc = cube_face_inclusion( c.w, i, alpha );
                inc.codomain = c.map.domain;
                const auto from = lookup( cube_face( c, i, alpha ) );
                inc.domain = d.objects[ from ];
                d.add_arrow( from, k, std::move( inc ) );
            }
        for ( std::size_t i = 1; i < c.dim(); ++i )
        {
            auto sw = cube_swap( c.w, i );
            sw.codomain = c.map.domain;
            const auto from = lookup( cube_symmetry( c, i ) );
            sw.domain = d.objects[ from ];
            d.add_arrow( from, k, std::move( sw ) );
        }
    }

    auto col = colimit( d, b );
    std::vector< hdts_map > cone;
    for ( const auto& c : out.cubes )
        cone.push_back( c.map );
    out.counit = induced_map( col, x, cone );
    out.object = col.object;
    return out;
}

} // namespace hdts
