#include "hdts/core/constructions.hpp"

#include <algorithm>
#include <functional>

namespace hdts
{

std::string cube_state_name( unsigned mask, std::size_t n )
{
    if ( n == 0 )
        return "()";
    std::string out( n, '0' );
    for ( std::size_t i = 0; i < n; ++i )
        if ( mask & ( 1u << i ) )
            out[ i ] = '1';
    return out;
}

std::string cube_action_name( const std::string& label, std::size_t i )
{
    return "(" + label + "," + std::to_string( i ) + ")";
}

namespace
{

std::vector< std::string > cube_states( std::size_t n )
{
    std::vector< std::string > states;
    for ( unsigned m = 0; m < ( 1u << n ); ++m )
        states.push_back( cube_state_name( m, n ) );
    return states;
}

std::vector< action > cube_actions( const word& w )
{
    std::vector< action > acts;
    for ( std::size_t i = 0; i < w.size(); ++i )
        acts.push_back( { cube_action_name( w[ i ], i + 1 ), w[ i ] } );
    return acts;
}

std::vector< transition > cube_transitions( std::size_t n )
{
    std::vector< transition > ts;
    const unsigned full = ( 1u << n ) - 1;
    for ( unsigned e = 0; e <= full; ++e )
    {
        const unsigned free = full & ~e;
        for ( unsigned d = free; d != 0; d = ( d - 1 ) & free )
        {
            transition t{ static_cast< state_id >( e ), {}, static_cast< state_id >( e | d ) };
            for ( std::size_t i = 0; i < n; ++i )
                if ( d & ( 1u << i ) )
                    t.actions.push_back( static_cast< action_id >( i ) );
            ts.push_back( std::move( t ) );
        }
    }
    return ts;
}

label_alphabet alphabet_of( const word& w ) { return label_alphabet{ w }; }

} // namespace

hdts_ptr cube( const word& w )
{
    if ( w.size() > 16 )
        throw error( "cube: dimension too large" );
    return make_hdts( alphabet_of( w ), cube_states( w.size() ), cube_actions( w ), cube_transitions( w.size() ) );
}

hdts_ptr cube_boundary( const word& w )
{
    if ( w.empty() )
        throw error( "boundary of C_0 is undefined" );
    if ( w.size() == 1 )
        return make_hdts( alphabet_of( w ), cube_states( 1 ), std::vector< action >{}, std::vector< transition >{} );
    auto ts = cube_transitions( w.size() );
    std::erase_if( ts, [ & ]( const transition& t ) { return t.arity() == w.size(); } );
    return make_hdts( alphabet_of( w ), cube_states( w.size() ), cube_actions( w ), std::move( ts ) );
}

hdts_ptr pure_cube( const word& w )
{
    if ( w.empty() )
        throw error( "pure transition of dimension 0 is undefined" );
    const std::size_t n = w.size();
    transition t{ 0, {}, 1 };
    for ( std::size_t i = 0; i < n; ++i )
        t.actions.push_back( static_cast< action_id >( i ) );
    return make_hdts( alphabet_of( w ), std::vector< std::string >{ cube_state_name( 0, n ),
                                                                    cube_state_name( ( 1u << n ) - 1, n ) },
                      cube_actions( w ), std::vector< transition >{ t } );
}

hdts_ptr doublet( const std::string& x )
{
    return make_hdts( label_alphabet{ { x } }, std::vector< std::string >{ "1", "2", "3", "4" },
                      std::vector< action >{ { x, x } },
                      std::vector< transition >{ { 0, { 0 }, 1 }, { 2, { 0 }, 3 } } );
}

hdts_ptr clique( const std::vector< action >& mu, int dim_bound )
{
    std::vector< std::string > labels;
    for ( const auto& a : mu )
        labels.push_back( a.label );

    std::vector< transition > ts;
    std::vector< action_id > current;
    const auto n = static_cast< action_id >( mu.size() );
    std::function< void( action_id ) > rec = [ & ]( action_id from ) {
        if ( !current.empty() )
            ts.push_back( { 0, current, 0 } );
        if ( static_cast< int >( current.size() ) == dim_bound )
            return;
        for ( action_id u = from; u < n; ++u )
        {
            current.push_back( u );
            rec( u );
            current.pop_back();
        }
    };
    rec( 0 );
    return make_hdts( label_alphabet{ labels }, std::vector< std::string >{ "0" }, mu, std::move( ts ) );
}

hdts_ptr interval( const label_alphabet& sigma, int dim_bound )
{
    std::vector< action > mu;
    for ( const auto& x : sigma.labels() )
        for ( int k = 0; k < 2; ++k )
            mu.push_back( { "(" + x + "," + std::to_string( k ) + ")", x } );
    return clique( mu, dim_bound );
}

hdts_ptr terminal( const label_alphabet& sigma, int dim_bound )
{
    std::vector< action > mu;
    for ( const auto& x : sigma.labels() )
        mu.push_back( { x, x } );
    return clique( mu, dim_bound );
}

hdts_ptr discrete( std::size_t n )
{
    std::vector< std::string > states;
    for ( std::size_t i = 0; i < n; ++i )
        states.push_back( std::to_string( i ) );
    return make_hdts( label_alphabet{}, std::move( states ), std::vector< action >{}, std::vector< transition >{} );
}

hdts_ptr lone_action( const std::string& x )
{
    return make_hdts( label_alphabet{ { x } }, std::vector< std::string >{}, std::vector< action >{ { x, x } },
                      std::vector< transition >{} );
}

hdts_ptr empty_hdts() { return discrete( 0 ); }

hdts_map lone_action_in_cube( const std::string& x )
{
    return { lone_action( x ), cube( { x } ), {}, { 0 } };
}

hdts_map boundary_inclusion( const word& w )
{
    auto b = cube_boundary( w );
    hdts_map f{ b, cube( w ), {}, {} };
    for ( std::size_t s = 0; s < b->state_count(); ++s )
        f.state_map.push_back( static_cast< state_id >( s ) );
    for ( std::size_t u = 0; u < b->action_count(); ++u )
        f.action_map.push_back( static_cast< action_id >( u ) );
    return f;
}

hdts_map pure_inclusion( const word& w )
{
    auto p = pure_cube( w );
    hdts_map f{ p, cube( w ), { 0, static_cast< state_id >( ( 1u << w.size() ) - 1 ) }, {} };
    for ( std::size_t u = 0; u < w.size(); ++u )
        f.action_map.push_back( static_cast< action_id >( u ) );
    return f;
}

hdts_map cube_into_doublet( const std::string& x )
{
    return { cube( { x } ), doublet( x ), { 0, 1 }, { 0 } };
}

} // namespace hdts
