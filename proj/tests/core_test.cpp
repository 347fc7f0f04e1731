#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include "hdts/core/closure.hpp"
#include "hdts/core/constructions.hpp"
#include "hdts/core/cubes.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/core/limits.hpp"
#include "hdts/homotopy/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace hdts;

namespace
{

std::set< oracle::tuple > as_tuples( const std::vector< transition >& ts )
{
    std::set< oracle::tuple > out;
    for ( const auto& t : ts )
        out.insert( { t.source, t.actions, t.target } );
    return out;
}

std::size_t ordered_count( const transition& t )
{
    auto a = t.actions;
    std::size_t n = 0;
    do
        ++n;
    while ( std::next_permutation( a.begin(), a.end() ) );
    return n;
}

} // namespace

TEST_SUITE( "core" )
{

TEST_CASE( "a 3-cube and the empty system are valid" )
{
    CHECK( validate( *cube( { "a", "b", "c" } ) ).valid );
    CHECK( validate( *empty_hdts() ).valid );
}

TEST_CASE( "removing a derived transition from C4 is reported with that transition" )
{
    const auto c4 = cube( { "a", "b", "c", "d" } );
    const auto& ts = c4->transitions();
    // A 2-transition not starting at the origin nor ending at the top is a
    // middle one.
    const auto it = std::find_if( ts.begin(), ts.end(), [ & ]( const transition& t ) {
        return t.arity() == 2 && t.source != 0 && t.target != 15;
    } );
    REQUIRE( it != ts.end() );
    const auto removed = *it;
    std::vector< transition > rest;
    std::copy_if( ts.begin(), ts.end(), std::back_inserter( rest ), [ & ]( const auto& t ) { return t != removed; } );

    const auto closed = oracle::as_transitions( oracle::close_tuples( as_tuples( rest ) ) );
    REQUIRE( std::find( closed.begin(), closed.end(), removed ) != closed.end() );

    const weak_hdts broken{ c4->sigma(), c4->state_names(), c4->actions(), rest };
    const auto v = validate( broken );
    CHECK_FALSE( v.valid );
    CHECK( v.kind == violation_kind::composition_not_closed );
    REQUIRE( v.witness.has_value() );
    CHECK( *v.witness == removed );
}

TEST_CASE( "dangling references are rejected" )
{
    hdts_candidate c;
    c.sigma = { "x" };
    c.states = { "0" };
    c.actions = { { "u", "x" } };
    c.transitions = { { "0", { "u" }, "7" } };
    CHECK( validate( c ).kind == violation_kind::dangling_state );
    c.transitions = { { "0", { "v" }, "0" } };
    CHECK( validate( c ).kind == violation_kind::dangling_action );
}

TEST_CASE( "closure leaves low arities alone" )
{
    const auto b = cube_boundary( { "x", "y" } );
    CHECK( close_composition( b->state_count(), b->action_count(), b->transitions() ) == b->transitions() );
}

TEST_CASE( "one composition instance adds exactly its middle tuple" )
{
    // alpha = 0, nu1 = 1, nu2 = 2, beta = 3 and u1, u2, u3 = 0, 1, 2.
    const std::vector< transition > seed = {
        { 0, { 0, 1, 2 }, 3 }, { 0, { 0 }, 1 }, { 1, { 1, 2 }, 3 }, { 0, { 0, 1 }, 2 }, { 2, { 2 }, 3 },
    };
    auto closed = close_composition( 4, 3, seed );
    const auto expected = oracle::as_transitions( oracle::close_tuples( as_tuples( seed ) ) );
    CHECK( closed == expected );
    CHECK( closed.size() == seed.size() + 1 );
    CHECK( std::find( closed.begin(), closed.end(), transition{ 1, { 1 }, 2 } ) != closed.end() );
}

TEST_CASE( "closure agrees with the ordered-tuple oracle on random seeds and is idempotent" )
{
    std::mt19937 rng{ 20261015 };
    for ( int round = 0; round < 200; ++round )
    {
        const std::size_t states = 4, actions = 4;
        std::vector< transition > seed;
        const int count = 4 + static_cast< int >( rng() % 10 );
        for ( int k = 0; k < count; ++k )
        {
            transition t;
            t.source = static_cast< state_id >( rng() % states );
            t.target = static_cast< state_id >( rng() % states );
            const auto arity = 1 + rng() % 4;
            for ( unsigned a = 0; a < arity; ++a )
                t.actions.push_back( static_cast< action_id >( rng() % actions ) );
            std::sort( t.actions.begin(), t.actions.end() );
            seed.push_back( t );
        }
        std::sort( seed.begin(), seed.end() );
        seed.erase( std::unique( seed.begin(), seed.end() ), seed.end() );
        const auto closed = close_composition( states, actions, seed );
        CHECK( closed == oracle::as_transitions( oracle::close_tuples( as_tuples( seed ) ) ) );
        CHECK( close_composition( states, actions, closed ) == closed );
    }
}

TEST_CASE( "basic constructions" )
{
    const auto c = cube( { "a", "b" } );
    CHECK( c->state_count() == 4 );
    CHECK( c->action_count() == 2 );
    CHECK( c->count_of_arity( 1 ) == 4 );
    CHECK( c->count_of_arity( 2 ) == 1 );
    for ( const auto& t : c->transitions() )
        if ( t.arity() == 2 )
            CHECK( ordered_count( t ) == 2 );

    const auto c0 = cube( {} );
    CHECK( c0->state_count() == 1 );
    CHECK( c0->action_count() == 0 );
    CHECK( c0->transition_count() == 0 );

    const auto d = doublet( "x" );
    CHECK( d->state_names() == std::vector< std::string >{ "1", "2", "3", "4" } );
    CHECK( d->action_count() == 1 );
    CHECK( d->transitions() == std::vector< transition >{ { 0, { 0 }, 1 }, { 2, { 0 }, 3 } } );

    CHECK_THROWS_AS( cube_boundary( {} ), error );
    CHECK_THROWS_AS( pure_cube( {} ), error );
}

TEST_CASE( "cubicality" )
{
    CHECK( is_cubical( *cube_boundary( { "x", "y" } ) ) );
    CHECK_FALSE( is_cubical( *pure_cube( { "a", "b" } ) ) );
    CHECK( is_cubical( *cube( {} ) ) );
    CHECK( is_cubical( *cube( { "a" } ) ) );
    CHECK( is_cubical( *cube( { "a", "b" } ) ) );
    CHECK( is_cubical( *cube( { "a", "b", "c" } ) ) );
    for ( const auto& [ name, x ] : corpus::objects() )
    {
        INFO( name );
        CHECK( is_cubical( *x ) );
        CHECK( validate( *x ).valid );
    }
}

TEST_CASE( "cubical coreflection" )
{
    const auto ext = coreflect_cubical( pure_cube( { "a", "b" } ) );
    CHECK( ext.object->state_count() == 2 );
    CHECK( ext.object->action_count() == 0 );
    CHECK( is_valid_map( ext.inclusion ) );

    const auto b = cube_boundary( { "x", "y" } );
    CHECK( *coreflect_cubical( b ).object == *b );
    const auto c = cube( { "a", "b", "c" } );
    CHECK( *coreflect_cubical( c ).object == *c );

    const auto again = coreflect_cubical( ext.object );
    CHECK( is_cubical( *again.object ) );
    CHECK( *again.object == *ext.object );
}

TEST_CASE( "products" )
{
    const auto v = interval( label_alphabet{ { "x" } } );
    const auto p = product( v, cube( { "x" } ) );
    CHECK( p.object->state_count() == 2 );
    CHECK( p.object->action_count() == 2 );
    CHECK( p.object->count_of_arity( 1 ) == 2 );
    CHECK( is_valid_map( p.first ) );
    CHECK( is_valid_map( p.second ) );

    const auto c2 = cube( { "x", "y" } );
    CHECK( isomorphic( product( c2, terminal( label_alphabet{ { "x", "y" } } ) ).object, c2 ) );

    const auto xy = product( cube( { "x" } ), cube( { "y" } ) );
    CHECK( xy.object->state_count() == 4 );
    CHECK( xy.object->action_count() == 0 );
    CHECK( xy.object->transition_count() == 0 );

    // Pairing two maps into the factors lands in the product.
    const auto d = doublet( "x" );
    const auto q = product( d, d );
    for ( const auto& f : hom_set( cube( { "x" } ), d ) )
        for ( const auto& g : hom_set( cube( { "x" } ), d ) )
        {
            const auto h = pairing( q, f, g );
            CHECK( is_valid_map( h ) );
            CHECK( same_map( compose( q.first, h ), f ) );
            CHECK( same_map( compose( q.second, h ), g ) );
        }
}

TEST_CASE( "colimits" )
{
    const auto glued = pushout( lone_action_in_cube( "x" ), lone_action_in_cube( "x" ) );
    CHECK( glued.object->state_count() == 4 );
    CHECK( glued.object->action_count() == 1 );
    CHECK( glued.object->transition_count() == 2 );
    CHECK( isomorphic( glued.object, doublet( "x" ) ) );
    for ( const auto& leg : glued.cocone )
        CHECK( is_valid_map( leg ) );

    CHECK( coproduct( { cube( {} ), cube( {} ) } ).object->state_count() == 2 );

    const auto incl = boundary_inclusion( { "a", "b" } );
    const auto sq = pushout( incl, incl );
    CHECK( isomorphic( sq.object, cube( { "a", "b" } ) ) );
    CHECK( is_cubical( *sq.object ) );
    CHECK( is_cubical( *corpus::squares_along_edge() ) );
}

TEST_CASE( "a cone factors uniquely through the colimit" )
{
    const auto glued = pushout( lone_action_in_cube( "x" ), lone_action_in_cube( "x" ) );
    const auto c1 = cube( { "x" } );
    const auto target = coproduct( { c1, c1 } ).object;
    // Cones: pairs of maps C1 -> target agreeing on the shared action.
    std::size_t cones = 0;
    for ( const auto& f : hom_set( c1, target ) )
        for ( const auto& g : hom_set( c1, target ) )
        {
            if ( f.action_map != g.action_map )
                continue;
            ++cones;
            std::size_t factorizations = 0;
            for ( const auto& h : hom_set( glued.object, target ) )
                if ( same_map( compose( h, glued.cocone[ 1 ] ), f ) && same_map( compose( h, glued.cocone[ 2 ] ), g ) )
                    ++factorizations;
            CHECK( factorizations == 1 );
            const auto h = induced_map( glued, target, { compose( f, lone_action_in_cube( "x" ) ), f, g } );
            CHECK( is_valid_map( h ) );
        }
    CHECK( cones > 0 );
}

TEST_CASE( "cube maps agree with brute force" )
{
    const auto c1 = cube( { "x" } );
    const auto m1 = enumerate_cube_maps( c1, 1 );
    CHECK( std::count_if( m1.begin(), m1.end(), []( const cube_map& c ) { return c.dim() == 1; } ) == 1 );
    CHECK( std::count_if( m1.begin(), m1.end(), []( const cube_map& c ) { return c.dim() == 0; } ) == 2 );

    const auto b = cube_boundary( { "x", "y" } );
    const auto mb = enumerate_cube_maps( b, 2 );
    CHECK( std::count_if( mb.begin(), mb.end(), []( const cube_map& c ) { return c.dim() == 1; } ) == 4 );
    CHECK( std::count_if( mb.begin(), mb.end(), []( const cube_map& c ) { return c.dim() == 2; } ) == 0 );
    CHECK( enumerate_cube_maps( b, 3 ).size() == mb.size() );

    for ( const auto& [ name, x ] : corpus::objects() )
    {
        if ( x->state_count() > 8 || x->max_arity() > 2 )
            continue;
        INFO( name );
        const auto n = std::min< std::size_t >( x->max_arity(), 2 );
        CHECK( enumerate_cube_maps( x, n ).size() == oracle::count_cube_maps( x, n ) );
    }
}

TEST_CASE( "cubification" )
{
    const auto cb = cubify( cube_boundary( { "x", "y" } ) );
    CHECK( cb.object->state_count() == 4 );
    CHECK( cb.object->action_count() == 4 );
    CHECK( isomorphic( cubify( doublet( "x" ) ).object, coproduct( { cube( { "x" } ), cube( { "x" } ) } ).object ) );
    for ( const auto& w : std::vector< word >{ {}, { "a" }, { "a", "b" }, { "a", "b", "c" } } )
        CHECK( isomorphic( cubify( cube( w ) ).object, cube( w ) ) );
}

TEST_CASE( "hom sets agree with brute force" )
{
    const auto d = doublet( "x" );
    CHECK( hom_set( cube( {} ), d ).size() == d->state_count() );
    CHECK( hom_set( cube( { "x" } ), d ).size() == 2 );
    CHECK( hom_set( cube( { "x" } ), cube( {} ) ).empty() );

    const auto& objs = corpus::objects();
    for ( const auto& [ xn, x ] : objs )
        for ( const auto& [ yn, y ] : objs )
        {
            if ( x->state_count() + x->action_count() > 6 || y->state_count() > 4 || y->action_count() > 4 )
                continue;
            INFO( xn << " -> " << yn );
            CHECK( hom_set( x, y ).size() == oracle::all_maps( x, y ).size() );
        }
}

TEST_CASE( "isomorphisms and cofibrations" )
{
    const auto d = doublet( "x" );
    CHECK( is_isomorphism( identity_map( d ) ) );
    CHECK_FALSE( is_isomorphism( p_map( "x" ) ) );
    for ( int n = 1; n <= 3; ++n )
        CHECK( is_cofibration_hdts( boundary_inclusion( word( static_cast< std::size_t >( n ), "x" ) ) ) );
    CHECK_FALSE( is_cofibration_hdts( p_map( "x" ) ) );
    CHECK( is_cofibration_hdts( generator_r() ) );
    for ( const auto& [ name, f ] : corpus::cofibrations() )
    {
        INFO( name );
        CHECK( is_valid_map( f ) );
        CHECK( is_cofibration_hdts( f ) );
    }
}

TEST_CASE( "a map bijective on states and actions is injective on transitions" )
{
    for ( const auto& [ name, x ] : corpus::objects() )
    {
        if ( x->state_count() > 8 )
            continue;
        for ( const auto& f : hom_set( x, x ) )
        {
            if ( std::set( f.state_map.begin(), f.state_map.end() ).size() != x->state_count()
                 || std::set( f.action_map.begin(), f.action_map.end() ).size() != x->action_count() )
                continue;
            std::set< transition > image;
            for ( const auto& t : x->transitions() )
                image.insert( f.image( t ) );
            CHECK( image.size() == x->transition_count() );
        }
    }
}

}
