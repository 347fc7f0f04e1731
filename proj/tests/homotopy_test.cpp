#include "support/corpus.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/cubes.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/core/limits.hpp"
#include "hdts/homotopy/cellularize.hpp"
#include "hdts/homotopy/equivalence.hpp"
#include "hdts/homotopy/fibrancy.hpp"
#include "hdts/homotopy/generators.hpp"
#include "hdts/homotopy/lifting.hpp"
#include "hdts/homotopy/pushout_product.hpp"
#include "hdts/homotopy/reflections.hpp"
#include "hdts/precub/constructions.hpp"
#include "hdts/precub/hom.hpp"
#include "hdts/precub/operations.hpp"
#include "hdts/realize/realize.hpp"

#include <doctest.h>

using namespace hdts;

namespace
{

const instantiation one_label{ { "x" }, 1 };

std::vector< std::string > names_of( const std::vector< hdts::named_map >& ms )
{
    std::vector< std::string > out;
    for ( const auto& m : ms )
        out.push_back( m.name );
    return out;
}

} // namespace

TEST_SUITE( "homotopy" )
{

TEST_CASE( "generator families" )
{
    const instantiation inst{ { "a", "b" }, 2 };
    // C, R, two boundaries of 1-cubes, four of 2-cubes, two doublet maps.
    const auto i = hdts_family( family_tag::i_hdts, inst );
    CHECK( i.size() == 2 + 2 + 4 + 2 );
    const auto plus = hdts_family( family_tag::i_plus, inst );
    CHECK( plus.size() == i.size() + 4 );
    for ( const auto& m : plus )
    {
        INFO( m.name );
        CHECK( is_valid_map( m.map ) );
    }
    for ( const auto& m : i )
        CHECK( is_cofibration_hdts( m.map ) );

    CHECK( hdts_family( family_tag::s_family, inst ).size() == 2 );
    for ( const auto& m : hdts_family( family_tag::s_cof, inst ) )
    {
        CHECK( is_cofibration_hdts( m.map ) );
        CHECK( satisfies_csa1( *csa1_reflect( m.map.codomain ).object ) );
    }
    CHECK( precub_family( inst ).size() == 2 + 2 + 4 );
}

TEST_CASE( "pushout-products" )
{
    const auto sq = pushout_product( standard_boundary_inclusion( { "a", "b" } ), corner::gamma );
    CHECK( is_valid_precub_map( sq ) );
    CHECK( is_cofibration_precub( sq ) );

    // The cylinder of the empty system is empty, so the corners of C are the
    // identity of the point and R.
    for ( auto k : { corner::gamma0, corner::gamma1 } )
        CHECK( isomorphic_arrows( pushout_product( generator_c(), k ), identity_map( cube( {} ) ) ) );
    CHECK( isomorphic_arrows( pushout_product( generator_c(), corner::gamma ), generator_r() ) );
    const auto r = pushout_product( generator_r(), corner::gamma );
    CHECK( is_valid_map( r ) );
    CHECK( is_cofibration_hdts( r ) );
}

TEST_CASE( "lambda slices" )
{
    const auto l0 = lambda_generate( std::nullopt, family_tag::i_hdts, 0, one_label );
    // Eight corners of C, R, boundary[x] and doublet[x], three up to isomorphism.
    CHECK( l0.size() == 3 );
    for ( const auto& m : l0 )
    {
        INFO( m.name );
        CHECK( ( m.name.ends_with( "*gamma0" ) || m.name.ends_with( "*gamma1" ) ) );
    }

    const auto l1 = lambda_generate( std::nullopt, family_tag::i_hdts, 1, one_label );
    CHECK( l1.size() == 5 );
    for ( const auto& m : l0 )
    {
        bool found = false;
        for ( const auto& n : l1 )
            found = found || isomorphic_arrows( m.map, n.map );
        CHECK( found );
    }

    const auto with_s = lambda_generate( family_tag::s_family, family_tag::i_hdts, 0, one_label );
    const auto names = names_of( with_s );
    CHECK( std::find( names.begin(), names.end(), "p[x]" ) != names.end() );
}

TEST_CASE( "lifts against the interval object" )
{
    // g labels the four edges of the boundary of a square in the interval
    // object; a filler exists exactly when opposite edges carry the same
    // letter of the interval.
    const word w{ "x", "y" };
    const label_alphabet sigma{ w };
    const auto boundary = standard_boundary( w );
    const auto square = standard_cube( w );
    const auto v = precub_interval( sigma, 2 );
    const auto t = precub_terminal( sigma, 2 );
    const auto incl = standard_boundary_inclusion( w );
    const auto proj = precub_hom_set( v, t );
    REQUIRE( proj.size() == 1 );
    const auto bottom = precub_hom_set( square, t );
    REQUIRE( bottom.size() == 1 );

    auto edge = [ & ]( int i, int alpha ) { return standard_cell( face_arrow( 2, i, alpha ) ); };
    std::size_t squares = 0, with_lift = 0;
    for ( const auto& g : precub_hom_set( boundary, v ) )
    {
        ++squares;
        const bool opposite_equal = g.cell_map[ 1 ][ edge( 1, 0 ) ] == g.cell_map[ 1 ][ edge( 1, 1 ) ]
                                    && g.cell_map[ 1 ][ edge( 2, 0 ) ] == g.cell_map[ 1 ][ edge( 2, 1 ) ];
        const auto lifts = lift_search( precub_lifting_square{ incl, proj[ 0 ], g, bottom[ 0 ] } );
        CHECK( lifts.empty() == !opposite_equal );
        if ( !lifts.empty() )
        {
            ++with_lift;
            CHECK( lifts.size() == 1 );
        }
    }
    CHECK( squares == 16 );
    CHECK( with_lift == 4 );
}

TEST_CASE( "identity squares and label-injective targets have unique lifts" )
{
    const auto d = doublet( "x" );
    const lifting_square id{ identity_map( d ), identity_map( d ), identity_map( d ), identity_map( d ) };
    CHECK( lift_search( id ).size() == 1 );

    // p_x against a label-injective target: every map from C1 + C1 extends
    // uniquely along p_x.
    const auto target = bls_reflect( cylinder_hdts( doublet( "x" ) ).object ).object;
    REQUIRE( label_injective( *target ) );
    const auto v = check_orthogonal( p_map( "x" ), target );
    CHECK( v.holds );
}

TEST_CASE( "CSA1 reflection" )
{
    const auto c1 = cube( { "x" } );
    CHECK( isomorphic( csa1_reflect( cylinder_hdts( c1 ).object ).object, c1 ) );
    const auto d = doublet( "x" );
    CHECK( is_isomorphism( csa1_reflect( d ).unit ) );
    CHECK( isomorphic( csa1_reflect( p_cof_map( "x" ).codomain ).object, d ) );

    for ( const auto& [ name, x ] : corpus::objects() )
    {
        INFO( name );
        const auto r = csa1_reflect( x );
        CHECK( satisfies_csa1( *r.object ) );
        CHECK( is_cubical( *r.object ) );
        for ( unsigned seed : { 1u, 2u, 3u } )
            CHECK( isomorphic( csa1_reflect( x, {}, seed ).object, r.object ) );
        CHECK( weak_equiv( r.unit, model::cts ).equivalent );
    }
}

TEST_CASE( "label reflection" )
{
    const auto two = coproduct( { cube( { "x" } ), cube( { "x" } ) } ).object;
    const auto r = bls_reflect( two );
    CHECK( r.object->state_count() == 4 );
    CHECK( r.object->action_count() == 1 );
    CHECK( r.object->transition_count() == 2 );

    const auto c2 = cube( { "a", "b" } );
    CHECK( is_isomorphism( bls_reflect( c2 ).unit ) );

    const auto cb = bls_reflect( cubify( cube_boundary( { "x", "y" } ) ).object );
    CHECK( cb.object->action_count() == 2 );
    CHECK( isomorphic( cb.object, cube_boundary( { "x", "y" } ) ) );

    for ( const auto& [ name, x ] : corpus::objects() )
    {
        INFO( name );
        const auto b = bls_reflect( x );
        CHECK( label_injective( *b.object ) );
        CHECK( satisfies_csa1( *b.object ) );
        CHECK( weak_equiv( b.unit, model::localized ).equivalent );
    }
}

TEST_CASE( "homotopies" )
{
    const auto c1 = cube( { "x" } );
    const auto cyl = cylinder_hdts( c1 );
    CHECK( homotopic( cyl.gamma0, cyl.gamma1 ) );
    for ( const auto& f : hom_set( c1, doublet( "x" ) ) )
        CHECK( homotopic( f, f ) );
    const auto two = hom_set( c1, doublet( "x" ) );
    REQUIRE( two.size() == 2 );
    CHECK_FALSE( homotopic( two[ 0 ], two[ 1 ] ) );
}

TEST_CASE( "weak equivalences" )
{
    const auto c1 = cube( { "x" } );
    CHECK( weak_equiv( cylinder_hdts( c1 ).sigma, model::cts ).equivalent );
    CHECK_FALSE( weak_equiv( p_map( "x" ), model::cts ).equivalent );
    CHECK( weak_equiv( p_map( "x" ), model::localized ).equivalent );
    for ( auto m : { model::cts, model::cts_plus, model::localized } )
        CHECK( weak_equiv( identity_map( doublet( "x" ) ), m ).equivalent );
    CHECK_THROWS_AS( weak_equiv( identity_map( pure_cube( { "a", "b" } ) ), model::cts ), error );

    const auto collapse = cylinder_precub( standard_cube( { "x" } ) ).sigma;
    CHECK( weak_equiv_precub_localized( collapse ).equivalent );
    CHECK( weak_equiv_precub_localized( identity_precub_map( standard_cube( { "a", "b" } ) ) ).equivalent );
    CHECK_FALSE( weak_equiv_precub_localized( standard_boundary_inclusion( { "x", "y" } ) ).equivalent );
}

TEST_CASE( "realization preserves weak equivalences" )
{
    for ( const auto& k : { standard_cube( { "x" } ), standard_cube( { "a", "b" } ), standard_boundary( { "a", "b" } ) } )
    {
        const auto ck = cylinder_precub( k );
        const auto tk = realize( k );
        const auto tc = realize( ck.object );
        const auto ts = realize_map( ck.sigma, tc, tk );
        CHECK( weak_equiv( ts, model::cts ).equivalent );
    }
}

TEST_CASE( "cellular factorizations" )
{
    const auto a = cellularize( { empty_hdts(), cube( { "x" } ), {}, {} } );
    std::vector< std::string > names;
    for ( const auto& c : a.cells )
        names.push_back( c.generator_name );
    CHECK( names == std::vector< std::string >{ "C", "C", "boundary[x]" } );
    CHECK( replay( a ).ok );

    const auto b = cellularize( cube_into_doublet( "x" ) );
    REQUIRE( b.cells.size() == 1 );
    CHECK( b.cells[ 0 ].generator_name == "doublet[x]" );

    const auto c = cellularize( corpus::points_and_edge_into_doublet() );
    names.clear();
    for ( const auto& cell : c.cells )
        names.push_back( cell.generator_name );
    CHECK( names == std::vector< std::string >{ "doublet[x]", "R", "R" } );
    CHECK( replay( c ).ok );

    CHECK_THROWS_AS( cellularize( p_map( "x" ) ), error );
}

TEST_CASE( "fibrancy" )
{
    const auto d = doublet( "x" );
    CHECK( fibrancy_certificate( d, model::cts ).status == fibrancy_status::fibrant );
    CHECK( fibrancy_certificate( d, model::cts_plus ).status == fibrancy_status::fibrant );

    // Objects in the image of the label reflection are orthogonal to S_cof.
    for ( const auto& [ name, x ] : corpus::objects() )
    {
        if ( x->state_count() > 8 )
            continue;
        INFO( name );
        const auto b = bls_reflect( x ).object;
        for ( const auto& m : hdts_family( family_tag::s_cof, { b->used_labels(), 1 } ) )
            CHECK( check_orthogonal( m.map, b ).holds );
    }

    // Two edges with the same label cannot be separated in the localized model.
    const auto two = coproduct( { cube( { "x" } ), cube( { "x" } ) } ).object;
    const auto refuted = fibrancy_refute( two, model::localized, 0 );
    CHECK( refuted.status == fibrancy_status::not_fibrant );
    CHECK( refuted.witness == "p_cof[x]" );
    CHECK( fibrancy_certificate( two, model::localized ).status == fibrancy_status::unknown );

    // The refuter never fires on CSA1 objects.
    for ( const auto& x : { d, cube( { "x" } ), cube( { "x", "y" } ), bls_reflect( corpus::loop() ).object } )
        for ( auto m : { model::cts, model::localized } )
            CHECK( fibrancy_refute( x, m, 2 ).status != fibrancy_status::not_fibrant );
}

}
