#include "corpus.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/cubes.hpp"
#include "hdts/core/limits.hpp"
#include "hdts/homotopy/generators.hpp"
#include "hdts/homotopy/pushout_product.hpp"
#include "hdts/precub/constructions.hpp"
#include "hdts/precub/operations.hpp"
#include "hdts/realize/realize.hpp"

namespace corpus
{

using namespace hdts;

hdts_map shared_action_pushout_leg()
{
    auto c = pushout( lone_action_in_cube( "x" ), lone_action_in_cube( "x" ) );
    return c.cocone[ 1 ];
}

hdts_ptr squares_along_edge()
{
    // Glued along the face y = 0.
    const auto edge = cube_face_inclusion( { "x", "y" }, 2, 0 );
    return pushout( edge, edge ).object;
}

hdts_ptr loop()
{
    return quotient( cube( { "x" } ), { { 0, 1 } }, {} ).object;
}

hdts_map points_and_edge_into_doublet()
{
    const auto pt = cube( {} );
    const auto c1 = cube( { "x" } );
    const auto d = doublet( "x" );
    const auto co = coproduct( { pt, pt, c1 } );
    return induced_map( co, d,
                        { hdts_map{ pt, d, { 0 }, {} }, hdts_map{ pt, d, { 1 }, {} }, hdts_map{ c1, d, { 2, 3 }, { 0 } } } );
}

precub_ptr double_square()
{
    const auto incl = standard_boundary_inclusion( { "x", "y" } );
    return pushout_precub( incl, incl ).object;
}

const std::vector< named_object >& objects()
{
    static const std::vector< named_object > out = [] {
        std::vector< named_object > v;
        v.push_back( { "C0", cube( {} ) } );
        v.push_back( { "C1[x]", cube( { "x" } ) } );
        v.push_back( { "C2[x,y]", cube( { "x", "y" } ) } );
        v.push_back( { "C2[x,x]", cube( { "x", "x" } ) } );
        v.push_back( { "C3[a,b,c]", cube( { "a", "b", "c" } ) } );
        v.push_back( { "boundary C2[x,y]", cube_boundary( { "x", "y" } ) } );
        v.push_back( { "boundary C2[x,x]", cube_boundary( { "x", "x" } ) } );
        v.push_back( { "boundary C3[a,b,c]", cube_boundary( { "a", "b", "c" } ) } );
        v.push_back( { "doublet[x]", doublet( "x" ) } );
        v.push_back( { "C1[x]+C1[x]", coproduct( { cube( { "x" } ), cube( { "x" } ) } ).object } );
        v.push_back( { "C1[x]+C1[y]", coproduct( { cube( { "x" } ), cube( { "y" } ) } ).object } );
        v.push_back( { "cyl C1[x]", cylinder_hdts( cube( { "x" } ) ).object } );
        v.push_back( { "cyl C2[x,y]", cylinder_hdts( cube( { "x", "y" } ) ).object } );
        v.push_back( { "cyl doublet[x]", cylinder_hdts( doublet( "x" ) ).object } );
        v.push_back( { "cub boundary C2[x,y]", cubify( cube_boundary( { "x", "y" } ) ).object } );
        v.push_back( { "T boundary square", realize( standard_boundary( { "x", "y" } ) ).object } );
        v.push_back( { "T square", realize( standard_cube( { "x", "y" } ) ).object } );
        v.push_back( { "p_cof target", p_cof_map( "x" ).codomain } );
        v.push_back( { "squares along an edge", squares_along_edge() } );
        v.push_back( { "two points", discrete( 2 ) } );
        v.push_back( { "empty", empty_hdts() } );
        v.push_back( { "loop", loop() } );
        v.push_back( { "V", interval( label_alphabet{ { "x" } }, 2 ) } );
        v.push_back( { "terminal", terminal( label_alphabet{ { "x", "y" } }, 2 ) } );
        return v;
    }();
    return out;
}

const std::vector< named_map >& cofibrations()
{
    static const std::vector< named_map > out = [] {
        std::vector< named_map > v;
        const auto c1 = cube( { "x" } );
        const auto c2 = cube( { "x", "y" } );
        const auto cyl = cylinder_hdts( c1 );
        v.push_back( { "empty -> C1[x]", { empty_hdts(), c1, {}, {} } } );
        v.push_back( { "empty -> C2[x,y]", { empty_hdts(), c2, {}, {} } } );
        v.push_back( { "C", generator_c() } );
        v.push_back( { "R", generator_r() } );
        v.push_back( { "boundary C2[x,y]", boundary_inclusion( { "x", "y" } ) } );
        v.push_back( { "boundary C2[x,x]", boundary_inclusion( { "x", "x" } ) } );
        v.push_back( { "boundary C3[a,b,c]", boundary_inclusion( { "a", "b", "c" } ) } );
        v.push_back( { "C1[x] -> doublet[x]", cube_into_doublet( "x" ) } );
        v.push_back( { "C0+C0+C1[x] -> doublet[x]", points_and_edge_into_doublet() } );
        v.push_back( { "gamma0 of C1[x]", cyl.gamma0 } );
        v.push_back( { "ends of cyl C1[x]", cylinder_ends( c1 ) } );
        v.push_back( { "p_cof[x]", p_cof_map( "x" ) } );
        v.push_back( { "face of C2[x,y]", cube_face_inclusion( { "x", "y" }, 1, 1 ) } );
        return v;
    }();
    return out;
}

const std::vector< named_map >& maps()
{
    static const std::vector< named_map > out = [] {
        std::vector< named_map > v = cofibrations();
        const auto c1 = cube( { "x" } );
        v.push_back( { "sigma of cyl C1[x]", cylinder_hdts( c1 ).sigma } );
        v.push_back( { "sigma of cyl C2[x,y]", cylinder_hdts( cube( { "x", "y" } ) ).sigma } );
        v.push_back( { "p[x]", p_map( "x" ) } );
        v.push_back( { "counit of cub boundary C2[x,y]", cubify( cube_boundary( { "x", "y" } ) ).counit } );
        v.push_back( { "identity of doublet[x]", identity_map( doublet( "x" ) ) } );
        v.push_back( { "C1[x] -> loop", { c1, loop(), { 0, 0 }, { 0 } } } );
        v.push_back( { "C1[x] -> V", { c1, interval( label_alphabet{ { "x" } }, 2 ), { 0, 0 }, { 0 } } } );
        return v;
    }();
    return out;
}

} // namespace corpus
