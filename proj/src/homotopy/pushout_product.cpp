#include "hdts/homotopy/pushout_product.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/realize/realize.hpp"

#include <algorithm>

namespace hdts
{

hdts_cylinder cylinder_hdts( const hdts_ptr& x, const label_alphabet& sigma, int dim_bound, const budget& b )
{
    if ( static_cast< std::size_t >( dim_bound ) < x->max_arity() )
        throw error( "cylinder: the interval is truncated below the arity of the system" );
    const auto v = interval( sigma.merged( x->sigma() ), dim_bound );
    hdts_cylinder out;
    out.product = product( v, x, b );
    out.object = out.product.object;
    out.sigma = out.product.second;
    for ( int k = 0; k < 2; ++k )
    {
        hdts_map g{ x, out.object, {}, {} };
        for ( state_id s = 0; s < static_cast< state_id >( x->state_count() ); ++s )
            g.state_map.push_back( out.product.state_of( 0, s ) );
        for ( action_id u = 0; u < static_cast< action_id >( x->action_count() ); ++u )
        {
            const auto end = v->find_action( "(" + x->label_of( u ) + "," + std::to_string( k ) + ")" );
            g.action_map.push_back( out.product.action_of.at( { *end, u } ) );
        }
        ( k == 0 ? out.gamma0 : out.gamma1 ) = std::move( g );
    }
    return out;
}

hdts_cylinder cylinder_hdts( const hdts_ptr& x, const budget& b )
{
    return cylinder_hdts( x, x->sigma(), std::max< int >( 1, static_cast< int >( x->max_arity() ) ), b );
}

hdts_map cylinder_map( const hdts_cylinder& cx, const hdts_cylinder& cy, const hdts_map& f )
{
    // The first projection of cyl X lands in an interval equal to the one of
    // cyl Y when both were built with the same alphabet and bound.
    auto first = cx.product.first;
    first.codomain = cy.product.first.codomain;
    auto second = compose( f, cx.product.second );
    return pairing( cy.product, first, second );
}

std::string to_string( corner c )
{
    switch ( c )
    {
    case corner::gamma:
        return "gamma";
    case corner::gamma0:
        return "gamma0";
    case corner::gamma1:
        return "gamma1";
    }
    return "?";
}

namespace
{

struct cylinder_pair
{
    hdts_cylinder a;
    hdts_cylinder b;
    hdts_map cyl_f;
};

cylinder_pair cylinders_of( const hdts_map& f, const budget& b )
{
    const auto sigma = f.domain->sigma().merged( f.codomain->sigma() );
    const int d = std::max< int >( { 1, static_cast< int >( f.domain->max_arity() ),
                                     static_cast< int >( f.codomain->max_arity() ) } );
    cylinder_pair out{ cylinder_hdts( f.domain, sigma, d, b ), cylinder_hdts( f.codomain, sigma, d, b ), {} };
    out.cyl_f = cylinder_map( out.a, out.b, f );
    return out;
}

} // namespace

hdts_map pushout_product( const hdts_map& f, corner c, const budget& b )
{
    const auto cyl = cylinders_of( f, b );
    if ( c == corner::gamma )
    {
        diagram d;
        const auto a0 = d.add_object( f.domain );
        const auto a1 = d.add_object( f.domain );
        const auto b0 = d.add_object( f.codomain );
        const auto b1 = d.add_object( f.codomain );
        const auto ca = d.add_object( cyl.a.object );
        d.add_arrow( a0, b0, f );
        d.add_arrow( a1, b1, f );
        d.add_arrow( a0, ca, cyl.a.gamma0 );
        d.add_arrow( a1, ca, cyl.a.gamma1 );
        const auto col = colimit( d, b );
        return induced_map( col, cyl.b.object,
                            { compose( cyl.b.gamma0, f ), compose( cyl.b.gamma1, f ), cyl.b.gamma0, cyl.b.gamma1, cyl.cyl_f } );
    }
    const int k = c == corner::gamma0 ? 0 : 1;
    const auto po = pushout( f, cyl.a.gamma( k ), b );
    return induced_map( po, cyl.b.object, { compose( cyl.b.gamma( k ), f ), cyl.b.gamma( k ), cyl.cyl_f } );
}

precub_map pushout_product( const precub_map& f, corner c )
{
    const auto ck = cylinder_precub( f.domain );
    const auto cl = cylinder_precub( f.codomain );
    const auto cyl_f = cylinder_map( ck, cl, f );
    if ( c == corner::gamma )
    {
        precub_diagram d;
        const auto a0 = d.add_object( f.domain );
        const auto a1 = d.add_object( f.domain );
        const auto b0 = d.add_object( f.codomain );
        const auto b1 = d.add_object( f.codomain );
        const auto ca = d.add_object( ck.object );
        d.add_arrow( a0, b0, f );
        d.add_arrow( a1, b1, f );
        d.add_arrow( a0, ca, ck.gamma0 );
        d.add_arrow( a1, ca, ck.gamma1 );
        const auto col = colimit_precub( d );
        return induced_precub_map( col, cl.object,
                                   { compose( cl.gamma0, f ), compose( cl.gamma1, f ), cl.gamma0, cl.gamma1, cyl_f } );
    }
    const auto& gk = c == corner::gamma0 ? ck.gamma0 : ck.gamma1;
    const auto& gl = c == corner::gamma0 ? cl.gamma0 : cl.gamma1;
    const auto po = pushout_precub( f, gk );
    return induced_precub_map( po, cl.object, { compose( gl, f ), gl, cyl_f } );
}

bool realized_corner_is_cell( const precub_map& f, corner c, const budget& b )
{
    const auto pf = pushout_product( f, c );
    if ( !is_cofibration_precub( pf ) )
        return false;
    const auto tf = realize_map( f, realize( f.domain, b ), realize( f.codomain, b ) );
    const auto tpf = realize_map( pf, realize( pf.domain, b ), realize( pf.codomain, b ) );
    return isomorphic_arrows( pushout_product( tf, c, b ), tpf, b );
}

precub_map cylinder_ends( const precub_ptr& k )
{
    const auto ck = cylinder_precub( k );
    const auto co = coproduct_precub( { k, k } );
    return induced_precub_map( co, ck.object, { ck.gamma0, ck.gamma1 } );
}

hdts_map cylinder_ends( const hdts_ptr& x, const budget& b )
{
    const auto cx = cylinder_hdts( x, b );
    const auto co = coproduct( { x, x }, b );
    return induced_map( co, cx.object, { cx.gamma0, cx.gamma1 } );
}

} // namespace hdts
