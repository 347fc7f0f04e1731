#include "hdts/homotopy/generators.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/limits.hpp"
#include "hdts/homotopy/pushout_product.hpp"
#include "hdts/precub/constructions.hpp"
#include "hdts/realize/realize.hpp"

namespace hdts
{

std::string to_string( family_tag t )
{
    switch ( t )
    {
    case family_tag::i_hdts:
        return "I";
    case family_tag::i_plus:
        return "I+";
    case family_tag::i_precub:
        return "I_precub";
    case family_tag::s_family:
        return "S";
    case family_tag::s_cof:
        return "S_cof";
    }
    return "?";
}

family_tag parse_family_tag( const std::string& s )
{
    for ( auto t : { family_tag::i_hdts, family_tag::i_plus, family_tag::i_precub, family_tag::s_family, family_tag::s_cof } )
        if ( to_string( t ) == s )
            return t;
    throw error( "unknown generator family '" + s + "'" );
}

namespace
{

std::string word_name( const word& w )
{
    std::string out = "[";
    for ( std::size_t i = 0; i < w.size(); ++i )
        out += ( i ? "," : "" ) + w[ i ];
    return out + "]";
}

// Every word of length n over the labels, in lexicographic order.
std::vector< word > words_of( const std::vector< std::string >& labels, int n )
{
    std::vector< word > out{ word{} };
    for ( int i = 0; i < n; ++i )
    {
        std::vector< word > next;
        for ( const auto& w : out )
            for ( const auto& x : labels )
            {
                next.push_back( w );
                next.back().push_back( x );
            }
        out = std::move( next );
    }
    return out;
}

template < typename T >
void push_member( std::vector< T >& out, T m, const budget& b )
{
    if ( out.size() >= b.max_family_members )
        throw budget_exceeded( "generator family members", b.max_family_members );
    out.push_back( std::move( m ) );
}

precub_ptr precub_points( std::size_t n )
{
    std::vector< std::vector< cell > > cells( 1 );
    for ( std::size_t i = 0; i < n; ++i )
        cells[ 0 ].push_back( { std::to_string( i ), {}, {}, {} } );
    return make_precub( label_alphabet{}, 0, std::move( cells ) );
}

} // namespace

hdts_map generator_c()
{
    return { empty_hdts(), discrete( 1 ), {}, {} };
}

hdts_map generator_r()
{
    return { discrete( 2 ), discrete( 1 ), { 0, 0 }, {} };
}

precub_map precub_generator_c()
{
    return { precub_points( 0 ), precub_points( 1 ), { {} } };
}

precub_map precub_generator_r()
{
    return { precub_points( 2 ), precub_points( 1 ), { { 0, 0 } } };
}

hdts_map p_map( const std::string& x )
{
    const auto c1 = cube( { x } );
    const auto co = coproduct( { c1, c1 } );
    const auto first = cube_into_doublet( x );
    const hdts_map second{ c1, first.codomain, { 2, 3 }, { 0 } };
    return induced_map( co, first.codomain, { first, second } );
}

hdts_map p_cof_map( const std::string& x )
{
    const auto c1 = cube( { x } );
    const auto cyl = cylinder_hdts( c1 );
    const auto co = coproduct( { cyl.object, cyl.object } );
    const auto top = cyl.gamma1.action_map[ 0 ];
    const auto q = quotient( co.object, {},
                             { { co.cocone[ 0 ].action_map[ top ], co.cocone[ 1 ].action_map[ top ] } } );
    const auto source = coproduct( { c1, c1 } );
    return induced_map( source, q.object,
                        { compose( q.unit, compose( co.cocone[ 0 ], cyl.gamma0 ) ),
                          compose( q.unit, compose( co.cocone[ 1 ], cyl.gamma0 ) ) } );
}

std::vector< named_map > hdts_family( family_tag t, const instantiation& inst, const budget& b )
{
    std::vector< named_map > out;
    switch ( t )
    {
    case family_tag::i_hdts:
    case family_tag::i_plus:
        push_member( out, { "C", generator_c() }, b );
        push_member( out, { "R", generator_r() }, b );
        for ( int n = 1; n <= inst.dim_cap; ++n )
            for ( const auto& w : words_of( inst.labels, n ) )
                push_member( out, { "boundary" + word_name( w ), boundary_inclusion( w ) }, b );
        for ( const auto& x : inst.labels )
            push_member( out, { "doublet[" + x + "]", cube_into_doublet( x ) }, b );
        if ( t == family_tag::i_plus && inst.dim_cap >= 2 )
            for ( const auto& w : words_of( inst.labels, 2 ) )
            {
                const auto tk = realize( standard_boundary( w ), b );
                const auto tl = realize( standard_cube( w ), b );
                push_member( out, { "realized_boundary" + word_name( w ),
                                    realize_map( standard_boundary_inclusion( w ), tk, tl ) },
                             b );
            }
        break;
    case family_tag::s_family:
        for ( const auto& x : inst.labels )
            push_member( out, { "p[" + x + "]", p_map( x ) }, b );
        break;
    case family_tag::s_cof:
        for ( const auto& x : inst.labels )
            push_member( out, { "p_cof[" + x + "]", p_cof_map( x ) }, b );
        break;
    case family_tag::i_precub:
        throw error( "the family I_precub consists of precubical maps" );
    }
    return out;
}

std::vector< named_precub_map > precub_family( const instantiation& inst, const budget& b )
{
    std::vector< named_precub_map > out;
    push_member( out, { "C", precub_generator_c() }, b );
    push_member( out, { "R", precub_generator_r() }, b );
    for ( int n = 1; n <= inst.dim_cap; ++n )
        for ( const auto& w : words_of( inst.labels, n ) )
            push_member( out, { "boundary" + word_name( w ), standard_boundary_inclusion( w ) }, b );
    return out;
}

} // namespace hdts
