#include "hdts/homotopy/equivalence.hpp"

#include "hdts/core/cubes.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/homotopy/pushout_product.hpp"
#include "hdts/realize/realize.hpp"

#include <set>

namespace hdts
{

std::optional< hdts_map > find_homotopy( const hdts_map& f, const hdts_map& g, const budget& b )
{
    if ( !( *f.domain == *g.domain ) || !( *f.codomain == *g.codomain ) )
        throw error( "homotopic: maps with different domains or codomains" );
    const auto cyl = cylinder_hdts( f.domain, b );
    const auto& c = *cyl.object;

    // The states of the cylinder are those of the domain, and every action of
    // the cylinder lies in the image of gamma0 or gamma1: H is determined by
    // f and g, and the search only checks that it is a map.
    hom_options opt;
    opt.limit = 1;
    opt.limits = b;
    opt.allowed_states.assign( c.state_count(), {} );
    opt.allowed_actions.assign( c.action_count(), {} );
    for ( std::size_t s = 0; s < f.state_map.size(); ++s )
        if ( f.state_map[ s ] == g.state_map[ s ] )
            opt.allowed_states[ cyl.gamma0.state_map[ s ] ] = { f.state_map[ s ] };
    for ( std::size_t u = 0; u < f.action_map.size(); ++u )
    {
        opt.allowed_actions[ cyl.gamma0.action_map[ u ] ] = { f.action_map[ u ] };
        opt.allowed_actions[ cyl.gamma1.action_map[ u ] ] = { g.action_map[ u ] };
    }
    auto hs = hom_set( cyl.object, f.codomain, opt );
    if ( hs.empty() )
        return std::nullopt;
    return hs.front();
}

std::string to_string( model m )
{
    switch ( m )
    {
    case model::cts:
        return "cts";
    case model::cts_plus:
        return "cts+";
    case model::localized:
        return "localized";
    }
    return "?";
}

model parse_model( const std::string& s )
{
    for ( auto m : { model::cts, model::cts_plus, model::localized } )
        if ( to_string( m ) == s )
            return m;
    throw error( "unknown model '" + s + "'" );
}

std::string isomorphism_defect( const hdts_map& f )
{
    const auto& x = *f.domain;
    const auto& y = *f.codomain;
    const std::set< state_id > s( f.state_map.begin(), f.state_map.end() );
    const std::set< action_id > a( f.action_map.begin(), f.action_map.end() );
    if ( s.size() != x.state_count() )
        return "not injective on states";
    if ( s.size() != y.state_count() )
        return "not surjective on states";
    if ( a.size() != x.action_count() )
        return "not injective on actions";
    if ( a.size() != y.action_count() )
        return "not surjective on actions";
    std::set< transition > image;
    for ( const auto& t : x.transitions() )
        image.insert( f.image( t ) );
    for ( const auto& t : y.transitions() )
        if ( !image.count( t ) )
            return "transition " + to_string( y, t ) + " is not in the image";
    return {};
}

equivalence_verdict weak_equiv( const hdts_map& f, model m, const budget& b )
{
    for ( const auto* x : { f.domain.get(), f.codomain.get() } )
        if ( auto v = check_cubical( *x ); !v.cubical )
            throw error( "weak_equiv: not a cubical transition system: " + v.witness );
    equivalence_verdict out;
    out.reflected = m == model::localized ? bls_map( f, b ) : csa1_map( f, b );
    out.reason = isomorphism_defect( out.reflected );
    out.equivalent = out.reason.empty();
    return out;
}

equivalence_verdict weak_equiv_precub_localized( const precub_map& f, const budget& b )
{
    const auto tk = realize( f.domain, b );
    const auto tl = realize( f.codomain, b );
    return weak_equiv( realize_map( f, tk, tl ), model::localized, b );
}

} // namespace hdts
