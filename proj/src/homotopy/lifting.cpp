#include "hdts/homotopy/lifting.hpp"

#include "hdts/core/hom.hpp"
#include "hdts/precub/hom.hpp"

namespace hdts
{

namespace
{

bool commutes( const hdts_map& a, const hdts_map& b )
{
    return a.state_map == b.state_map && a.action_map == b.action_map;
}

} // namespace

std::vector< hdts_map > lift_search( const lifting_square& sq, std::size_t limit, const budget& b )
{
    if ( !commutes( compose( sq.g, sq.top ), compose( sq.bottom, sq.f ) ) )
        throw error( "lift_search: the square does not commute" );
    const auto& src = *sq.f.codomain;
    const auto& x = *sq.g.domain;

    hom_options opt;
    opt.limit = limit;
    opt.limits = b;
    opt.allowed_states.resize( src.state_count() );
    opt.allowed_actions.resize( src.action_count() );
    std::vector< std::optional< state_id > > forced_s( src.state_count() );
    std::vector< std::optional< action_id > > forced_a( src.action_count() );
    bool consistent = true;
    for ( std::size_t s = 0; s < sq.f.state_map.size(); ++s )
    {
        auto& slot = forced_s[ sq.f.state_map[ s ] ];
        if ( slot && *slot != sq.top.state_map[ s ] )
            consistent = false;
        slot = sq.top.state_map[ s ];
    }
    for ( std::size_t u = 0; u < sq.f.action_map.size(); ++u )
    {
        auto& slot = forced_a[ sq.f.action_map[ u ] ];
        if ( slot && *slot != sq.top.action_map[ u ] )
            consistent = false;
        slot = sq.top.action_map[ u ];
    }
    if ( !consistent )
        return {};

    for ( std::size_t s = 0; s < src.state_count(); ++s )
        for ( state_id t = 0; t < static_cast< state_id >( x.state_count() ); ++t )
            if ( sq.g.state_map[ t ] == sq.bottom.state_map[ s ] && ( !forced_s[ s ] || *forced_s[ s ] == t ) )
                opt.allowed_states[ s ].push_back( t );
    for ( std::size_t u = 0; u < src.action_count(); ++u )
        for ( action_id v = 0; v < static_cast< action_id >( x.action_count() ); ++v )
            if ( sq.g.action_map[ v ] == sq.bottom.action_map[ u ] && ( !forced_a[ u ] || *forced_a[ u ] == v ) )
                opt.allowed_actions[ u ].push_back( v );
    return hom_set( sq.f.codomain, sq.g.domain, opt );
}

std::vector< precub_map > lift_search( const precub_lifting_square& sq, std::size_t limit )
{
    if ( !same_precub_map( compose( sq.g, sq.top ), compose( sq.bottom, sq.f ) ) )
        throw error( "lift_search: the square does not commute" );
    const auto& src = *sq.f.codomain;
    const auto& x = *sq.g.domain;

    precub_hom_options opt;
    opt.limit = limit;
    opt.allowed.resize( src.dim_bound() + 1 );
    std::vector< std::vector< int > > forced( src.dim_bound() + 1 );
    for ( int n = 0; n <= src.dim_bound(); ++n )
        forced[ n ].assign( src.cell_count( n ), -1 );
    for ( std::size_t n = 0; n < sq.f.cell_map.size(); ++n )
        for ( std::size_t c = 0; c < sq.f.cell_map[ n ].size(); ++c )
        {
            auto& slot = forced[ n ][ sq.f.cell_map[ n ][ c ] ];
            if ( slot >= 0 && slot != sq.top.cell_map[ n ][ c ] )
                return {};
            slot = sq.top.cell_map[ n ][ c ];
        }
    for ( int n = 0; n <= src.dim_bound(); ++n )
    {
        opt.allowed[ n ].resize( src.cell_count( n ) );
        for ( int c = 0; c < static_cast< int >( src.cell_count( n ) ); ++c )
            for ( int t = 0; t < static_cast< int >( x.cell_count( n ) ); ++t )
                if ( sq.g.cell_map[ n ][ t ] == sq.bottom.cell_map[ n ][ c ] && ( forced[ n ][ c ] < 0 || forced[ n ][ c ] == t ) )
                    opt.allowed[ n ][ c ].push_back( t );
    }
    return precub_hom_set( sq.f.codomain, sq.g.domain, opt );
}

std::vector< hdts_map > extensions( const hdts_map& j, const hdts_map& u, std::size_t limit, const budget& b )
{
    const auto& src = *j.codomain;
    const auto& x = *u.codomain;
    hom_options opt;
    opt.limit = limit;
    opt.limits = b;
    opt.allowed_states.assign( src.state_count(), {} );
    opt.allowed_actions.assign( src.action_count(), {} );
    std::vector< bool > forced_s( src.state_count() ), forced_a( src.action_count() );
    for ( std::size_t s = 0; s < j.state_map.size(); ++s )
    {
        auto& a = opt.allowed_states[ j.state_map[ s ] ];
        if ( forced_s[ j.state_map[ s ] ] && a != std::vector< state_id >{ u.state_map[ s ] } )
            return {};
        forced_s[ j.state_map[ s ] ] = true;
        a = { u.state_map[ s ] };
    }
    for ( std::size_t v = 0; v < j.action_map.size(); ++v )
    {
        auto& a = opt.allowed_actions[ j.action_map[ v ] ];
        if ( forced_a[ j.action_map[ v ] ] && a != std::vector< action_id >{ u.action_map[ v ] } )
            return {};
        forced_a[ j.action_map[ v ] ] = true;
        a = { u.action_map[ v ] };
    }
    for ( std::size_t s = 0; s < src.state_count(); ++s )
        if ( !forced_s[ s ] )
            for ( state_id t = 0; t < static_cast< state_id >( x.state_count() ); ++t )
                opt.allowed_states[ s ].push_back( t );
    for ( std::size_t v = 0; v < src.action_count(); ++v )
        if ( !forced_a[ v ] )
            for ( action_id w = 0; w < static_cast< action_id >( x.action_count() ); ++w )
                opt.allowed_actions[ v ].push_back( w );
    return hom_set( j.codomain, u.codomain, opt );
}

namespace
{

extension_verdict check_extensions( const hdts_map& j, const hdts_ptr& x, bool unique, const budget& b )
{
    extension_verdict out;
    hom_options opt;
    opt.limits = b;
    for_each_hom( j.domain, x, opt, [ & ]( const hdts_map& u ) {
        const auto ks = extensions( j, u, 2, b );
        if ( ks.empty() || ( unique && ks.size() > 1 ) )
        {
            out.holds = false;
            out.witness = u;
            out.extension_count = ks.size();
            return false;
        }
        return true;
    } );
    return out;
}

} // namespace

extension_verdict check_injective( const hdts_map& j, const hdts_ptr& x, const budget& b )
{
    return check_extensions( j, x, false, b );
}

extension_verdict check_orthogonal( const hdts_map& j, const hdts_ptr& x, const budget& b )
{
    return check_extensions( j, x, true, b );
}

std::vector< named_map > lambda_generate( std::optional< family_tag > s, family_tag i, int depth,
                                          const instantiation& inst, const budget& b )
{
    std::vector< named_map > out;
    auto add = [ & ]( const named_map& m ) {
        for ( const auto& seen : out )
            if ( isomorphic_arrows( seen.map, m.map, b ) )
                return;
        if ( out.size() >= b.max_family_members )
            throw budget_exceeded( "lambda members", b.max_family_members );
        out.push_back( m );
    };

    std::vector< named_map > level;
    if ( s )
        for ( auto& m : hdts_family( *s, inst, b ) )
            level.push_back( std::move( m ) );
    for ( const auto& g : hdts_family( i, inst, b ) )
        for ( auto c : { corner::gamma0, corner::gamma1 } )
            level.push_back( { g.name + "*" + to_string( c ), pushout_product( g.map, c, b ) } );
    for ( int d = 0;; ++d )
    {
        for ( const auto& m : level )
            add( m );
        if ( d == depth )
            break;
        std::vector< named_map > next;
        for ( const auto& m : level )
            next.push_back( { "(" + m.name + ")*gamma", pushout_product( m.map, corner::gamma, b ) } );
        level = std::move( next );
    }
    return out;
}

} // namespace hdts
