#include "hdts/realize/realize.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/precub/constructions.hpp"
#include "hdts/precub/hom.hpp"

#include <map>

namespace hdts
{

hdts_map realize_arrow( const cube_arrow& f, const word& source, const word& target )
{
    if ( !f.valid() )
        throw error( "realize_arrow: not a cube arrow" );
    if ( static_cast< int >( source.size() ) != f.m || static_cast< int >( target.size() ) != f.n )
        throw error( "realize_arrow: word lengths do not match the arrow" );
    for ( int i = 1; i <= f.m; ++i )
        if ( source[ i - 1 ] != target[ position_of( f, i ) - 1 ] )
            throw error( "realize_arrow: labels do not match along the arrow" );

    hdts_map out{ cube( source ), cube( target ), {}, {} };
    for ( unsigned e = 0; e < ( 1u << f.m ); ++e )
    {
        unsigned image = 0;
        for ( int j = 1; j <= f.n; ++j )
        {
            const int v = f.fhat[ j - 1 ];
            const bool bit = v == pos_inf || ( v != neg_inf && ( e & ( 1u << ( v - 1 ) ) ) );
            if ( bit )
                image |= 1u << ( j - 1 );
        }
        out.state_map.push_back( static_cast< state_id >( image ) );
    }
    for ( int i = 1; i <= f.m; ++i )
        out.action_map.push_back( static_cast< action_id >( position_of( f, i ) - 1 ) );
    return out;
}

namespace
{

colimit_result as_colimit( const realization& r )
{
    colimit_result c{ r.object, {} };
    for ( const auto& dim : r.legs )
        for ( const auto& leg : dim )
            c.cocone.push_back( leg );
    return c;
}

using cube_key = std::pair< std::vector< state_id >, std::vector< action_id > >;

} // namespace

realization realize( const precub_ptr& k, const budget& b )
{
    std::map< word, hdts_ptr > cubes;
    auto cube_of = [ & ]( const word& w ) {
        auto& c = cubes[ w ];
        if ( !c )
            c = cube( w );
        return c;
    };

    diagram d;
    std::vector< std::vector< std::size_t > > obj( k->dim_bound() + 1 );
    for ( int n = 0; n <= k->dim_bound(); ++n )
        for ( int x = 0; x < static_cast< int >( k->cell_count( n ) ); ++x )
            obj[ n ].push_back( d.add_object( cube_of( k->at( n, x ).label ) ) );

    for ( int n = 1; n <= k->dim_bound(); ++n )
        for ( int x = 0; x < static_cast< int >( k->cell_count( n ) ); ++x )
        {
            const auto& w = k->at( n, x ).label;
            auto link = [ & ]( int dim, int y, const cube_arrow& f ) {
                const auto from = obj[ dim ][ y ];
                auto m = realize_arrow( f, k->at( dim, y ).label, w );
                m.domain = d.objects[ from ];
                m.codomain = d.objects[ obj[ n ][ x ] ];
                d.add_arrow( from, obj[ n ][ x ], std::move( m ) );
            };
            for ( int i = 1; i <= n; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                    link( n - 1, k->face( n, x, i, alpha ), face_arrow( n, i, alpha ) );
            for ( int i = 1; i < n; ++i )
                link( n, k->sym( n, x, i ), symmetry_arrow( n, i ) );
        }

    auto col = colimit( d, b );
    realization out{ col.object, {} };
    std::size_t next = 0;
    for ( int n = 0; n <= k->dim_bound(); ++n )
    {
        out.legs.emplace_back();
        for ( std::size_t x = 0; x < k->cell_count( n ); ++x )
            out.legs.back().push_back( col.cocone[ next++ ] );
    }
    return out;
}

hdts_map realize_map( const precub_map& f, const realization& tk, const realization& tl )
{
    std::vector< hdts_map > cone;
    for ( std::size_t n = 0; n < tk.legs.size(); ++n )
        for ( std::size_t x = 0; x < tk.legs[ n ].size(); ++x )
        {
            auto leg = tl.legs[ n ][ f.cell_map[ n ][ x ] ];
            leg.domain = tk.legs[ n ][ x ].domain;
            cone.push_back( std::move( leg ) );
        }
    return induced_map( as_colimit( tk ), tl.object, cone );
}

nerve_result nerve( const hdts_ptr& x, int dim_bound, const budget& b )
{
    const auto n_max = std::min< std::size_t >( static_cast< std::size_t >( dim_bound ), x->max_arity() );
    nerve_result out;
    out.cubes.resize( dim_bound + 1 );
    std::vector< std::map< cube_key, int > > index( dim_bound + 1 );
    for ( auto& c : enumerate_cube_maps( x, n_max, b ) )
    {
        const auto n = c.dim();
        index[ n ][ { c.map.state_map, c.map.action_map } ] = static_cast< int >( out.cubes[ n ].size() );
        out.cubes[ n ].push_back( std::move( c ) );
    }
    auto lookup = [ & ]( const cube_map& c ) {
        auto it = index[ c.dim() ].find( { c.map.state_map, c.map.action_map } );
        if ( it == index[ c.dim() ].end() )
            throw error( "nerve: a face of a cube is missing from the enumeration" );
        return it->second;
    };

    std::vector< std::vector< cell > > cells( dim_bound + 1 );
    for ( int n = 0; n <= dim_bound; ++n )
        for ( const auto& c : out.cubes[ n ] )
        {
            cell k;
            k.name = "<";
            for ( std::size_t s = 0; s < c.map.state_map.size(); ++s )
                k.name += ( s ? ";" : "" ) + x->state_name( c.map.state_map[ s ] );
            k.name += "|";
            for ( std::size_t u = 0; u < c.map.action_map.size(); ++u )
                k.name += ( u ? ";" : "" ) + x->action_at( c.map.action_map[ u ] ).name;
            k.name += ">";
            k.label = c.w;
            for ( int i = 1; i <= n; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                    k.faces.push_back( lookup( cube_face( c, static_cast< std::size_t >( i ), alpha ) ) );
            for ( int i = 1; i < n; ++i )
                k.syms.push_back( lookup( cube_symmetry( c, static_cast< std::size_t >( i ) ) ) );
            cells[ n ].push_back( std::move( k ) );
        }
    out.object = make_precub( x->sigma(), dim_bound, std::move( cells ) );
    return out;
}

hdts_map counit( const realization& trx, const nerve_result& rx )
{
    std::vector< hdts_map > cone;
    hdts_ptr target;
    for ( std::size_t n = 0; n < trx.legs.size(); ++n )
        for ( std::size_t k = 0; k < trx.legs[ n ].size(); ++k )
        {
            auto m = rx.cubes[ n ][ k ].map;
            target = m.codomain;
            m.domain = trx.legs[ n ][ k ].domain;
            cone.push_back( std::move( m ) );
        }
    if ( !target )
    {
        // No cells: the realization is empty and the counit is the empty map.
        return { trx.object, nullptr, {}, {} };
    }
    return induced_map( as_colimit( trx ), target, cone );
}

adjunction_report adjunction_check( const precub_ptr& k, const hdts_ptr& x, const budget& b )
{
    adjunction_report report;
    const auto tk = realize( k, b );
    hom_options hopt;
    hopt.limits = b;
    const auto hom1 = hom_set( tk.object, x, hopt );

    const int d = std::max( k->dim_bound(), static_cast< int >( x->max_arity() ) );
    const auto rx = nerve( x, d, b );
    const auto kk = with_dim_bound( k, d );
    precub_hom_options popt;
    popt.limits = b;
    const auto hom2 = precub_hom_set( kk, rx.object, popt );
    report.hom_realized = hom1.size();
    report.hom_nerve = hom2.size();

    std::vector< std::map< cube_key, int > > index( d + 1 );
    for ( int n = 0; n <= d; ++n )
        for ( std::size_t c = 0; c < rx.cubes[ n ].size(); ++c )
            index[ n ][ { rx.cubes[ n ][ c ].map.state_map, rx.cubes[ n ][ c ].map.action_map } ] = static_cast< int >( c );

    auto flat = [ & ]( const hdts_map& phi ) {
        precub_map out{ kk, rx.object, {} };
        for ( int n = 0; n <= d; ++n )
        {
            out.cell_map.emplace_back();
            for ( std::size_t c = 0; c < kk->cell_count( n ); ++c )
            {
                const auto m = compose( phi, tk.legs[ n ][ c ] );
                auto it = index[ n ].find( { m.state_map, m.action_map } );
                out.cell_map.back().push_back( it == index[ n ].end() ? -1 : it->second );
            }
        }
        return out;
    };
    auto sharp = [ & ]( const precub_map& psi ) {
        std::vector< hdts_map > cone;
        for ( std::size_t n = 0; n < tk.legs.size(); ++n )
            for ( std::size_t c = 0; c < tk.legs[ n ].size(); ++c )
            {
                auto m = rx.cubes[ n ][ psi.cell_map[ n ][ c ] ].map;
                m.domain = tk.legs[ n ][ c ].domain;
                cone.push_back( std::move( m ) );
            }
        return induced_map( as_colimit( tk ), x, cone );
    };

    bool inverse = hom1.size() == hom2.size();
    for ( const auto& phi : hom1 )
    {
        if ( !inverse )
            break;
        const auto psi = flat( phi );
        if ( !is_valid_precub_map( psi ) || !same_map( sharp( psi ), phi ) )
            inverse = false;
    }
    for ( const auto& psi : hom2 )
    {
        if ( !inverse )
            break;
        if ( !same_precub_map( flat( sharp( psi ) ), psi ) )
            inverse = false;
    }
    report.transposes_inverse = inverse;

    const auto trx = realize( rx.object, b );
    const auto eps = counit( trx, rx );
    report.counit_valid = eps.codomain != nullptr ? is_valid_map( eps ) : x->state_count() == 0;
    report.counit_iso = report.counit_valid && eps.codomain != nullptr && is_isomorphism( eps );
    report.cubification_iso = isomorphic( trx.object, cubify( x, b ).object, b );
    return report;
}

hdts_ptr realize_of_free( const std::vector< action >& mu, int dim_bound, const budget& b )
{
    return realize( free_precub( mu, dim_bound ), b ).object;
}

} // namespace hdts
