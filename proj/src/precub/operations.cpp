#include "hdts/precub/operations.hpp"

#include "../union_find.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace hdts
{

namespace
{

unsigned delete_bit( unsigned e, int i )
{
    const unsigned low = e & ( ( 1u << ( i - 1 ) ) - 1 );
    const unsigned high = ( e >> i ) << ( i - 1 );
    return low | high;
}

unsigned swap_bits( unsigned e, int i )
{
    const unsigned a = ( e >> ( i - 1 ) ) & 1u;
    const unsigned b = ( e >> i ) & 1u;
    e &= ~( ( 1u << ( i - 1 ) ) | ( 1u << i ) );
    return e | ( b << ( i - 1 ) ) | ( a << i );
}

std::string bits_of( unsigned e, int n )
{
    std::string s( n, '0' );
    for ( int i = 0; i < n; ++i )
        if ( e & ( 1u << i ) )
            s[ i ] = '1';
    return s;
}

} // namespace

precub_cylinder cylinder_precub( const precub_ptr& k )
{
    const int d = k->dim_bound();
    std::vector< std::vector< cell > > cells( d + 1 );
    for ( int n = 0; n <= d; ++n )
    {
        const unsigned span = 1u << n;
        for ( int x = 0; x < static_cast< int >( k->cell_count( n ) ); ++x )
            for ( unsigned e = 0; e < span; ++e )
            {
                const auto& base = k->at( n, x );
                cell c{ n == 0 ? base.name : "(" + base.name + "," + bits_of( e, n ) + ")", base.label, {}, {} };
                for ( int i = 1; i <= n; ++i )
                    for ( int alpha = 0; alpha < 2; ++alpha )
                        c.faces.push_back( static_cast< int >( k->face( n, x, i, alpha ) * ( span / 2 ) + delete_bit( e, i ) ) );
                for ( int i = 1; i < n; ++i )
                    c.syms.push_back( static_cast< int >( k->sym( n, x, i ) * span + swap_bits( e, i ) ) );
                cells[ n ].push_back( std::move( c ) );
            }
    }
    precub_cylinder out;
    out.object = make_precub( k->sigma(), d, std::move( cells ) );
    out.gamma0 = { k, out.object, {} };
    out.gamma1 = { k, out.object, {} };
    out.sigma = { out.object, k, {} };
    for ( int n = 0; n <= d; ++n )
    {
        const unsigned span = 1u << n;
        out.gamma0.cell_map.emplace_back();
        out.gamma1.cell_map.emplace_back();
        out.sigma.cell_map.emplace_back();
        for ( int x = 0; x < static_cast< int >( k->cell_count( n ) ); ++x )
        {
            out.gamma0.cell_map.back().push_back( static_cast< int >( x * span ) );
            out.gamma1.cell_map.back().push_back( static_cast< int >( x * span + span - 1 ) );
            for ( unsigned e = 0; e < span; ++e )
                out.sigma.cell_map.back().push_back( x );
        }
    }
    return out;
}

precub_map cylinder_map( const precub_cylinder& ck, const precub_cylinder& cl, const precub_map& f )
{
    precub_map out{ ck.object, cl.object, {} };
    for ( std::size_t n = 0; n < f.cell_map.size(); ++n )
    {
        const unsigned span = 1u << n;
        out.cell_map.emplace_back();
        for ( auto y : f.cell_map[ n ] )
            for ( unsigned e = 0; e < span; ++e )
                out.cell_map.back().push_back( static_cast< int >( y * span + e ) );
    }
    return out;
}

precub_product product_precub( const precub_ptr& k, const precub_ptr& l )
{
    const int d = std::min( k->dim_bound(), l->dim_bound() );
    precub_product out;
    out.cell_of.resize( d + 1 );
    std::vector< std::vector< std::pair< int, int > > > pairs( d + 1 );
    for ( int n = 0; n <= d; ++n )
        for ( int x = 0; x < static_cast< int >( k->cell_count( n ) ); ++x )
            for ( int y = 0; y < static_cast< int >( l->cell_count( n ) ); ++y )
                if ( k->at( n, x ).label == l->at( n, y ).label )
                {
                    out.cell_of[ n ][ { x, y } ] = static_cast< int >( pairs[ n ].size() );
                    pairs[ n ].emplace_back( x, y );
                }

    std::vector< std::vector< cell > > cells( d + 1 );
    for ( int n = 0; n <= d; ++n )
        for ( auto [ x, y ] : pairs[ n ] )
        {
            cell c{ "(" + k->at( n, x ).name + "," + l->at( n, y ).name + ")", k->at( n, x ).label, {}, {} };
            for ( int i = 1; i <= n; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                    c.faces.push_back( out.cell_of[ n - 1 ].at( { k->face( n, x, i, alpha ), l->face( n, y, i, alpha ) } ) );
            for ( int i = 1; i < n; ++i )
                c.syms.push_back( out.cell_of[ n ].at( { k->sym( n, x, i ), l->sym( n, y, i ) } ) );
            cells[ n ].push_back( std::move( c ) );
        }
    out.object = make_precub( k->sigma().merged( l->sigma() ), d, std::move( cells ) );
    out.first = { out.object, k, {} };
    out.second = { out.object, l, {} };
    for ( int n = 0; n <= d; ++n )
    {
        out.first.cell_map.emplace_back();
        out.second.cell_map.emplace_back();
        for ( auto [ x, y ] : pairs[ n ] )
        {
            out.first.cell_map.back().push_back( x );
            out.second.cell_map.back().push_back( y );
        }
    }
    return out;
}

precub_map pairing_precub( const precub_product& p, const precub_map& f, const precub_map& g )
{
    precub_map out{ f.domain, p.object, {} };
    for ( std::size_t n = 0; n < f.cell_map.size(); ++n )
    {
        out.cell_map.emplace_back();
        for ( std::size_t x = 0; x < f.cell_map[ n ].size(); ++x )
        {
            if ( n >= p.cell_of.size() )
                throw error( "pairing: dimension beyond the product bound" );
            auto it = p.cell_of[ n ].find( { f.cell_map[ n ][ x ], g.cell_map[ n ][ x ] } );
            if ( it == p.cell_of[ n ].end() )
                throw error( "pairing: components with different words" );
            out.cell_map.back().push_back( it->second );
        }
    }
    return out;
}

precub_colimit colimit_precub( const precub_diagram& d )
{
    int bound = 0;
    for ( const auto& k : d.objects )
        bound = std::max( bound, k->dim_bound() );

    precub_colimit out;
    std::vector< std::vector< cell > > cells( bound + 1 );
    std::vector< std::vector< std::vector< int > > > leg( d.objects.size(), std::vector< std::vector< int > >( bound + 1 ) );
    label_alphabet sigma;
    for ( const auto& k : d.objects )
        sigma = sigma.merged( k->sigma() );

    for ( int n = 0; n <= bound; ++n )
    {
        std::vector< std::size_t > offset;
        std::size_t total = 0;
        for ( const auto& k : d.objects )
        {
            offset.push_back( total );
            total += k->cell_count( n );
        }
        detail::union_find uf{ total };
        for ( const auto& a : d.arrows )
        {
            if ( n > d.objects[ a.from ]->dim_bound() )
                continue;
            const auto& cm = a.map.cell_map[ n ];
            for ( std::size_t x = 0; x < cm.size(); ++x )
                uf.unite( offset[ a.from ] + x, offset[ a.to ] + static_cast< std::size_t >( cm[ x ] ) );
        }
        std::size_t count = 0;
        auto cls = uf.classes( &count );
        cells[ n ].resize( count );
        std::vector< bool > named( count, false );
        for ( std::size_t i = 0; i < d.objects.size(); ++i )
        {
            const auto& k = *d.objects[ i ];
            for ( std::size_t x = 0; x < k.cell_count( n ); ++x )
            {
                const int c = cls[ offset[ i ] + x ];
                leg[ i ][ n ].push_back( c );
                const auto& src = k.at( n, static_cast< int >( x ) );
                if ( !named[ c ] )
                {
                    named[ c ] = true;
                    cells[ n ][ c ].name = std::to_string( i ) + "." + src.name;
                    cells[ n ][ c ].label = src.label;
                }
                else if ( cells[ n ][ c ].label != src.label )
                    throw error( "colimit: identified cells carry different words" );
            }
        }
    }

    for ( int n = 1; n <= bound; ++n )
    {
        std::vector< bool > done( cells[ n ].size(), false );
        for ( std::size_t i = 0; i < d.objects.size(); ++i )
        {
            const auto& k = *d.objects[ i ];
            for ( std::size_t x = 0; x < k.cell_count( n ); ++x )
            {
                const int c = leg[ i ][ n ][ x ];
                std::vector< int > faces, syms;
                for ( int j = 1; j <= n; ++j )
                    for ( int alpha = 0; alpha < 2; ++alpha )
                        faces.push_back( leg[ i ][ n - 1 ][ k.face( n, static_cast< int >( x ), j, alpha ) ] );
                for ( int j = 1; j < n; ++j )
                    syms.push_back( leg[ i ][ n ][ k.sym( n, static_cast< int >( x ), j ) ] );
                if ( !done[ c ] )
                {
                    done[ c ] = true;
                    cells[ n ][ c ].faces = std::move( faces );
                    cells[ n ][ c ].syms = std::move( syms );
                }
                else if ( cells[ n ][ c ].faces != faces || cells[ n ][ c ].syms != syms )
                    throw error( "colimit: operators are not well defined on a merged cell" );
            }
        }
    }

    out.object = make_precub( std::move( sigma ), bound, std::move( cells ) );
    for ( std::size_t i = 0; i < d.objects.size(); ++i )
    {
        precub_map m{ d.objects[ i ], out.object, {} };
        for ( int n = 0; n <= d.objects[ i ]->dim_bound(); ++n )
            m.cell_map.push_back( leg[ i ][ n ] );
        out.cocone.push_back( std::move( m ) );
    }
    return out;
}

precub_map induced_precub_map( const precub_colimit& c, const precub_ptr& apex, const std::vector< precub_map >& cone )
{
    if ( cone.size() != c.cocone.size() )
        throw error( "induced_map: cone has the wrong number of legs" );
    const auto& k = *c.object;
    precub_map out{ c.object, apex, {} };
    for ( int n = 0; n <= k.dim_bound(); ++n )
        out.cell_map.emplace_back( k.cell_count( n ), -1 );
    for ( std::size_t i = 0; i < cone.size(); ++i )
        for ( std::size_t n = 0; n < c.cocone[ i ].cell_map.size(); ++n )
            for ( std::size_t x = 0; x < c.cocone[ i ].cell_map[ n ].size(); ++x )
            {
                auto& slot = out.cell_map[ n ][ c.cocone[ i ].cell_map[ n ][ x ] ];
                const int y = cone[ i ].cell_map[ n ][ x ];
                if ( slot >= 0 && slot != y )
                    throw error( "induced_map: cone is not compatible" );
                slot = y;
            }
    if ( auto v = precub_map_violation( out ) )
        throw error( "induced_map: " + *v );
    return out;
}

precub_colimit coproduct_precub( const std::vector< precub_ptr >& ks )
{
    precub_diagram d;
    for ( const auto& k : ks )
        d.add_object( k );
    return colimit_precub( d );
}

precub_colimit pushout_precub( const precub_map& f, const precub_map& g )
{
    precub_diagram d;
    d.add_object( f.domain );
    d.add_object( f.codomain );
    d.add_object( g.codomain );
    d.add_arrow( 0, 1, f );
    d.add_arrow( 0, 2, g );
    return colimit_precub( d );
}

precub_quotient quotient_precub( const precub_ptr& k, const std::vector< std::tuple< int, int, int > >& pairs )
{
    const int bound = k->dim_bound();
    std::vector< detail::union_find > uf;
    for ( int n = 0; n <= bound; ++n )
        uf.emplace_back( k->cell_count( n ) );

    std::deque< std::tuple< int, int, int > > work( pairs.begin(), pairs.end() );
    while ( !work.empty() )
    {
        auto [ n, a, b ] = work.front();
        work.pop_front();
        if ( uf[ n ].same( a, b ) )
            continue;
        if ( k->at( n, a ).label != k->at( n, b ).label )
            throw error( "quotient: identified cells carry different words" );
        uf[ n ].unite( a, b );
        for ( int i = 1; i <= n; ++i )
            for ( int alpha = 0; alpha < 2; ++alpha )
                work.emplace_back( n - 1, k->face( n, a, i, alpha ), k->face( n, b, i, alpha ) );
        for ( int i = 1; i < n; ++i )
            work.emplace_back( n, k->sym( n, a, i ), k->sym( n, b, i ) );
    }

    std::vector< std::vector< int > > cls( bound + 1 );
    std::vector< std::vector< cell > > cells( bound + 1 );
    for ( int n = 0; n <= bound; ++n )
    {
        std::size_t count = 0;
        cls[ n ] = uf[ n ].classes( &count );
        cells[ n ].resize( count );
        std::vector< bool > named( count, false );
        for ( std::size_t x = 0; x < k->cell_count( n ); ++x )
        {
            const int c = cls[ n ][ x ];
            if ( named[ c ] )
                continue;
            named[ c ] = true;
            const auto& src = k->at( n, static_cast< int >( x ) );
            cells[ n ][ c ].name = src.name;
            cells[ n ][ c ].label = src.label;
            for ( int i = 1; i <= n; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                    cells[ n ][ c ].faces.push_back( cls[ n - 1 ][ k->face( n, static_cast< int >( x ), i, alpha ) ] );
            for ( int i = 1; i < n; ++i )
                cells[ n ][ c ].syms.push_back( cls[ n ][ k->sym( n, static_cast< int >( x ), i ) ] );
        }
    }
    precub_quotient out;
    out.object = make_precub( k->sigma(), bound, std::move( cells ) );
    out.unit = { k, out.object, cls };
    if ( auto v = precub_map_violation( out.unit ) )
        throw error( "quotient: " + *v );
    return out;
}

bool is_cofibration_precub( const precub_map& f )
{
    for ( std::size_t n = 1; n < f.cell_map.size(); ++n )
    {
        std::set< int > image( f.cell_map[ n ].begin(), f.cell_map[ n ].end() );
        if ( image.size() != f.cell_map[ n ].size() )
            return false;
    }
    return true;
}

hda_verdict check_hda( const precub_set& k )
{
    for ( int p = 2; p <= k.dim_bound(); ++p )
    {
        std::map< std::vector< int >, int > seen;
        for ( int x = 0; x < static_cast< int >( k.cell_count( p ) ); ++x )
        {
            auto [ it, fresh ] = seen.emplace( k.at( p, x ).faces, x );
            if ( !fresh )
                return { false, p, it->second, x };
        }
    }
    return {};
}

sh_result sh_reflect( const precub_ptr& k )
{
    sh_result out{ k, identity_precub_map( k ) };
    while ( true )
    {
        auto v = check_hda( *out.object );
        if ( v.hda )
            return out;
        auto q = quotient_precub( out.object, { { v.dim, v.first, v.second } } );
        out.unit = compose( q.unit, out.unit );
        out.object = q.object;
    }
}

} // namespace hdts
