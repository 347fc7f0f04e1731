#include "hdts/precub/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hdts
{

namespace
{

precub_ptr build_cube( const word& w, bool with_top )
{
    const int n = static_cast< int >( w.size() );
    std::vector< std::vector< cube_arrow > > arrows( n + 1 );
    for ( int m = 0; m <= n; ++m )
        arrows[ m ] = enumerate_arrows( m, n );
    std::vector< std::map< cube_arrow, int > > index( n + 1 );
    for ( int m = 0; m <= n; ++m )
        for ( std::size_t k = 0; k < arrows[ m ].size(); ++k )
            index[ m ][ arrows[ m ][ k ] ] = static_cast< int >( k );

    std::vector< std::vector< cell > > cells( n + 1 );
    for ( int m = 0; m <= n; ++m )
    {
        if ( m == n && !with_top )
            break;
        for ( const auto& f : arrows[ m ] )
        {
            cell c{ arrow_name( f ), pull_word( f, w ), {}, {} };
            for ( int i = 1; i <= m; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                    c.faces.push_back( index[ m - 1 ].at( arrow_compose( f, face_arrow( m, i, alpha ) ) ) );
            for ( int i = 1; i < m; ++i )
                c.syms.push_back( index[ m ].at( arrow_compose( f, symmetry_arrow( m, i ) ) ) );
            cells[ m ].push_back( std::move( c ) );
        }
    }
    return make_precub( label_alphabet{ w }, n, std::move( cells ) );
}

} // namespace

int standard_cell( const cube_arrow& f )
{
    const auto list = enumerate_arrows( f.m, f.n );
    auto it = std::find( list.begin(), list.end(), f );
    if ( it == list.end() )
        throw error( "standard_cell: not a cube arrow" );
    return static_cast< int >( it - list.begin() );
}

precub_ptr standard_cube( const word& w ) { return build_cube( w, true ); }

precub_ptr standard_boundary( const word& w ) { return build_cube( w, false ); }

precub_ptr free_precub( const std::vector< action >& mu, int dim_bound )
{
    std::vector< std::string > labels;
    for ( const auto& a : mu )
        labels.push_back( a.label );
    const int l = static_cast< int >( mu.size() );

    // Words of length n in lexicographic order; the index of a word is its
    // base-l value.
    std::vector< std::vector< cell > > cells( dim_bound + 1 );
    auto index_of = [ & ]( const std::vector< int >& digits ) {
        int v = 0;
        for ( auto d : digits )
            v = v * l + d;
        return v;
    };
    for ( int n = 0; n <= dim_bound; ++n )
    {
        if ( l == 0 && n > 0 )
            break;
        std::vector< int > digits( n, 0 );
        while ( true )
        {
            cell c;
            c.name = "(";
            for ( int k = 0; k < n; ++k )
            {
                if ( k )
                    c.name += ",";
                c.name += mu[ digits[ k ] ].name;
                c.label.push_back( mu[ digits[ k ] ].label );
            }
            c.name += ")";
            for ( int i = 1; i <= n; ++i )
            {
                auto d = digits;
                d.erase( d.begin() + ( i - 1 ) );
                const int face = index_of( d );
                c.faces.push_back( face );
                c.faces.push_back( face );
            }
            for ( int i = 1; i < n; ++i )
            {
                auto d = digits;
                std::swap( d[ i - 1 ], d[ i ] );
                c.syms.push_back( index_of( d ) );
            }
            cells[ n ].push_back( std::move( c ) );

            int k = n - 1;
            while ( k >= 0 && digits[ k ] == l - 1 )
                digits[ k-- ] = 0;
            if ( k < 0 )
                break;
            ++digits[ k ];
        }
    }
    return make_precub( label_alphabet{ labels }, dim_bound, std::move( cells ) );
}

precub_ptr precub_interval( const label_alphabet& sigma, int dim_bound )
{
    std::vector< action > mu;
    for ( const auto& x : sigma.labels() )
        for ( int k = 0; k < 2; ++k )
            mu.push_back( { "(" + x + "," + std::to_string( k ) + ")", x } );
    return free_precub( mu, dim_bound );
}

precub_ptr precub_terminal( const label_alphabet& sigma, int dim_bound )
{
    std::vector< action > mu;
    for ( const auto& x : sigma.labels() )
        mu.push_back( { x, x } );
    return free_precub( mu, dim_bound );
}

precub_ptr empty_precub( int dim_bound )
{
    return make_precub( label_alphabet{}, dim_bound, std::vector< std::vector< cell > >( dim_bound + 1 ) );
}

precub_map standard_boundary_inclusion( const word& w )
{
    auto b = standard_boundary( w );
    precub_map f{ b, standard_cube( w ), {} };
    for ( int n = 0; n <= b->dim_bound(); ++n )
    {
        f.cell_map.emplace_back();
        for ( std::size_t x = 0; x < b->cell_count( n ); ++x )
            f.cell_map.back().push_back( static_cast< int >( x ) );
    }
    return f;
}

precub_map yoneda_map( const precub_ptr& k, int n, int x )
{
    auto c = standard_cube( k->at( n, x ).label );
    auto dom = with_dim_bound( c, k->dim_bound() );
    precub_map f{ dom, k, {} };
    for ( int m = 0; m <= k->dim_bound(); ++m )
    {
        f.cell_map.emplace_back();
        if ( m > n )
            continue;
        for ( const auto& a : enumerate_arrows( m, n ) )
            f.cell_map.back().push_back( apply_arrow( *k, a, x ) );
    }
    return f;
}

} // namespace hdts
