#include "hdts/precub/cube_arrow.hpp"

#include <algorithm>
#include <functional>

namespace hdts
{

bool cube_arrow::valid() const
{
    if ( m < 0 || n < m || static_cast< int >( fhat.size() ) != n )
        return false;
    std::vector< bool > hit( m + 1, false );
    int finite = 0;
    for ( auto v : fhat )
    {
        if ( v == neg_inf || v == pos_inf )
            continue;
        if ( v < 1 || v > m || hit[ v ] )
            return false;
        hit[ v ] = true;
        ++finite;
    }
    return finite == m;
}

cube_arrow identity_arrow( int n )
{
    cube_arrow f{ n, n, {} };
    for ( int j = 1; j <= n; ++j )
        f.fhat.push_back( j );
    return f;
}

cube_arrow face_arrow( int n, int i, int alpha )
{
    if ( i < 1 || i > n )
        throw error( "face_arrow: index out of range" );
    cube_arrow f{ n - 1, n, {} };
    for ( int j = 1; j <= n; ++j )
    {
        if ( j < i )
            f.fhat.push_back( j );
        else if ( j == i )
            f.fhat.push_back( alpha ? pos_inf : neg_inf );
        else
            f.fhat.push_back( j - 1 );
    }
    return f;
}

cube_arrow symmetry_arrow( int n, int i )
{
    if ( i < 1 || i >= n )
        throw error( "symmetry_arrow: index out of range" );
    auto f = identity_arrow( n );
    std::swap( f.fhat[ i - 1 ], f.fhat[ i ] );
    return f;
}

cube_arrow arrow_compose( const cube_arrow& g, const cube_arrow& f )
{
    if ( g.m != f.n )
        throw error( "arrow_compose: dimension mismatch" );
    cube_arrow out{ f.m, g.n, {} };
    for ( auto v : g.fhat )
        out.fhat.push_back( v == neg_inf || v == pos_inf ? v : f.fhat[ v - 1 ] );
    return out;
}

std::vector< cube_arrow > enumerate_arrows( int m, int n )
{
    std::vector< cube_arrow > out;
    if ( m < 0 || n < m )
        return out;
    cube_arrow cur{ m, n, std::vector< int >( n, 0 ) };
    std::vector< bool > used( m + 1, false );
    std::function< void( int, int ) > rec = [ & ]( int j, int constants ) {
        if ( j == n )
        {
            out.push_back( cur );
            return;
        }
        const int remaining = n - j;
        const int finite_left = m - ( j - constants );
        for ( int v = 1; v <= m; ++v )
            if ( !used[ v ] )
            {
                used[ v ] = true;
                cur.fhat[ j ] = v;
                rec( j + 1, constants );
                used[ v ] = false;
            }
        if ( remaining > finite_left )
            for ( int c : { neg_inf, pos_inf } )
            {
                cur.fhat[ j ] = c;
                rec( j + 1, constants + 1 );
            }
    };
    rec( 0, 0 );
    return out;
}

cube_arrow cube_generator::arrow() const
{
    return k == kind::face ? face_arrow( n, i, alpha ) : symmetry_arrow( n, i );
}

std::vector< cube_generator > generators_into( int n )
{
    std::vector< cube_generator > out;
    for ( int i = 1; i <= n; ++i )
        for ( int alpha = 0; alpha < 2; ++alpha )
            out.push_back( { cube_generator::kind::face, n, i, alpha } );
    for ( int i = 1; i < n; ++i )
        out.push_back( { cube_generator::kind::symmetry, n, i, 0 } );
    return out;
}

std::vector< cube_generator > factorize( const cube_arrow& f )
{
    if ( !f.valid() )
        throw error( "factorize: not a cube arrow" );
    std::vector< cube_generator > out;

    // Constants at positions j_1 < ... < j_r; d = delta_{j_r} o ... o delta_{j_1}.
    std::vector< int > residual;
    std::vector< std::pair< int, int > > constants;
    for ( int j = 1; j <= f.n; ++j )
    {
        const int v = f.fhat[ j - 1 ];
        if ( v == neg_inf || v == pos_inf )
            constants.emplace_back( j, v == pos_inf ? 1 : 0 );
        else
            residual.push_back( v );
    }
    int dim = f.n;
    for ( auto it = constants.rbegin(); it != constants.rend(); ++it )
    {
        out.push_back( { cube_generator::kind::face, dim, it->first, it->second } );
        --dim;
    }

    // Sorting the residual table by adjacent swaps c_1, ..., c_k gives
    // s = sigma_{c_1} o ... o sigma_{c_k}.
    const int m = f.m;
    for ( int pass = 0; pass < m; ++pass )
        for ( int b = 1; b < m; ++b )
            if ( residual[ b - 1 ] > residual[ b ] )
            {
                std::swap( residual[ b - 1 ], residual[ b ] );
                out.push_back( { cube_generator::kind::symmetry, m, b, 0 } );
            }
    return out;
}

word pull_word( const cube_arrow& f, const word& w )
{
    if ( static_cast< int >( w.size() ) != f.n )
        throw error( "pull_word: word length does not match the arrow" );
    word out( f.m );
    for ( int j = 1; j <= f.n; ++j )
    {
        const int v = f.fhat[ j - 1 ];
        if ( v != neg_inf && v != pos_inf )
            out[ v - 1 ] = w[ j - 1 ];
    }
    return out;
}

int position_of( const cube_arrow& f, int k )
{
    for ( int j = 1; j <= f.n; ++j )
        if ( f.fhat[ j - 1 ] == k )
            return j;
    throw error( "position_of: value not in the table" );
}

std::string arrow_name( const cube_arrow& f )
{
    std::string out = "[";
    for ( int j = 0; j < f.n; ++j )
    {
        if ( j )
            out += ",";
        const int v = f.fhat[ j ];
        out += v == neg_inf ? "-" : v == pos_inf ? "+" : std::to_string( v );
    }
    return out + "]";
}

} // namespace hdts
