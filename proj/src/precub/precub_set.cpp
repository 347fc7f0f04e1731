#include "hdts/precub/precub_set.hpp"

#include <algorithm>

namespace hdts
{

precub_set::precub_set( label_alphabet sigma, int dim_bound, std::vector< std::vector< cell > > cells )
        : _sigma{ std::move( sigma ) }, _dim_bound{ dim_bound }, _cells{ std::move( cells ) }
{
    if ( _dim_bound < 0 )
        throw error( "negative dimension bound" );
    if ( static_cast< int >( _cells.size() ) != _dim_bound + 1 )
        throw error( "cell lists do not match the dimension bound" );
    for ( int n = 0; n <= _dim_bound; ++n )
        for ( auto& c : _cells[ n ] )
        {
            if ( static_cast< int >( c.faces.size() ) != 2 * n || static_cast< int >( c.syms.size() ) != std::max( 0, n - 1 ) )
                throw error( "cell " + c.name + " has operator tables of the wrong size" );
            for ( const auto& l : c.label )
                if ( !_sigma.contains( l ) )
                    _sigma = _sigma.merged( label_alphabet{ { l } } );
        }
}

std::size_t precub_set::total_cells() const
{
    std::size_t total = 0;
    for ( const auto& d : _cells )
        total += d.size();
    return total;
}

int precub_set::top_dim() const
{
    for ( int n = _dim_bound; n >= 0; --n )
        if ( !_cells[ n ].empty() )
            return n;
    return -1;
}

std::optional< int > precub_set::find_cell( int n, const std::string& name ) const
{
    if ( n < 0 || n > _dim_bound )
        return std::nullopt;
    const auto& cs = _cells[ n ];
    auto it = std::find_if( cs.begin(), cs.end(), [ & ]( const cell& c ) { return c.name == name; } );
    if ( it == cs.end() )
        return std::nullopt;
    return static_cast< int >( it - cs.begin() );
}

precub_ptr with_dim_bound( const precub_ptr& k, int dim_bound )
{
    if ( dim_bound == k->dim_bound() )
        return k;
    std::vector< std::vector< cell > > cells( dim_bound + 1 );
    for ( int n = 0; n <= std::min( dim_bound, k->dim_bound() ); ++n )
        cells[ n ] = k->cells( n );
    return make_precub( k->sigma(), dim_bound, std::move( cells ) );
}

int apply_generator( const precub_set& k, const cube_generator& g, int x )
{
    int y = g.k == cube_generator::kind::face ? k.face( g.n, x, g.i, g.alpha ) : k.sym( g.n, x, g.i );
    if ( y < 0 )
        throw error( "apply: operator table has a gap" );
    return y;
}

int apply_arrow( const precub_set& k, const cube_arrow& f, int x )
{
    if ( f.n > k.dim_bound() )
        throw error( "apply_arrow: dimension beyond the bound" );
    if ( x < 0 || static_cast< std::size_t >( x ) >= k.cell_count( f.n ) )
        throw error( "apply_arrow: no such cell" );
    for ( const auto& g : factorize( f ) )
        x = apply_generator( k, g, x );
    return x;
}

std::string to_string( precub_violation v )
{
    switch ( v )
    {
    case precub_violation::none: return "none";
    case precub_violation::table_gap: return "table_gap";
    case precub_violation::label_mismatch: return "label_mismatch";
    case precub_violation::coherence: return "coherence";
    }
    return "unknown";
}

namespace
{

precub_validation reject( precub_violation v, std::string msg ) { return { false, v, std::move( msg ) }; }

std::string cell_ref( const precub_set& k, int n, int x ) { return k.at( n, x ).name + " (dim " + std::to_string( n ) + ")"; }

} // namespace

precub_validation validate_presheaf( const precub_set& k )
{
    const int d = k.dim_bound();
    for ( int n = 0; n <= d; ++n )
        for ( int x = 0; x < static_cast< int >( k.cell_count( n ) ); ++x )
        {
            const auto& c = k.at( n, x );
            if ( static_cast< int >( c.label.size() ) != n )
                return reject( precub_violation::label_mismatch, "label of " + cell_ref( k, n, x ) + " has the wrong length" );
            for ( auto y : c.faces )
                if ( y < 0 || static_cast< std::size_t >( y ) >= k.cell_count( n - 1 ) )
                    return reject( precub_violation::table_gap, "face table of " + cell_ref( k, n, x ) + " has a gap" );
            for ( auto y : c.syms )
                if ( y < 0 || static_cast< std::size_t >( y ) >= k.cell_count( n ) )
                    return reject( precub_violation::table_gap, "symmetry table of " + cell_ref( k, n, x ) + " has a gap" );
        }

    for ( int n = 1; n <= d; ++n )
        for ( int x = 0; x < static_cast< int >( k.cell_count( n ) ); ++x )
        {
            const auto& w = k.at( n, x ).label;
            for ( int i = 1; i <= n; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                {
                    auto expected = w;
                    expected.erase( expected.begin() + ( i - 1 ) );
                    if ( k.at( n - 1, k.face( n, x, i, alpha ) ).label != expected )
                        return reject( precub_violation::label_mismatch,
                                       "face d_" + std::to_string( i ) + "^" + std::to_string( alpha ) + " of "
                                               + cell_ref( k, n, x ) + " does not delete letter " + std::to_string( i ) );
                }
            for ( int i = 1; i < n; ++i )
            {
                auto expected = w;
                std::swap( expected[ i - 1 ], expected[ i ] );
                if ( k.at( n, k.sym( n, x, i ) ).label != expected )
                    return reject( precub_violation::label_mismatch, "symmetry s_" + std::to_string( i ) + " of "
                                                                             + cell_ref( k, n, x ) + " does not swap letters" );
            }
        }

    for ( int n = 1; n <= d; ++n )
    {
        const auto gens = generators_into( n );
        std::vector< std::vector< cube_arrow > > into( n + 1 );
        for ( int dom : { n - 1, n } )
            for ( int m = 0; m <= dom; ++m )
            {
                auto arrows = enumerate_arrows( m, dom );
                into[ dom ].insert( into[ dom ].end(), arrows.begin(), arrows.end() );
            }
        for ( int x = 0; x < static_cast< int >( k.cell_count( n ) ); ++x )
            for ( const auto& g : gens )
            {
                const auto ga = g.arrow();
                const int gx = apply_generator( k, g, x );
                for ( const auto& h : into[ ga.m ] )
                {
                    const int lhs = apply_arrow( k, arrow_compose( ga, h ), x );
                    const int rhs = apply_arrow( k, h, gx );
                    if ( lhs != rhs )
                        return reject( precub_violation::coherence,
                                       "cell " + cell_ref( k, n, x ) + ": arrows " + arrow_name( arrow_compose( ga, h ) )
                                               + " and " + arrow_name( ga ) + " then " + arrow_name( h )
                                               + " act differently (" + k.at( h.m, lhs ).name + " vs "
                                               + k.at( h.m, rhs ).name + ")" );
                }
            }
    }
    return {};
}

std::optional< std::string > precub_map_violation( const precub_map& f )
{
    const auto& k = *f.domain;
    const auto& l = *f.codomain;
    if ( static_cast< int >( f.cell_map.size() ) != k.dim_bound() + 1 )
        return "cell map does not cover every dimension";
    for ( int n = 0; n <= k.dim_bound(); ++n )
    {
        if ( f.cell_map[ n ].size() != k.cell_count( n ) )
            return "cell map is not total in dimension " + std::to_string( n );
        for ( int x = 0; x < static_cast< int >( k.cell_count( n ) ); ++x )
        {
            const int y = f.cell_map[ n ][ x ];
            if ( y < 0 || static_cast< std::size_t >( y ) >= l.cell_count( n ) )
                return "image of " + k.at( n, x ).name + " is not a cell";
            if ( k.at( n, x ).label != l.at( n, y ).label )
                return "image of " + k.at( n, x ).name + " has another label";
        }
    }
    for ( int n = 1; n <= k.dim_bound(); ++n )
        for ( int x = 0; x < static_cast< int >( k.cell_count( n ) ); ++x )
        {
            const int y = f.cell_map[ n ][ x ];
            for ( int i = 1; i <= n; ++i )
                for ( int alpha = 0; alpha < 2; ++alpha )
                    if ( f.cell_map[ n - 1 ][ k.face( n, x, i, alpha ) ] != l.face( n, y, i, alpha ) )
                        return "map does not commute with a face of " + k.at( n, x ).name;
            for ( int i = 1; i < n; ++i )
                if ( f.cell_map[ n ][ k.sym( n, x, i ) ] != l.sym( n, y, i ) )
                    return "map does not commute with a symmetry of " + k.at( n, x ).name;
        }
    return std::nullopt;
}

precub_map identity_precub_map( const precub_ptr& k )
{
    precub_map id{ k, k, {} };
    for ( int n = 0; n <= k->dim_bound(); ++n )
    {
        id.cell_map.emplace_back();
        for ( std::size_t x = 0; x < k->cell_count( n ); ++x )
            id.cell_map.back().push_back( static_cast< int >( x ) );
    }
    return id;
}

precub_map compose( const precub_map& g, const precub_map& f )
{
    if ( f.codomain != g.domain && !( *f.codomain == *g.domain ) )
        throw error( "compose: codomain and domain differ" );
    precub_map out{ f.domain, g.codomain, {} };
    for ( std::size_t n = 0; n < f.cell_map.size(); ++n )
    {
        out.cell_map.emplace_back();
        for ( auto y : f.cell_map[ n ] )
            out.cell_map.back().push_back( g.cell_map[ n ][ y ] );
    }
    return out;
}

bool same_precub_map( const precub_map& f, const precub_map& g )
{
    return f.cell_map == g.cell_map && ( f.domain == g.domain || *f.domain == *g.domain )
        && ( f.codomain == g.codomain || *f.codomain == *g.codomain );
}

} // namespace hdts
