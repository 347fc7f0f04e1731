#include "hdts/precub/hom.hpp"

#include <algorithm>
#include <set>

namespace hdts
{

namespace
{

class precub_search
{
public:
    precub_search( const precub_ptr& k, const precub_ptr& l, const precub_hom_options& opt,
                   const std::function< bool( const precub_map& ) >& visit )
            : _k{ k }, _l{ l }, _opt{ opt }, _visit{ visit }, _counter{ opt.limits, "precubical hom search nodes" }
    {
        _map.domain = k;
        _map.codomain = l;
        for ( int n = 0; n <= k->dim_bound(); ++n )
        {
            _map.cell_map.emplace_back( k->cell_count( n ), -1 );
            _used.emplace_back( l->cell_count( n ), false );
        }
        for ( int n = k->dim_bound(); n >= 0; --n )
            for ( int x = 0; x < static_cast< int >( k->cell_count( n ) ); ++x )
                _order.emplace_back( n, x );
    }

    void run()
    {
        for ( int n = 0; n <= _k->dim_bound(); ++n )
        {
            if ( _k->cell_count( n ) > 0 && n > _l->dim_bound() )
                return;
            if ( _opt.bijective && _k->cell_count( n ) != _l->cell_count( n ) )
                return;
        }
        if ( _opt.bijective )
            for ( int n = _k->dim_bound() + 1; n <= _l->dim_bound(); ++n )
                if ( _l->cell_count( n ) > 0 )
                    return;
        rec( 0 );
    }

private:
    bool allowed( int n, int x, int y ) const
    {
        if ( _opt.allowed.empty() )
            return true;
        const auto& a = _opt.allowed[ n ][ x ];
        return std::find( a.begin(), a.end(), y ) != a.end();
    }

    // Assigns x -> y and everything it forces; records assignments on the
    // trail. Returns false on a conflict.
    bool assign( int n, int x, int y )
    {
        auto& slot = _map.cell_map[ n ][ x ];
        if ( slot >= 0 )
            return slot == y;
        if ( _k->at( n, x ).label != _l->at( n, y ).label || !allowed( n, x, y ) )
            return false;
        if ( _opt.bijective && _used[ n ][ y ] )
            return false;
        slot = y;
        if ( _opt.bijective )
            _used[ n ][ y ] = true;
        _trail.emplace_back( n, x );
        for ( int i = 1; i <= n; ++i )
            for ( int alpha = 0; alpha < 2; ++alpha )
                if ( !assign( n - 1, _k->face( n, x, i, alpha ), _l->face( n, y, i, alpha ) ) )
                    return false;
        for ( int i = 1; i < n; ++i )
            if ( !assign( n, _k->sym( n, x, i ), _l->sym( n, y, i ) ) )
                return false;
        return true;
    }

    void undo( std::size_t mark )
    {
        while ( _trail.size() > mark )
        {
            auto [ n, x ] = _trail.back();
            _trail.pop_back();
            if ( _opt.bijective )
                _used[ n ][ _map.cell_map[ n ][ x ] ] = false;
            _map.cell_map[ n ][ x ] = -1;
        }
    }

    bool rec( std::size_t p )
    {
        while ( p < _order.size() && _map.cell_map[ _order[ p ].first ][ _order[ p ].second ] >= 0 )
            ++p;
        if ( p == _order.size() )
        {
            ++_found;
            if ( !_visit( _map ) )
                return false;
            return _found < _opt.limit;
        }
        auto [ n, x ] = _order[ p ];
        for ( int y = 0; y < static_cast< int >( _l->cell_count( n ) ); ++y )
        {
            _counter.tick();
            const auto mark = _trail.size();
            bool keep = true;
            if ( assign( n, x, y ) )
                keep = rec( p + 1 );
            undo( mark );
            if ( !keep )
                return false;
        }
        return true;
    }

    precub_ptr _k, _l;
    const precub_hom_options& _opt;
    const std::function< bool( const precub_map& ) >& _visit;
    search_counter _counter;

    precub_map _map;
    std::vector< std::vector< bool > > _used;
    std::vector< std::pair< int, int > > _order;
    std::vector< std::pair< int, int > > _trail;
    std::size_t _found = 0;
};

} // namespace

void for_each_precub_hom( const precub_ptr& k, const precub_ptr& l, const precub_hom_options& opt,
                          const std::function< bool( const precub_map& ) >& visit )
{
    precub_search s{ k, l, opt, visit };
    s.run();
}

std::vector< precub_map > precub_hom_set( const precub_ptr& k, const precub_ptr& l, const precub_hom_options& opt )
{
    std::vector< precub_map > out;
    for_each_precub_hom( k, l, opt, [ & ]( const precub_map& f ) {
        out.push_back( f );
        return true;
    } );
    return out;
}

std::optional< precub_map > find_precub_isomorphism( const precub_ptr& k, const precub_ptr& l, const budget& b )
{
    const int d = std::max( k->dim_bound(), l->dim_bound() );
    auto kk = with_dim_bound( k, d );
    auto ll = with_dim_bound( l, d );
    precub_hom_options opt;
    opt.bijective = true;
    opt.limit = 1;
    opt.limits = b;
    std::optional< precub_map > out;
    for_each_precub_hom( kk, ll, opt, [ & ]( const precub_map& f ) {
        out = f;
        return false;
    } );
    return out;
}

bool is_precub_isomorphism( const precub_map& f )
{
    const auto& l = *f.codomain;
    for ( int n = 0; n <= std::max( f.domain->dim_bound(), l.dim_bound() ); ++n )
    {
        const std::size_t domain_cells = n < static_cast< int >( f.cell_map.size() ) ? f.cell_map[ n ].size() : 0;
        if ( domain_cells != l.cell_count( n ) )
            return false;
        if ( domain_cells == 0 )
            continue;
        std::set< int > image( f.cell_map[ n ].begin(), f.cell_map[ n ].end() );
        if ( image.size() != domain_cells )
            return false;
    }
    return true;
}

} // namespace hdts
