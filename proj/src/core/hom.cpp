#include "hdts/core/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hdts
{

namespace
{

// Per-arity counts of outgoing and incoming transitions.
using signature = std::vector< int >;

std::vector< signature > state_signatures( const weak_hdts& x, std::size_t max_arity )
{
    std::vector< signature > out( x.state_count(), signature( 2 * ( max_arity + 1 ), 0 ) );
    for ( const auto& t : x.transitions() )
    {
        ++out[ t.source ][ 2 * t.arity() ];
        ++out[ t.target ][ 2 * t.arity() + 1 ];
    }
    return out;
}

std::vector< signature > action_signatures( const weak_hdts& x, std::size_t max_arity )
{
    std::vector< signature > out( x.action_count(), signature( max_arity + 1, 0 ) );
    for ( const auto& t : x.transitions() )
        for ( auto u : t.actions )
            ++out[ u ][ t.arity() ];
    return out;
}

class hom_search
{
public:
    hom_search( const hdts_ptr& x, const hdts_ptr& y, const hom_options& opt,
                const std::function< bool( const hdts_map& ) >& visit )
            : _x{ x }, _y{ y }, _opt{ opt }, _visit{ visit }, _counter{ opt.limits, "hom search nodes" }
    {
        const auto ns = x->state_count();
        const auto na = x->action_count();
        _var_count = ns + na;
        _pos.assign( _var_count, -1 );

        std::vector< std::size_t > order_t( x->transition_count() );
        for ( std::size_t i = 0; i < order_t.size(); ++i )
            order_t[ i ] = i;
        std::stable_sort( order_t.begin(), order_t.end(), [ & ]( auto a, auto b ) {
            return x->transitions()[ a ].arity() < x->transitions()[ b ].arity();
        } );
        auto push = [ & ]( std::size_t var ) {
            if ( _pos[ var ] < 0 )
            {
                _pos[ var ] = static_cast< int >( _order.size() );
                _order.push_back( var );
            }
        };
        for ( auto ti : order_t )
        {
            const auto& t = x->transitions()[ ti ];
            push( static_cast< std::size_t >( t.source ) );
            for ( auto u : t.actions )
                push( ns + static_cast< std::size_t >( u ) );
            push( static_cast< std::size_t >( t.target ) );
        }
        for ( std::size_t v = 0; v < _var_count; ++v )
            push( v );

        _checks.assign( _var_count, {} );
        _hint.assign( _var_count, -1 );
        for ( std::size_t ti = 0; ti < x->transition_count(); ++ti )
        {
            const auto& t = x->transitions()[ ti ];
            int last = std::max( _pos[ t.source ], _pos[ t.target ] );
            int before_target = _pos[ t.source ];
            for ( auto u : t.actions )
            {
                last = std::max( last, _pos[ ns + u ] );
                before_target = std::max( before_target, _pos[ ns + u ] );
            }
            _checks[ last ].push_back( ti );
            const int pt = _pos[ t.target ];
            if ( before_target < pt && _hint[ pt ] < 0 )
                _hint[ pt ] = static_cast< int >( ti );
        }

        for ( std::size_t v = 0; v < y->action_count(); ++v )
            _by_label[ y->label_of( static_cast< action_id >( v ) ) ].push_back( static_cast< action_id >( v ) );

        if ( opt.bijective )
        {
            const auto m = std::max( x->max_arity(), y->max_arity() );
            _xs_sig = state_signatures( *x, m );
            _ys_sig = state_signatures( *y, m );
            _xa_sig = action_signatures( *x, m );
            _ya_sig = action_signatures( *y, m );
            _used_s.assign( y->state_count(), false );
            _used_a.assign( y->action_count(), false );
        }

        _map.domain = x;
        _map.codomain = y;
        _map.state_map.assign( ns, -1 );
        _map.action_map.assign( na, -1 );
    }

    void run()
    {
        if ( _opt.bijective
             && ( _x->state_count() != _y->state_count() || _x->action_count() != _y->action_count() ) )
            return;
        if ( !_opt.allowed_states.empty() && _opt.allowed_states.size() != _x->state_count() )
            throw error( "hom search: candidate list size does not match the states" );
        if ( !_opt.allowed_actions.empty() && _opt.allowed_actions.size() != _x->action_count() )
            throw error( "hom search: candidate list size does not match the actions" );
        rec( 0 );
    }

private:
    bool rec( std::size_t p )
    {
        if ( p == _order.size() )
        {
            ++_found;
            if ( !_visit( _map ) )
                return false;
            return _found < _opt.limit;
        }
        const auto var = _order[ p ];
        const auto ns = _x->state_count();
        if ( var < ns )
        {
            for ( auto c : state_candidates( p, static_cast< state_id >( var ) ) )
            {
                _counter.tick();
                if ( _opt.bijective && ( _used_s[ c ] || _xs_sig[ var ] != _ys_sig[ c ] ) )
                    continue;
                _map.state_map[ var ] = c;
                if ( _opt.bijective )
                    _used_s[ c ] = true;
                bool keep = true;
                if ( consistent( p ) )
                    keep = rec( p + 1 );
                if ( _opt.bijective )
                    _used_s[ c ] = false;
                _map.state_map[ var ] = -1;
                if ( !keep )
                    return false;
            }
        }
        else
        {
            const auto u = static_cast< action_id >( var - ns );
            for ( auto c : action_candidates( u ) )
            {
                _counter.tick();
                if ( _opt.bijective && ( _used_a[ c ] || _xa_sig[ u ] != _ya_sig[ c ] ) )
                    continue;
                _map.action_map[ u ] = c;
                if ( _opt.bijective )
                    _used_a[ c ] = true;
                bool keep = true;
                if ( consistent( p ) )
                    keep = rec( p + 1 );
                if ( _opt.bijective )
                    _used_a[ c ] = false;
                _map.action_map[ u ] = -1;
                if ( !keep )
                    return false;
            }
        }
        return true;
    }

    std::vector< state_id > state_candidates( std::size_t p, state_id s ) const
    {
        std::vector< state_id > out;
        if ( _hint[ p ] >= 0 )
        {
            const auto& t = _x->transitions()[ _hint[ p ] ];
            const auto img = _map.image( transition{ t.source, t.actions, t.source } );
            out = _y->targets( img.source, img.actions );
        }
        else if ( !_opt.allowed_states.empty() )
            return _opt.allowed_states[ s ];
        else
        {
            for ( std::size_t c = 0; c < _y->state_count(); ++c )
                out.push_back( static_cast< state_id >( c ) );
            return out;
        }
        if ( !_opt.allowed_states.empty() )
        {
            const auto& allowed = _opt.allowed_states[ s ];
            std::erase_if( out, [ & ]( state_id c ) {
                return std::find( allowed.begin(), allowed.end(), c ) == allowed.end();
            } );
        }
        return out;
    }

    std::vector< action_id > action_candidates( action_id u ) const
    {
        if ( !_opt.allowed_actions.empty() )
        {
            std::vector< action_id > out;
            for ( auto c : _opt.allowed_actions[ u ] )
                if ( _y->label_of( c ) == _x->label_of( u ) )
                    out.push_back( c );
            return out;
        }
        auto it = _by_label.find( _x->label_of( u ) );
        if ( it == _by_label.end() )
            return {};
        return it->second;
    }

    bool consistent( std::size_t p ) const
    {
        for ( auto ti : _checks[ p ] )
            if ( !_y->has_transition( _map.image( _x->transitions()[ ti ] ) ) )
                return false;
        return true;
    }

    hdts_ptr _x, _y;
    const hom_options& _opt;
    const std::function< bool( const hdts_map& ) >& _visit;
    search_counter _counter;

    std::size_t _var_count = 0;
    std::vector< std::size_t > _order;
    std::vector< int > _pos;
    std::vector< std::vector< std::size_t > > _checks;
    std::vector< int > _hint;
    std::map< std::string, std::vector< action_id > > _by_label;

    std::vector< signature > _xs_sig, _ys_sig, _xa_sig, _ya_sig;
    std::vector< bool > _used_s, _used_a;

    hdts_map _map;
    std::size_t _found = 0;
};

} // namespace

void for_each_hom( const hdts_ptr& x, const hdts_ptr& y, const hom_options& opt,
                   const std::function< bool( const hdts_map& ) >& visit )
{
    hom_search search{ x, y, opt, visit };
    search.run();
}

std::vector< hdts_map > hom_set( const hdts_ptr& x, const hdts_ptr& y, const hom_options& opt )
{
    std::vector< hdts_map > out;
    for_each_hom( x, y, opt, [ & ]( const hdts_map& f ) {
        out.push_back( f );
        return true;
    } );
    return out;
}

namespace
{

bool same_shape( const weak_hdts& x, const weak_hdts& y )
{
    if ( x.state_count() != y.state_count() || x.action_count() != y.action_count()
         || x.transition_count() != y.transition_count() || x.max_arity() != y.max_arity() )
        return false;
    for ( std::size_t n = 1; n <= x.max_arity(); ++n )
        if ( x.count_of_arity( n ) != y.count_of_arity( n ) )
            return false;
    std::multiset< std::string > lx, ly;
    for ( const auto& a : x.actions() )
        lx.insert( a.label );
    for ( const auto& a : y.actions() )
        ly.insert( a.label );
    return lx == ly;
}

} // namespace

std::optional< hdts_map > find_isomorphism( const hdts_ptr& x, const hdts_ptr& y, const budget& b )
{
    if ( !same_shape( *x, *y ) )
        return std::nullopt;
    hom_options opt;
    opt.bijective = true;
    opt.limit = 1;
    opt.limits = b;
    std::optional< hdts_map > out;
    for_each_hom( x, y, opt, [ & ]( const hdts_map& f ) {
        out = f;
        return false;
    } );
    return out;
}

bool is_isomorphism( const hdts_map& f )
{
    const auto& x = *f.domain;
    const auto& y = *f.codomain;
    if ( x.state_count() != y.state_count() || x.action_count() != y.action_count() )
        return false;
    std::set< state_id > s( f.state_map.begin(), f.state_map.end() );
    std::set< action_id > a( f.action_map.begin(), f.action_map.end() );
    if ( s.size() != y.state_count() || a.size() != y.action_count() )
        return false;
    std::set< transition > image;
    for ( const auto& t : x.transitions() )
        image.insert( f.image( t ) );
    return image.size() == y.transition_count()
        && std::all_of( image.begin(), image.end(), [ & ]( const auto& t ) { return y.has_transition( t ); } );
}

bool is_cofibration_hdts( const hdts_map& f )
{
    std::set< action_id > a( f.action_map.begin(), f.action_map.end() );
    return a.size() == f.action_map.size();
}

bool isomorphic_arrows( const hdts_map& f, const hdts_map& g, const budget& b )
{
    if ( !same_shape( *f.domain, *g.domain ) || !same_shape( *f.codomain, *g.codomain ) )
        return false;
    hom_options outer;
    outer.bijective = true;
    outer.limits = b;
    bool found = false;
    for_each_hom( f.domain, g.domain, outer, [ & ]( const hdts_map& a ) {
        const auto& cod = *f.codomain;
        std::vector< std::vector< state_id > > as( cod.state_count() );
        std::vector< std::vector< action_id > > aa( cod.action_count() );
        std::vector< bool > fixed_s( cod.state_count() ), fixed_a( cod.action_count() );
        for ( std::size_t s = 0; s < a.state_map.size(); ++s )
        {
            const auto from = f.state_map[ s ];
            const auto to = g.state_map[ a.state_map[ s ] ];
            if ( fixed_s[ from ] && as[ from ].front() != to )
                return true;
            fixed_s[ from ] = true;
            as[ from ] = { to };
        }
        for ( std::size_t u = 0; u < a.action_map.size(); ++u )
        {
            const auto from = f.action_map[ u ];
            const auto to = g.action_map[ a.action_map[ u ] ];
            if ( fixed_a[ from ] && aa[ from ].front() != to )
                return true;
            fixed_a[ from ] = true;
            aa[ from ] = { to };
        }
        for ( std::size_t s = 0; s < as.size(); ++s )
            if ( !fixed_s[ s ] )
                for ( std::size_t c = 0; c < g.codomain->state_count(); ++c )
                    as[ s ].push_back( static_cast< state_id >( c ) );
        for ( std::size_t u = 0; u < aa.size(); ++u )
            if ( !fixed_a[ u ] )
                for ( std::size_t c = 0; c < g.codomain->action_count(); ++c )
                    aa[ u ].push_back( static_cast< action_id >( c ) );
        hom_options inner;
        inner.bijective = true;
        inner.limit = 1;
        inner.limits = b;
        inner.allowed_states = std::move( as );
        inner.allowed_actions = std::move( aa );
        for_each_hom( f.codomain, g.codomain, inner, [ & ]( const hdts_map& ) {
            found = true;
            return false;
        } );
        return !found;
    } );
    return found;
}

} // namespace hdts
