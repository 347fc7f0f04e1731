#include "hdts/core/weak_hdts.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <sstream>

namespace hdts
{

label_alphabet::label_alphabet( std::vector< std::string > labels ) : _labels{ std::move( labels ) }
{
    std::sort( _labels.begin(), _labels.end() );
    _labels.erase( std::unique( _labels.begin(), _labels.end() ), _labels.end() );
}

bool label_alphabet::contains( const std::string& label ) const
{
    return std::binary_search( _labels.begin(), _labels.end(), label );
}

label_alphabet label_alphabet::merged( const label_alphabet& other ) const
{
    auto all = _labels;
    all.insert( all.end(), other._labels.begin(), other._labels.end() );
    return label_alphabet{ std::move( all ) };
}

weak_hdts::weak_hdts( label_alphabet sigma, std::vector< std::string > states, std::vector< action > actions,
                      std::vector< transition > transitions )
        : _sigma{ std::move( sigma ) }, _states{ std::move( states ) }, _actions{ std::move( actions ) },
          _transitions{ std::move( transitions ) }
{
    const auto n_states = static_cast< state_id >( _states.size() );
    const auto n_actions = static_cast< action_id >( _actions.size() );

    for ( const auto& a : _actions )
        if ( !_sigma.contains( a.label ) )
            _sigma = _sigma.merged( label_alphabet{ { a.label } } );

    for ( auto& t : _transitions )
    {
        if ( t.source < 0 || t.source >= n_states || t.target < 0 || t.target >= n_states )
            throw error( "transition refers to a state that does not exist" );
        if ( t.actions.empty() )
            throw error( "transition without actions" );
        for ( auto u : t.actions )
            if ( u < 0 || u >= n_actions )
                throw error( "transition refers to an action that does not exist" );
        std::sort( t.actions.begin(), t.actions.end() );
    }
    std::sort( _transitions.begin(), _transitions.end() );
    _transitions.erase( std::unique( _transitions.begin(), _transitions.end() ), _transitions.end() );
}

bool weak_hdts::has_transition( const transition& t ) const
{
    return std::binary_search( _transitions.begin(), _transitions.end(), t );
}

std::vector< state_id > weak_hdts::targets( state_id source, std::span< const action_id > acts ) const
{
    std::vector< state_id > out;
    transition probe{ source, { acts.begin(), acts.end() }, INT_MIN };
    for ( auto it = std::lower_bound( _transitions.begin(), _transitions.end(), probe ); it != _transitions.end();
          ++it )
    {
        if ( it->source != source || it->actions != probe.actions )
            break;
        out.push_back( it->target );
    }
    return out;
}

std::size_t weak_hdts::max_arity() const
{
    std::size_t n = 0;
    for ( const auto& t : _transitions )
        n = std::max( n, t.arity() );
    return n;
}

std::size_t weak_hdts::count_of_arity( std::size_t n ) const
{
    return static_cast< std::size_t >(
            std::count_if( _transitions.begin(), _transitions.end(), [ n ]( const auto& t ) { return t.arity() == n; } ) );
}

std::optional< state_id > weak_hdts::find_state( const std::string& name ) const
{
    auto it = std::find( _states.begin(), _states.end(), name );
    if ( it == _states.end() )
        return std::nullopt;
    return static_cast< state_id >( it - _states.begin() );
}

std::optional< action_id > weak_hdts::find_action( const std::string& name ) const
{
    auto it = std::find_if( _actions.begin(), _actions.end(), [ & ]( const auto& a ) { return a.name == name; } );
    if ( it == _actions.end() )
        return std::nullopt;
    return static_cast< action_id >( it - _actions.begin() );
}

std::vector< std::string > weak_hdts::used_labels() const
{
    std::set< std::string > labels;
    for ( const auto& a : _actions )
        labels.insert( a.label );
    return { labels.begin(), labels.end() };
}

transition hdts_map::image( const transition& t ) const
{
    transition out{ state_map[ t.source ], {}, state_map[ t.target ] };
    out.actions.reserve( t.actions.size() );
    for ( auto u : t.actions )
        out.actions.push_back( action_map[ u ] );
    std::sort( out.actions.begin(), out.actions.end() );
    return out;
}

bool same_map( const hdts_map& f, const hdts_map& g )
{
    return f.state_map == g.state_map && f.action_map == g.action_map
        && ( f.domain == g.domain || *f.domain == *g.domain )
        && ( f.codomain == g.codomain || *f.codomain == *g.codomain );
}

std::optional< std::string > map_violation( const hdts_map& f )
{
    const auto& x = *f.domain;
    const auto& y = *f.codomain;
    if ( f.state_map.size() != x.state_count() )
        return "state map is not total";
    if ( f.action_map.size() != x.action_count() )
        return "action map is not total";
    for ( auto s : f.state_map )
        if ( s < 0 || static_cast< std::size_t >( s ) >= y.state_count() )
            return "state map leaves the codomain";
    for ( std::size_t u = 0; u < f.action_map.size(); ++u )
    {
        auto v = f.action_map[ u ];
        if ( v < 0 || static_cast< std::size_t >( v ) >= y.action_count() )
            return "action map leaves the codomain";
        if ( x.label_of( static_cast< action_id >( u ) ) != y.label_of( v ) )
            return "action " + x.action_at( static_cast< action_id >( u ) ).name + " changes label";
    }
    for ( const auto& t : x.transitions() )
        if ( !y.has_transition( f.image( t ) ) )
            return "image of " + to_string( x, t ) + " is not a transition";
    return std::nullopt;
}

hdts_map identity_map( const hdts_ptr& x )
{
    hdts_map id{ x, x, {}, {} };
    for ( std::size_t s = 0; s < x->state_count(); ++s )
        id.state_map.push_back( static_cast< state_id >( s ) );
    for ( std::size_t u = 0; u < x->action_count(); ++u )
        id.action_map.push_back( static_cast< action_id >( u ) );
    return id;
}

hdts_map compose( const hdts_map& g, const hdts_map& f )
{
    if ( f.codomain != g.domain && !( *f.codomain == *g.domain ) )
        throw error( "compose: codomain and domain differ" );
    hdts_map out{ f.domain, g.codomain, {}, {} };
    out.state_map.reserve( f.state_map.size() );
    for ( auto s : f.state_map )
        out.state_map.push_back( g.state_map[ s ] );
    out.action_map.reserve( f.action_map.size() );
    for ( auto u : f.action_map )
        out.action_map.push_back( g.action_map[ u ] );
    return out;
}

std::string to_string( const weak_hdts& x, const transition& t )
{
    std::ostringstream os;
    os << '(' << x.state_name( t.source );
    for ( auto u : t.actions )
        os << ", " << x.action_at( u ).name;
    os << ", " << x.state_name( t.target ) << ')';
    return os.str();
}

} // namespace hdts
