#include "hdts/io/json_io.hpp"

#include "hdts/core/closure.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace hdts::io
{

json parse_json( const std::string& text )
{
    try
    {
        return json::parse( text );
    }
    catch ( const json::parse_error& e )
    {
        const auto upto = std::min< std::size_t >( e.byte, text.size() );
        const auto line = static_cast< std::size_t >( std::count( text.begin(), text.begin() + static_cast< std::ptrdiff_t >( upto ), '\n' ) ) + 1;
        throw load_error( std::string{ "malformed JSON: " } + e.what(), line, true );
    }
}

json read_json_file( const std::filesystem::path& path )
{
    std::ifstream in( path );
    if ( !in )
        throw load_error( "cannot open '" + path.string() + "'", 0, true );
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json( ss.str() );
}

std::string to_string( document_kind k )
{
    switch ( k )
    {
    case document_kind::hdts:
        return "hdts";
    case document_kind::precub:
        return "precub";
    case document_kind::hdts_map:
        return "hdts_map";
    case document_kind::precub_map:
        return "precub_map";
    }
    return "?";
}

document_kind kind_of( const json& j )
{
    if ( !j.is_object() )
        throw load_error( "the document is not a JSON object" );
    if ( j.contains( "cell_map" ) )
        return document_kind::precub_map;
    if ( j.contains( "state_map" ) || j.contains( "action_map" ) )
        return document_kind::hdts_map;
    if ( j.contains( "cells" ) )
        return document_kind::precub;
    return document_kind::hdts;
}

namespace
{

const json& field( const json& j, const char* key )
{
    if ( !j.is_object() || !j.contains( key ) )
        throw load_error( std::string{ "missing field \"" } + key + "\"" );
    return j.at( key );
}

std::string text( const json& j, const std::string& what )
{
    if ( !j.is_string() )
        throw load_error( what + " must be a string" );
    return j.get< std::string >();
}

std::vector< std::string > texts( const json& j, const std::string& what )
{
    if ( !j.is_array() )
        throw load_error( what + " must be an array" );
    std::vector< std::string > out;
    for ( const auto& e : j )
        out.push_back( text( e, "an entry of " + what ) );
    return out;
}

json sigma_json( const label_alphabet& s )
{
    auto out = json::array();
    for ( const auto& x : s.labels() )
        out.push_back( x );
    return out;
}

// A document given inline or as a path relative to base.
json resolve( const json& j, const std::filesystem::path& base )
{
    if ( j.is_string() )
        return read_json_file( base / j.get< std::string >() );
    return j;
}

} // namespace

hdts_ptr hdts_from_json( const json& j, const budget& b )
{
    hdts_candidate c;
    c.sigma = texts( field( j, "sigma" ), "\"sigma\"" );
    c.states = texts( field( j, "states" ), "\"states\"" );
    const auto& acts = field( j, "actions" );
    if ( !acts.is_array() )
        throw load_error( "\"actions\" must be an array" );
    for ( const auto& a : acts )
        c.actions.push_back( { text( field( a, "id" ), "an action id" ), text( field( a, "label" ), "an action label" ) } );

    std::map< std::string, std::size_t > order;
    for ( std::size_t i = 0; i < c.actions.size(); ++i )
        order.emplace( c.actions[ i ].name, i );
    const auto& ts = field( j, "transitions" );
    if ( !ts.is_array() )
        throw load_error( "\"transitions\" must be an array" );
    for ( const auto& t : ts )
    {
        hdts_candidate::raw_transition rt{ text( field( t, "from" ), "\"from\"" ),
                                           texts( field( t, "actions" ), "transition \"actions\"" ),
                                           text( field( t, "to" ), "\"to\"" ) };
        for ( const auto& u : rt.actions )
            if ( !order.contains( u ) )
                throw load_error( "dangling action id '" + u + "' in a transition from '" + rt.from + "'" );
        std::stable_sort( rt.actions.begin(), rt.actions.end(),
                          [ & ]( const auto& u, const auto& v ) { return order.at( u ) < order.at( v ); } );
        c.transitions.push_back( std::move( rt ) );
    }

    const auto v = validate( c, b );
    if ( !v.valid )
    {
        auto msg = "invalid system (" + to_string( v.kind ) + "): " + v.message;
        throw load_error( msg );
    }
    return std::make_shared< const weak_hdts >( canonicalize( c ) );
}

json to_json( const weak_hdts& x )
{
    json out;
    out[ "sigma" ] = sigma_json( x.sigma() );
    out[ "states" ] = x.state_names();
    auto acts = json::array();
    for ( const auto& a : x.actions() )
        acts.push_back( { { "id", a.name }, { "label", a.label } } );
    out[ "actions" ] = std::move( acts );
    auto ts = json::array();
    for ( const auto& t : x.transitions() )
    {
        auto names = json::array();
        for ( auto u : t.actions )
            names.push_back( x.action_at( u ).name );
        ts.push_back( { { "from", x.state_name( t.source ) }, { "actions", std::move( names ) }, { "to", x.state_name( t.target ) } } );
    }
    out[ "transitions" ] = std::move( ts );
    return out;
}

precub_ptr precub_from_json( const json& j )
{
    const label_alphabet sigma{ texts( field( j, "sigma" ), "\"sigma\"" ) };
    const auto& bound = field( j, "dim_bound" );
    if ( !bound.is_number_integer() || bound.get< int >() < 0 )
        throw load_error( "\"dim_bound\" must be a nonnegative integer" );
    const int d = bound.get< int >();
    const auto& cells_json = field( j, "cells" );
    if ( !cells_json.is_object() )
        throw load_error( "\"cells\" must be an object keyed by dimension" );
    for ( const auto& [ key, value ] : cells_json.items() )
    {
        std::size_t used = 0;
        int n = -1;
        try
        {
            n = std::stoi( key, &used );
        }
        catch ( const std::exception& )
        {
        }
        if ( used != key.size() || n < 0 || n > d )
            throw load_error( "cell dimension '" + key + "' outside 0.." + std::to_string( d ) );
        if ( !value.is_array() )
            throw load_error( "cells of dimension " + key + " must be an array" );
    }

    std::vector< std::map< std::string, int > > index( d + 1 );
    std::vector< std::vector< cell > > cells( d + 1 );
    for ( int n = 0; n <= d; ++n )
    {
        const auto key = std::to_string( n );
        if ( !cells_json.contains( key ) )
            continue;
        for ( const auto& c : cells_json.at( key ) )
        {
            cell k;
            k.name = text( field( c, "id" ), "a cell id" );
            if ( !index[ n ].emplace( k.name, static_cast< int >( cells[ n ].size() ) ).second )
                throw load_error( "duplicate cell id '" + k.name + "' in dimension " + key );
            if ( c.contains( "label" ) )
                k.label = texts( c.at( "label" ), "the label of '" + k.name + "'" );
            if ( static_cast< int >( k.label.size() ) != n )
                throw load_error( "cell '" + k.name + "' of dimension " + key + " has a label word of length "
                                  + std::to_string( k.label.size() ) );
            for ( const auto& x : k.label )
                if ( !sigma.contains( x ) )
                    throw load_error( "cell '" + k.name + "' has label '" + x + "' outside the alphabet" );
            k.faces.assign( 2 * n, -1 );
            k.syms.assign( n > 0 ? n - 1 : 0, -1 );
            cells[ n ].push_back( std::move( k ) );
        }
    }

    auto lookup = [ & ]( int n, const json& id, const std::string& owner ) {
        const auto name = text( id, "an operator value of '" + owner + "'" );
        auto it = index[ n ].find( name );
        if ( it == index[ n ].end() )
            throw load_error( "dangling cell id '" + name + "' in the operators of '" + owner + "'" );
        return it->second;
    };
    for ( int n = 1; n <= d; ++n )
    {
        const auto key = std::to_string( n );
        if ( !cells_json.contains( key ) )
            continue;
        std::size_t x = 0;
        for ( const auto& c : cells_json.at( key ) )
        {
            auto& k = cells[ n ][ x++ ];
            if ( c.contains( "d" ) )
                for ( const auto& [ op, id ] : c.at( "d" ).items() )
                {
                    int i = 0, alpha = -1;
                    char comma = 0;
                    std::istringstream in( op );
                    if ( !( in >> i >> comma >> alpha ) || comma != ',' || i < 1 || i > n || ( alpha != 0 && alpha != 1 ) )
                        throw load_error( "bad face key '" + op + "' on cell '" + k.name + "'" );
                    k.faces[ 2 * ( i - 1 ) + alpha ] = lookup( n - 1, id, k.name );
                }
            if ( c.contains( "s" ) )
                for ( const auto& [ op, id ] : c.at( "s" ).items() )
                {
                    std::size_t used = 0;
                    int i = 0;
                    try
                    {
                        i = std::stoi( op, &used );
                    }
                    catch ( const std::exception& )
                    {
                    }
                    if ( used != op.size() || i < 1 || i >= n )
                        throw load_error( "bad symmetry key '" + op + "' on cell '" + k.name + "'" );
                    k.syms[ i - 1 ] = lookup( n, id, k.name );
                }
        }
    }

    auto k = make_precub( sigma, d, std::move( cells ) );
    const auto v = validate_presheaf( *k );
    if ( !v.valid )
        throw load_error( "invalid precubical set (" + to_string( v.kind ) + "): " + v.message );
    return k;
}

json to_json( const precub_set& k )
{
    json out;
    out[ "sigma" ] = sigma_json( k.sigma() );
    out[ "dim_bound" ] = k.dim_bound();
    json cells = json::object();
    for ( int n = 0; n <= k.dim_bound(); ++n )
    {
        auto list = json::array();
        for ( const auto& c : k.cells( n ) )
        {
            json e;
            e[ "id" ] = c.name;
            if ( n > 0 )
            {
                e[ "label" ] = c.label;
                json d = json::object();
                for ( int i = 1; i <= n; ++i )
                    for ( int alpha = 0; alpha < 2; ++alpha )
                        d[ std::to_string( i ) + "," + std::to_string( alpha ) ] = k.at( n - 1, c.faces[ 2 * ( i - 1 ) + alpha ] ).name;
                e[ "d" ] = std::move( d );
            }
            if ( n > 1 )
            {
                json s = json::object();
                for ( int i = 1; i < n; ++i )
                    s[ std::to_string( i ) ] = k.at( n, c.syms[ i - 1 ] ).name;
                e[ "s" ] = std::move( s );
            }
            list.push_back( std::move( e ) );
        }
        cells[ std::to_string( n ) ] = std::move( list );
    }
    out[ "cells" ] = std::move( cells );
    return out;
}

hdts_map hdts_map_from_json( const json& j, const std::filesystem::path& base, const budget& b )
{
    hdts_map f;
    f.domain = hdts_from_json( resolve( field( j, "domain" ), base ), b );
    f.codomain = hdts_from_json( resolve( field( j, "codomain" ), base ), b );
    f.state_map.assign( f.domain->state_count(), -1 );
    f.action_map.assign( f.domain->action_count(), -1 );

    auto read = [ & ]( const char* key, auto find_from, auto find_to, auto& out ) {
        const auto& m = j.contains( key ) ? j.at( key ) : json::object();
        if ( !m.is_object() )
            throw load_error( std::string{ "\"" } + key + "\" must be an object" );
        for ( const auto& [ from, to ] : m.items() )
        {
            const auto x = find_from( from );
            if ( !x )
                throw load_error( std::string{ "dangling domain id '" } + from + "' in \"" + key + "\"" );
            const auto y = find_to( text( to, "the image of '" + from + "'" ) );
            if ( !y )
                throw load_error( "dangling codomain id '" + to.template get< std::string >() + "' in \"" + key + "\"" );
            out[ *x ] = *y;
        }
        for ( std::size_t i = 0; i < out.size(); ++i )
            if ( out[ i ] < 0 )
                throw load_error( std::string{ "\"" } + key + "\" is not total" );
    };
    read( "state_map", [ & ]( const std::string& s ) { return f.domain->find_state( s ); },
          [ & ]( const std::string& s ) { return f.codomain->find_state( s ); }, f.state_map );
    read( "action_map", [ & ]( const std::string& s ) { return f.domain->find_action( s ); },
          [ & ]( const std::string& s ) { return f.codomain->find_action( s ); }, f.action_map );
    if ( auto v = map_violation( f ) )
        throw load_error( "invalid map: " + *v );
    return f;
}

json to_json( const hdts_map& f )
{
    json out;
    out[ "domain" ] = to_json( *f.domain );
    out[ "codomain" ] = to_json( *f.codomain );
    json sm = json::object(), am = json::object();
    for ( std::size_t s = 0; s < f.state_map.size(); ++s )
        sm[ f.domain->state_name( static_cast< state_id >( s ) ) ] = f.codomain->state_name( f.state_map[ s ] );
    for ( std::size_t u = 0; u < f.action_map.size(); ++u )
        am[ f.domain->action_at( static_cast< action_id >( u ) ).name ] = f.codomain->action_at( f.action_map[ u ] ).name;
    out[ "state_map" ] = std::move( sm );
    out[ "action_map" ] = std::move( am );
    return out;
}

precub_map precub_map_from_json( const json& j, const std::filesystem::path& base )
{
    precub_map f;
    f.domain = precub_from_json( resolve( field( j, "domain" ), base ) );
    f.codomain = precub_from_json( resolve( field( j, "codomain" ), base ) );
    const auto& m = field( j, "cell_map" );
    if ( !m.is_object() )
        throw load_error( "\"cell_map\" must be an object keyed by dimension" );
    for ( int n = 0; n <= f.domain->dim_bound(); ++n )
    {
        f.cell_map.emplace_back( f.domain->cell_count( n ), -1 );
        const auto key = std::to_string( n );
        if ( !m.contains( key ) )
            continue;
        for ( const auto& [ from, to ] : m.at( key ).items() )
        {
            const auto x = f.domain->find_cell( n, from );
            if ( !x )
                throw load_error( "dangling domain cell '" + from + "' in dimension " + key );
            const auto y = f.codomain->find_cell( n, text( to, "the image of '" + from + "'" ) );
            if ( !y )
                throw load_error( "dangling codomain cell '" + to.get< std::string >() + "' in dimension " + key );
            f.cell_map.back()[ *x ] = *y;
        }
    }
    for ( std::size_t n = 0; n < f.cell_map.size(); ++n )
        for ( auto y : f.cell_map[ n ] )
            if ( y < 0 )
                throw load_error( "\"cell_map\" is not total in dimension " + std::to_string( n ) );
    if ( auto v = precub_map_violation( f ) )
        throw load_error( "invalid precubical map: " + *v );
    return f;
}

json to_json( const precub_map& f )
{
    json out;
    out[ "domain" ] = to_json( *f.domain );
    out[ "codomain" ] = to_json( *f.codomain );
    json cm = json::object();
    for ( std::size_t n = 0; n < f.cell_map.size(); ++n )
    {
        json dim = json::object();
        for ( std::size_t x = 0; x < f.cell_map[ n ].size(); ++x )
            dim[ f.domain->at( static_cast< int >( n ), static_cast< int >( x ) ).name ] =
                    f.codomain->at( static_cast< int >( n ), f.cell_map[ n ][ x ] ).name;
        cm[ std::to_string( n ) ] = std::move( dim );
    }
    out[ "cell_map" ] = std::move( cm );
    return out;
}

} // namespace hdts::io
