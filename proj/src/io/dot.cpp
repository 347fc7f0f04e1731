#include "hdts/io/dot.hpp"

#include <sstream>

namespace hdts::io
{

namespace
{

std::string quoted( const std::string& s )
{
    std::string out = "\"";
    for ( char c : s )
    {
        if ( c == '"' || c == '\\' )
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_dot( const weak_hdts& x, const std::string& graph_name )
{
    std::ostringstream out;
    out << "digraph " << quoted( graph_name ) << " {\n";
    out << "  rankdir=LR;\n";
    for ( std::size_t s = 0; s < x.state_count(); ++s )
        out << "  n" << s << " [label=" << quoted( x.state_name( static_cast< state_id >( s ) ) ) << "];\n";
    for ( const auto& t : x.transitions() )
        if ( t.arity() == 1 )
        {
            const auto& a = x.action_at( t.actions[ 0 ] );
            out << "  n" << t.source << " -> n" << t.target << " [label=" << quoted( a.name + ":" + a.label ) << "];\n";
        }
    out << "}\n";
    return out.str();
}

std::string to_dot( const precub_set& k, const std::string& graph_name )
{
    std::ostringstream out;
    out << "digraph " << quoted( graph_name ) << " {\n";
    out << "  rankdir=LR;\n";
    for ( std::size_t v = 0; v < k.cell_count( 0 ); ++v )
        out << "  n" << v << " [label=" << quoted( k.at( 0, static_cast< int >( v ) ).name ) << "];\n";
    for ( std::size_t e = 0; e < k.cell_count( 1 ); ++e )
    {
        const auto x = static_cast< int >( e );
        const auto& c = k.at( 1, x );
        out << "  n" << k.face( 1, x, 1, 0 ) << " -> n" << k.face( 1, x, 1, 1 ) << " [label="
            << quoted( c.name + ":" + c.label[ 0 ] ) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace hdts::io
