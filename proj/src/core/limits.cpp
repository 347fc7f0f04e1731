#include "hdts/core/limits.hpp"

#include "../union_find.hpp"
#include "hdts/core/closure.hpp"

#include <algorithm>
#include <set>

namespace hdts
{

product_result product( const hdts_ptr& x, const hdts_ptr& y, const budget& b )
{
    product_result out;
    std::vector< std::string > states;
    for ( const auto& sx : x->state_names() )
        for ( const auto& sy : y->state_names() )
            states.push_back( "(" + sx + "," + sy + ")" );

    std::vector< action > acts;
    std::vector< std::pair< action_id, action_id > > pairs;
    for ( std::size_t u = 0; u < x->action_count(); ++u )
        for ( std::size_t v = 0; v < y->action_count(); ++v )
        {
            const auto& a = x->action_at( static_cast< action_id >( u ) );
            const auto& c = y->action_at( static_cast< action_id >( v ) );
            if ( a.label != c.label )
                continue;
            out.action_of[ { static_cast< action_id >( u ), static_cast< action_id >( v ) } ] =
                    static_cast< action_id >( acts.size() );
            pairs.emplace_back( u, v );
            acts.push_back( { "(" + a.name + "," + c.name + ")", a.label } );
        }

    const auto ny = static_cast< state_id >( y->state_count() );
    search_counter counter{ b, "product pairings" };
    std::set< transition > ts;
    for ( const auto& tx : x->transitions() )
        for ( const auto& ty : y->transitions() )
        {
            if ( tx.arity() != ty.arity() )
                continue;
            auto perm = ty.actions;
            do
            {
                counter.tick();
                transition t{ tx.source * ny + ty.source, {}, tx.target * ny + ty.target };
                bool ok = true;
                for ( std::size_t k = 0; k < perm.size() && ok; ++k )
                {
                    auto it = out.action_of.find( { tx.actions[ k ], perm[ k ] } );
                    if ( it == out.action_of.end() )
                        ok = false;
                    else
                        t.actions.push_back( it->second );
                }
                if ( ok )
                {
                    std::sort( t.actions.begin(), t.actions.end() );
                    ts.insert( std::move( t ) );
                }
            } while ( std::next_permutation( perm.begin(), perm.end() ) );
        }

    out.object = make_hdts( x->sigma().merged( y->sigma() ), std::move( states ), std::move( acts ),
                            std::vector< transition >{ ts.begin(), ts.end() } );
    out.first = { out.object, x, {}, {} };
    out.second = { out.object, y, {}, {} };
    for ( state_id sx = 0; sx < static_cast< state_id >( x->state_count() ); ++sx )
        for ( state_id sy = 0; sy < ny; ++sy )
        {
            out.first.state_map.push_back( sx );
            out.second.state_map.push_back( sy );
        }
    for ( const auto& [ u, v ] : pairs )
    {
        out.first.action_map.push_back( u );
        out.second.action_map.push_back( v );
    }
    return out;
}

hdts_map pairing( const product_result& p, const hdts_map& f, const hdts_map& g )
{
    if ( f.domain != g.domain && !( *f.domain == *g.domain ) )
        throw error( "pairing: maps with different domains" );
    hdts_map out{ f.domain, p.object, {}, {} };
    for ( std::size_t s = 0; s < f.state_map.size(); ++s )
        out.state_map.push_back( p.state_of( f.state_map[ s ], g.state_map[ s ] ) );
    for ( std::size_t u = 0; u < f.action_map.size(); ++u )
    {
        auto it = p.action_of.find( { f.action_map[ u ], g.action_map[ u ] } );
        if ( it == p.action_of.end() )
            throw error( "pairing: action components with different labels" );
        out.action_map.push_back( it->second );
    }
    return out;
}

colimit_result colimit( const diagram& d, const budget& b )
{
    std::vector< std::size_t > state_offset, action_offset;
    std::size_t n_states = 0, n_actions = 0;
    for ( const auto& x : d.objects )
    {
        state_offset.push_back( n_states );
        action_offset.push_back( n_actions );
        n_states += x->state_count();
        n_actions += x->action_count();
    }

    detail::union_find su{ n_states }, au{ n_actions };
    for ( const auto& a : d.arrows )
    {
        if ( a.map.state_map.size() != d.objects[ a.from ]->state_count()
             || a.map.action_map.size() != d.objects[ a.from ]->action_count() )
            throw error( "colimit: arrow does not match its source object" );
        for ( std::size_t s = 0; s < a.map.state_map.size(); ++s )
            su.unite( state_offset[ a.from ] + s, state_offset[ a.to ] + a.map.state_map[ s ] );
        for ( std::size_t u = 0; u < a.map.action_map.size(); ++u )
            au.unite( action_offset[ a.from ] + u, action_offset[ a.to ] + a.map.action_map[ u ] );
    }

    std::size_t n_state_classes = 0, n_action_classes = 0;
    const auto state_class = su.classes( &n_state_classes );
    const auto action_class = au.classes( &n_action_classes );

    std::vector< std::string > states( n_state_classes );
    std::vector< action > acts( n_action_classes );
    std::vector< bool > named_state( n_state_classes ), named_action( n_action_classes );
    label_alphabet sigma;
    for ( std::size_t i = 0; i < d.objects.size(); ++i )
    {
        const auto& x = *d.objects[ i ];
        sigma = sigma.merged( x.sigma() );
        const auto prefix = std::to_string( i ) + ".";
        for ( std::size_t s = 0; s < x.state_count(); ++s )
        {
            auto c = state_class[ state_offset[ i ] + s ];
            if ( !named_state[ c ] )
            {
                states[ c ] = prefix + x.state_name( static_cast< state_id >( s ) );
                named_state[ c ] = true;
            }
        }
        for ( std::size_t u = 0; u < x.action_count(); ++u )
        {
            auto c = action_class[ action_offset[ i ] + u ];
            const auto& a = x.action_at( static_cast< action_id >( u ) );
            if ( !named_action[ c ] )
            {
                acts[ c ] = { prefix + a.name, a.label };
                named_action[ c ] = true;
            }
            else if ( acts[ c ].label != a.label )
                throw error( "colimit: identified actions carry different labels" );
        }
    }

    colimit_result out;
    std::vector< transition > seed;
    for ( std::size_t i = 0; i < d.objects.size(); ++i )
    {
        const auto& x = d.objects[ i ];
        hdts_map leg{ x, nullptr, {}, {} };
        for ( std::size_t s = 0; s < x->state_count(); ++s )
            leg.state_map.push_back( state_class[ state_offset[ i ] + s ] );
        for ( std::size_t u = 0; u < x->action_count(); ++u )
            leg.action_map.push_back( action_class[ action_offset[ i ] + u ] );
        for ( const auto& t : x->transitions() )
            seed.push_back( leg.image( t ) );
        out.cocone.push_back( std::move( leg ) );
    }
    auto closed = close_composition( states.size(), acts.size(), std::move( seed ), b );
    out.object = make_hdts( std::move( sigma ), std::move( states ), std::move( acts ), std::move( closed ) );
    for ( auto& leg : out.cocone )
        leg.codomain = out.object;
    return out;
}

hdts_map induced_map( const colimit_result& c, const hdts_ptr& apex, const std::vector< hdts_map >& cone )
{
    if ( cone.size() != c.cocone.size() )
        throw error( "induced_map: cone has the wrong number of legs" );
    const auto& x = *c.object;
    std::vector< state_id > sm( x.state_count(), -1 );
    std::vector< action_id > am( x.action_count(), -1 );
    for ( std::size_t i = 0; i < cone.size(); ++i )
    {
        const auto& leg = c.cocone[ i ];
        const auto& f = cone[ i ];
        if ( f.state_map.size() != leg.state_map.size() || f.action_map.size() != leg.action_map.size() )
            throw error( "induced_map: cone leg does not match the diagram" );
        for ( std::size_t s = 0; s < leg.state_map.size(); ++s )
        {
            auto& slot = sm[ leg.state_map[ s ] ];
            if ( slot >= 0 && slot != f.state_map[ s ] )
                throw error( "induced_map: cone is not compatible on states" );
            slot = f.state_map[ s ];
        }
        for ( std::size_t u = 0; u < leg.action_map.size(); ++u )
        {
            auto& slot = am[ leg.action_map[ u ] ];
            if ( slot >= 0 && slot != f.action_map[ u ] )
                throw error( "induced_map: cone is not compatible on actions" );
            slot = f.action_map[ u ];
        }
    }
    hdts_map out{ c.object, apex, std::move( sm ), std::move( am ) };
    if ( auto v = map_violation( out ) )
        throw error( "induced_map: " + *v );
    return out;
}

colimit_result coproduct( const std::vector< hdts_ptr >& xs, const budget& b )
{
    diagram d;
    for ( const auto& x : xs )
        d.add_object( x );
    return colimit( d, b );
}

colimit_result pushout( const hdts_map& f, const hdts_map& g, const budget& b )
{
    diagram d;
    d.add_object( f.domain );
    d.add_object( f.codomain );
    d.add_object( g.codomain );
    d.add_arrow( 0, 1, f );
    d.add_arrow( 0, 2, g );
    return colimit( d, b );
}

quotient_result quotient( const hdts_ptr& x, const std::vector< std::pair< state_id, state_id > >& state_pairs,
                          const std::vector< std::pair< action_id, action_id > >& action_pairs, const budget& b )
{
    detail::union_find su{ x->state_count() }, au{ x->action_count() };
    for ( auto [ s, t ] : state_pairs )
        su.unite( s, t );
    for ( auto [ u, v ] : action_pairs )
    {
        if ( x->label_of( u ) != x->label_of( v ) )
            throw error( "quotient: identified actions carry different labels" );
        au.unite( u, v );
    }
    std::size_t ns = 0, na = 0;
    auto sc = su.classes( &ns );
    auto ac = au.classes( &na );

    std::vector< std::string > states( ns );
    std::vector< action > acts( na );
    std::vector< bool > seen_s( ns ), seen_a( na );
    for ( std::size_t s = 0; s < sc.size(); ++s )
        if ( !seen_s[ sc[ s ] ] )
        {
            seen_s[ sc[ s ] ] = true;
            states[ sc[ s ] ] = x->state_name( static_cast< state_id >( s ) );
        }
    for ( std::size_t u = 0; u < ac.size(); ++u )
        if ( !seen_a[ ac[ u ] ] )
        {
            seen_a[ ac[ u ] ] = true;
            acts[ ac[ u ] ] = x->action_at( static_cast< action_id >( u ) );
        }

    hdts_map unit{ x, nullptr, std::move( sc ), std::move( ac ) };
    std::vector< transition > seed;
    for ( const auto& t : x->transitions() )
        seed.push_back( unit.image( t ) );
    auto closed = close_composition( ns, na, std::move( seed ), b );
    auto object = make_hdts( x->sigma(), std::move( states ), std::move( acts ), std::move( closed ) );
    unit.codomain = object;
    return { object, std::move( unit ) };
}

hdts_map factor_through_quotient( const quotient_result& q, const hdts_map& g )
{
    colimit_result c{ q.object, { q.unit } };
    return induced_map( c, g.codomain, { g } );
}

} // namespace hdts
