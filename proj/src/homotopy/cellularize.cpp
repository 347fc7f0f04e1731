#include "hdts/homotopy/cellularize.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/cubes.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/core/limits.hpp"

#include <algorithm>
#include <set>

namespace hdts
{

namespace
{

class cell_builder
{
public:
    cell_builder( const hdts_map& f, const budget& b ) : _b{ b }, _target{ f.codomain }, _to_target{ f }
    {
        _out.input = f;
        _stage = f.domain;
    }

    cell_factorization run()
    {
        attach_whole();
        merge_states();
        add_states();
        add_actions();
        add_transitions();
        if ( !is_isomorphism( _to_target ) )
            throw error( "cellularize: the final comparison map is not an isomorphism" );
        _out.terminal = _to_target;
        return std::move( _out );
    }

private:
    void attach( const std::string& name, const hdts_map& generator, hdts_map attaching, const hdts_map& cell_to_target )
    {
        attaching.codomain = _stage;
        const auto po = pushout( generator, attaching, _b );
        _to_target = induced_map( po, _target, { compose( _to_target, attaching ), cell_to_target, _to_target } );
        _out.cells.push_back( { name, generator, attaching, po.cocone[ 2 ], po.cocone[ 1 ], po.object } );
        _stage = po.object;
    }

    // When the input is isomorphic, as an arrow, to a boundary inclusion or a
    // doublet generator, a single cell attached along the domain isomorphism.
    void attach_whole()
    {
        const auto& f = _out.input;
        const auto& y = *f.codomain;
        std::vector< std::pair< std::string, hdts_map > > candidates;
        if ( y.action_count() == 1 )
            candidates.push_back( { "doublet[" + y.label_of( 0 ) + "]", cube_into_doublet( y.label_of( 0 ) ) } );
        word w;
        for ( const auto& a : y.actions() )
            w.push_back( a.label );
        std::sort( w.begin(), w.end() );
        if ( !w.empty() && y.state_count() == ( std::size_t{ 1 } << w.size() ) )
            do
            {
                std::string name = "boundary[";
                for ( std::size_t i = 0; i < w.size(); ++i )
                    name += ( i ? "," : "" ) + w[ i ];
                candidates.push_back( { name + "]", boundary_inclusion( w ) } );
            } while ( std::next_permutation( w.begin(), w.end() ) );

        auto same_counts = []( const weak_hdts& a, const weak_hdts& b ) {
            return a.state_count() == b.state_count() && a.action_count() == b.action_count()
                   && a.transition_count() == b.transition_count();
        };
        hom_options iso;
        iso.bijective = true;
        iso.limits = _b;
        for ( const auto& [ name, g ] : candidates )
        {
            if ( !same_counts( *g.domain, *f.domain ) || !same_counts( *g.codomain, y ) )
                continue;
            const auto tops = hom_set( g.codomain, f.codomain, iso );
            for ( const auto& a : hom_set( g.domain, f.domain, iso ) )
            {
                const auto fa = compose( f, a );
                for ( const auto& b : tops )
                    if ( same_map( compose( b, g ), fa ) )
                    {
                        attach( name, g, a, b );
                        return;
                    }
            }
        }
    }

    std::optional< std::pair< state_id, state_id > > non_injective_pair() const
    {
        const auto& m = _to_target.state_map;
        for ( std::size_t s = 0; s < m.size(); ++s )
            for ( std::size_t t = s + 1; t < m.size(); ++t )
                if ( m[ s ] == m[ t ] )
                    return std::pair{ static_cast< state_id >( s ), static_cast< state_id >( t ) };
        return std::nullopt;
    }

    // R cells until the comparison map is injective on states.
    void merge_states()
    {
        while ( auto p = non_injective_pair() )
            attach( "R", generator_r(), { discrete( 2 ), nullptr, { p->first, p->second }, {} },
                    { discrete( 1 ), _target, { _to_target.state_map[ p->first ] }, {} } );
    }

    void add_states()
    {
        const std::set< state_id > image( _to_target.state_map.begin(), _to_target.state_map.end() );
        for ( state_id s = 0; s < static_cast< state_id >( _target->state_count() ); ++s )
            if ( !image.count( s ) )
                attach( "C", generator_c(), { empty_hdts(), nullptr, {}, {} }, { discrete( 1 ), _target, { s }, {} } );
    }

    state_id state_preimage( state_id s ) const
    {
        for ( std::size_t t = 0; t < _to_target.state_map.size(); ++t )
            if ( _to_target.state_map[ t ] == s )
                return static_cast< state_id >( t );
        throw error( "cellularize: state without preimage" );
    }

    action_id action_preimage( action_id u ) const
    {
        for ( std::size_t v = 0; v < _to_target.action_map.size(); ++v )
            if ( _to_target.action_map[ v ] == u )
                return static_cast< action_id >( v );
        throw error( "cellularize: action without preimage" );
    }

    std::optional< transition > edge_of( const weak_hdts& x, action_id u ) const
    {
        for ( const auto& t : x.transitions() )
            if ( t.arity() == 1 && t.actions[ 0 ] == u )
                return t;
        return std::nullopt;
    }

    // One boundary cell of dimension 1 per missing action, attached along the
    // endpoints of a 1-transition carrying it.
    void add_actions()
    {
        const std::set< action_id > image( _to_target.action_map.begin(), _to_target.action_map.end() );
        for ( action_id u = 0; u < static_cast< action_id >( _target->action_count() ); ++u )
        {
            if ( image.count( u ) )
                continue;
            const auto e = edge_of( *_target, u );
            if ( !e )
                throw error( "cellularize: the codomain is not cubical (unused action "
                             + _target->action_at( u ).name + ")" );
            const word w{ _target->label_of( u ) };
            const auto gen = boundary_inclusion( w );
            attach( "boundary[" + w[ 0 ] + "]", gen,
                    { gen.domain, nullptr, { state_preimage( e->source ), state_preimage( e->target ) }, {} },
                    { gen.codomain, _target, { e->source, e->target }, { u } } );
        }
    }

    std::optional< transition > missing_transition() const
    {
        std::set< transition > image;
        for ( const auto& t : _stage->transitions() )
            image.insert( _to_target.image( t ) );
        std::optional< transition > best;
        for ( const auto& t : _target->transitions() )
            if ( !image.count( t ) && ( !best || t.arity() < best->arity() ) )
                best = t;
        return best;
    }

    void add_transitions()
    {
        while ( auto t = missing_transition() )
        {
            if ( t->arity() == 1 )
                add_edge( *t );
            else
                add_cube( *t );
        }
    }

    // A doublet cell glued along an existing 1-transition carrying the same
    // action, then two R cells identifying the new ends with the right states.
    void add_edge( const transition& t )
    {
        const auto u = action_preimage( t.actions[ 0 ] );
        const auto e = edge_of( *_stage, u );
        if ( !e )
            throw error( "cellularize: action without 1-transition in an intermediate stage" );
        const auto& x = _target->label_of( t.actions[ 0 ] );
        const auto gen = cube_into_doublet( x );
        attach( "doublet[" + x + "]", gen, { gen.domain, nullptr, { e->source, e->target }, { u } },
                { gen.codomain, _target,
                  { _to_target.state_map[ e->source ], _to_target.state_map[ e->target ], t.source, t.target },
                  { t.actions[ 0 ] } } );
        merge_states();
    }

    // A boundary cell of dimension n glued along the boundary of a cube of the
    // codomain whose top transition is t.
    void add_cube( const transition& t )
    {
        word w;
        for ( auto u : t.actions )
            w.push_back( _target->label_of( u ) );
        const auto gen = boundary_inclusion( w );
        const auto c = gen.codomain;
        const auto top = static_cast< state_id >( c->state_count() - 1 );

        hom_options opt;
        opt.limit = 1;
        opt.limits = _b;
        opt.allowed_states.assign( c->state_count(), {} );
        for ( state_id s = 0; s <= top; ++s )
            for ( state_id y = 0; y < static_cast< state_id >( _target->state_count() ); ++y )
                if ( ( s != 0 || y == t.source ) && ( s != top || y == t.target ) )
                    opt.allowed_states[ s ].push_back( y );
        for ( auto u : t.actions )
            opt.allowed_actions.push_back( { u } );
        const auto cubes = hom_set( c, _target, opt );
        if ( cubes.empty() )
            throw error( "cellularize: the codomain is not cubical (no cube filling " + to_string( *_target, t ) + ")" );
        const auto& cube_in_target = cubes.front();

        hdts_map attaching{ gen.domain, nullptr, {}, {} };
        for ( auto s : gen.state_map )
            attaching.state_map.push_back( state_preimage( cube_in_target.state_map[ s ] ) );
        for ( auto u : gen.action_map )
            attaching.action_map.push_back( action_preimage( cube_in_target.action_map[ u ] ) );
        attaching.codomain = _stage;
        if ( auto v = map_violation( attaching ) )
            throw error( "cellularize: the boundary of a cube does not factor through the current stage: " + *v );

        std::string name = "boundary[";
        for ( std::size_t i = 0; i < w.size(); ++i )
            name += ( i ? "," : "" ) + w[ i ];
        attach( name + "]", gen, attaching, cube_in_target );
    }

    const budget& _b;
    hdts_ptr _target;
    hdts_map _to_target;
    hdts_ptr _stage;
    cell_factorization _out;
};

} // namespace

cell_factorization cellularize( const hdts_map& f, const budget& b )
{
    if ( !is_cofibration_hdts( f ) )
        throw error( "cellularize: the map is not injective on actions" );
    for ( const auto* x : { f.domain.get(), f.codomain.get() } )
        if ( auto v = check_cubical( *x ); !v.cubical )
            throw error( "cellularize: not a cubical transition system: " + v.witness );
    return cell_builder{ f, b }.run();
}

replay_report replay( const cell_factorization& c, const budget& b )
{
    auto stage = c.input.domain;
    auto composite = identity_map( stage );
    for ( std::size_t k = 0; k < c.cells.size(); ++k )
    {
        const auto& cell = c.cells[ k ];
        const auto where = "cell " + std::to_string( k ) + " (" + cell.generator_name + "): ";
        if ( !is_valid_map( cell.generator ) || !is_valid_map( cell.attaching ) )
            return { false, where + "invalid generator or attaching map" };
        if ( !( *cell.attaching.codomain == *stage ) )
            return { false, where + "attached to a different stage" };
        auto attaching = cell.attaching;
        attaching.codomain = stage;
        const auto po = pushout( cell.generator, attaching, b );
        if ( !( *po.object == *cell.stage ) || !same_map( po.cocone[ 2 ], cell.inclusion ) )
            return { false, where + "the recorded stage is not the pushout" };
        composite = compose( po.cocone[ 2 ], composite );
        stage = po.object;
    }
    if ( !( *c.terminal.domain == *stage ) )
        return { false, "the terminal map does not start at the last stage" };
    if ( !is_isomorphism( c.terminal ) )
        return { false, "the terminal map is not an isomorphism" };
    if ( !same_map( compose( c.terminal, composite ), c.input ) )
        return { false, "the composite differs from the input map" };
    return {};
}

} // namespace hdts
