#include "hdts/cli/command.hpp"

#include "hdts/core/closure.hpp"
#include "hdts/core/constructions.hpp"
#include "hdts/core/cubes.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/homotopy/cellularize.hpp"
#include "hdts/homotopy/equivalence.hpp"
#include "hdts/homotopy/lifting.hpp"
#include "hdts/io/dot.hpp"
#include "hdts/io/json_io.hpp"
#include "hdts/precub/constructions.hpp"
#include "hdts/precub/hom.hpp"
#include "hdts/precub/operations.hpp"
#include "hdts/realize/realize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace hdts::cli
{

namespace
{

using io::json;

struct document
{
    io::document_kind kind = io::document_kind::hdts;
    hdts_ptr system;
    precub_ptr precub;
    hdts_map map;
    precub_map pmap;
};

document load( const std::string& path, const budget& b )
{
    const auto j = io::read_json_file( path );
    const auto base = std::filesystem::path( path ).parent_path();
    document d;
    d.kind = io::kind_of( j );
    switch ( d.kind )
    {
    case io::document_kind::hdts:
        d.system = io::hdts_from_json( j, b );
        break;
    case io::document_kind::precub:
        d.precub = io::precub_from_json( j );
        break;
    case io::document_kind::hdts_map:
        d.map = io::hdts_map_from_json( j, base, b );
        break;
    case io::document_kind::precub_map:
        d.pmap = io::precub_map_from_json( j, base );
        break;
    }
    return d;
}

hdts_ptr load_system( const std::string& path, const budget& b )
{
    auto d = load( path, b );
    if ( d.kind != io::document_kind::hdts )
        throw error( "'" + path + "' is a " + io::to_string( d.kind ) + ", expected a transition system" );
    return d.system;
}

precub_ptr load_precub( const std::string& path, const budget& b )
{
    auto d = load( path, b );
    if ( d.kind != io::document_kind::precub )
        throw error( "'" + path + "' is a " + io::to_string( d.kind ) + ", expected a precubical set" );
    return d.precub;
}

hdts_map load_map( const std::string& path, const budget& b )
{
    auto d = load( path, b );
    if ( d.kind != io::document_kind::hdts_map )
        throw error( "'" + path + "' is a " + io::to_string( d.kind ) + ", expected a map of systems" );
    return d.map;
}

json counts( const weak_hdts& x )
{
    json by_arity = json::array();
    for ( std::size_t n = 1; n <= x.max_arity(); ++n )
        by_arity.push_back( x.count_of_arity( n ) );
    return { { "states", x.state_count() },
             { "actions", x.action_count() },
             { "transitions", x.transition_count() },
             { "transitions_by_arity", by_arity } };
}

json counts( const precub_set& k )
{
    json cells = json::array();
    for ( int n = 0; n <= k.dim_bound(); ++n )
        cells.push_back( k.cell_count( n ) );
    return { { "dim_bound", k.dim_bound() }, { "cells_by_dimension", cells } };
}

json name_maps( const hdts_map& f )
{
    json sm = json::object(), am = json::object();
    for ( std::size_t s = 0; s < f.state_map.size(); ++s )
        sm[ f.domain->state_name( static_cast< state_id >( s ) ) ] = f.codomain->state_name( f.state_map[ s ] );
    for ( std::size_t u = 0; u < f.action_map.size(); ++u )
        am[ f.domain->action_at( static_cast< action_id >( u ) ).name ] = f.codomain->action_at( f.action_map[ u ] ).name;
    return { { "state_map", sm }, { "action_map", am } };
}

struct outcome
{
    int code = exit_affirmative;
    json report = json::object();
    std::string text;  // raw output instead of the report (dot)
};

class runner
{
public:
    runner( const command& cmd, const budget& b ) : _cmd{ cmd }, _b{ b } {}

    outcome dispatch()
    {
        const auto& v = _cmd.verb;
        _out.report[ "verb" ] = v;
        if ( v == "validate" )
            validate_verb();
        else if ( v == "info" )
            info_verb();
        else if ( v == "cube" )
            cube_verb();
        else if ( v == "realize" )
            realize_verb();
        else if ( v == "nerve" )
            nerve_verb();
        else if ( v == "cubify" )
            cubify_verb();
        else if ( v == "coreflect" )
            coreflect_verb();
        else if ( v == "csa1" || v == "bls" )
            reflect_verb( v == "csa1" );
        else if ( v == "sh" )
            sh_verb();
        else if ( v == "check-hda" )
            check_hda_verb();
        else if ( v == "equiv" )
            equiv_verb();
        else if ( v == "homotopic" )
            homotopic_verb();
        else if ( v == "cellularize" )
            cellularize_verb();
        else if ( v == "lambda" )
            lambda_verb();
        else if ( v == "dot" )
            dot_verb();
        else
            throw error( "unknown verb '" + v + "'" );
        return std::move( _out );
    }

private:
    const std::string& input( std::size_t i ) const
    {
        if ( i >= _cmd.inputs.size() )
            throw error( "missing input file" );
        return _cmd.inputs[ i ];
    }

    void verdict( bool yes )
    {
        _out.report[ "verdict" ] = yes;
        _out.code = yes ? exit_affirmative : exit_negative;
    }

    void validate_verb()
    {
        _out.report[ "file" ] = input( 0 );
        try
        {
            const auto d = load( input( 0 ), _b );
            _out.report[ "kind" ] = io::to_string( d.kind );
            verdict( true );
        }
        catch ( const io::load_error& e )
        {
            if ( e.malformed() )
                throw;
            _out.report[ "error" ] = e.what();
            verdict( false );
        }
    }

    void info_verb()
    {
        const auto d = load( input( 0 ), _b );
        auto& r = _out.report;
        r[ "kind" ] = io::to_string( d.kind );
        switch ( d.kind )
        {
        case io::document_kind::hdts:
        {
            r[ "counts" ] = counts( *d.system );
            const auto c = check_cubical( *d.system );
            r[ "cubical" ] = c.cubical;
            if ( !c.cubical )
                r[ "cubical_witness" ] = c.witness;
            r[ "csa1" ] = satisfies_csa1( *d.system );
            r[ "label_injective" ] = label_injective( *d.system );
            break;
        }
        case io::document_kind::precub:
        {
            r[ "counts" ] = counts( *d.precub );
            r[ "hda" ] = check_hda( *d.precub ).hda;
            break;
        }
        case io::document_kind::hdts_map:
            r[ "domain" ] = counts( *d.map.domain );
            r[ "codomain" ] = counts( *d.map.codomain );
            r[ "cofibration" ] = is_cofibration_hdts( d.map );
            r[ "isomorphism" ] = is_isomorphism( d.map );
            break;
        case io::document_kind::precub_map:
            r[ "domain" ] = counts( *d.pmap.domain );
            r[ "codomain" ] = counts( *d.pmap.codomain );
            r[ "cofibration" ] = is_cofibration_precub( d.pmap );
            r[ "isomorphism" ] = is_precub_isomorphism( d.pmap );
            break;
        }
    }

    void cube_verb()
    {
        const auto& k = _cmd.kind;
        const word w = _cmd.letters;
        _out.report[ "kind" ] = k;
        auto one_letter = [ & ] {
            if ( w.size() != 1 )
                throw error( "the kind '" + k + "' takes exactly one letter" );
            return w[ 0 ];
        };
        const int d = _cmd.dim_bound.value_or( default_dim_bound );
        hdts_ptr x;
        precub_ptr p;
        if ( k == "cube" )
            x = cube( w );
        else if ( k == "boundary" )
            x = cube_boundary( w );
        else if ( k == "pure" )
            x = pure_cube( w );
        else if ( k == "doublet" )
            x = doublet( one_letter() );
        else if ( k == "interval" )
            x = interval( label_alphabet{ w }, d );
        else if ( k == "terminal" )
            x = terminal( label_alphabet{ w }, d );
        else if ( k == "standard" )
            p = standard_cube( w );
        else if ( k == "standard-boundary" )
            p = standard_boundary( w );
        else
            throw error( "unknown kind '" + k + "'" );
        _out.report[ "result" ] = x ? io::to_json( *x ) : io::to_json( *p );
    }

    void realize_verb()
    {
        const auto k = load_precub( input( 0 ), _b );
        const auto t = realize( k, _b );
        _out.report[ "counts" ] = counts( *t.object );
        _out.report[ "result" ] = io::to_json( *t.object );
    }

    void nerve_verb()
    {
        const auto x = load_system( input( 0 ), _b );
        const int d = _cmd.dim_bound.value_or( std::max< int >( 1, static_cast< int >( x->max_arity() ) ) );
        const auto r = nerve( x, d, _b );
        _out.report[ "counts" ] = counts( *r.object );
        _out.report[ "result" ] = io::to_json( *r.object );
    }

    void cubify_verb()
    {
        const auto x = load_system( input( 0 ), _b );
        const auto c = cubify( x, _b );
        _out.report[ "cubes" ] = c.cubes.size();
        _out.report[ "counit_is_isomorphism" ] = is_isomorphism( c.counit );
        _out.report[ "counts" ] = counts( *c.object );
        _out.report[ "result" ] = io::to_json( *c.object );
    }

    void coreflect_verb()
    {
        const auto x = load_system( input( 0 ), _b );
        const auto c = coreflect_cubical( x, _b );
        _out.report[ "input_cubical" ] = is_cubical( *x );
        _out.report[ "counts" ] = counts( *c.object );
        _out.report[ "result" ] = io::to_json( *c.object );
    }

    void reflect_verb( bool csa1 )
    {
        const auto d = load( input( 0 ), _b );
        auto reflect = [ & ]( const hdts_ptr& x ) { return csa1 ? csa1_reflect( x, _b ) : bls_reflect( x, _b ); };
        if ( d.kind == io::document_kind::hdts )
        {
            if ( auto c = check_cubical( *d.system ); !c.cubical )
                throw error( "not a cubical transition system: " + c.witness );
            const auto r = reflect( d.system );
            _out.report[ "unit" ] = name_maps( r.unit );
            _out.report[ "unit_is_isomorphism" ] = is_isomorphism( r.unit );
            _out.report[ "counts" ] = counts( *r.object );
            _out.report[ "result" ] = io::to_json( *r.object );
        }
        else if ( d.kind == io::document_kind::hdts_map )
        {
            const auto f = csa1 ? csa1_map( d.map, _b ) : bls_map( d.map, _b );
            _out.report[ "result" ] = io::to_json( f );
        }
        else
            throw error( "expected a transition system or a map of systems" );
    }

    void sh_verb()
    {
        const auto k = load_precub( input( 0 ), _b );
        const auto s = sh_reflect( k );
        _out.report[ "unit_is_isomorphism" ] = is_precub_isomorphism( s.unit );
        _out.report[ "counts" ] = counts( *s.object );
        _out.report[ "result" ] = io::to_json( *s.object );
    }

    void check_hda_verb()
    {
        const auto k = load_precub( input( 0 ), _b );
        const auto v = check_hda( *k );
        verdict( v.hda );
        if ( !v.hda )
            _out.report[ "witness" ] = { { "dimension", v.dim },
                                         { "first", k->at( v.dim, v.first ).name },
                                         { "second", k->at( v.dim, v.second ).name } };
    }

    void equiv_verb()
    {
        const auto d = load( input( 0 ), _b );
        const auto m = parse_model( _cmd.model );
        _out.report[ "model" ] = to_string( m );
        equivalence_verdict v;
        if ( d.kind == io::document_kind::hdts_map )
            v = weak_equiv( d.map, m, _b );
        else if ( d.kind == io::document_kind::precub_map )
        {
            if ( m != model::localized )
                throw error( "precubical maps are decided in the localized model only" );
            v = weak_equiv_precub_localized( d.pmap, _b );
        }
        else
            throw error( "expected a map" );
        verdict( v.equivalent );
        if ( !v.equivalent )
            _out.report[ "reason" ] = v.reason;
        _out.report[ "reflected" ] = name_maps( v.reflected );
        _out.report[ "reflected_domain" ] = counts( *v.reflected.domain );
        _out.report[ "reflected_codomain" ] = counts( *v.reflected.codomain );
    }

    void homotopic_verb()
    {
        const auto f = load_map( input( 0 ), _b );
        const auto g = load_map( input( 1 ), _b );
        const auto h = find_homotopy( f, g, _b );
        verdict( h.has_value() );
        if ( h )
            _out.report[ "homotopy" ] = name_maps( *h );
    }

    void cellularize_verb()
    {
        const auto f = load_map( input( 0 ), _b );
        const auto c = cellularize( f, _b );
        const auto r = replay( c, _b );
        json cells = json::array();
        for ( const auto& cell : c.cells )
            cells.push_back( { { "generator", cell.generator_name },
                               { "generator_map", io::to_json( cell.generator ) },
                               { "attaching", name_maps( cell.attaching ) },
                               { "stage", counts( *cell.stage ) } } );
        _out.report[ "cells" ] = std::move( cells );
        _out.report[ "terminal" ] = name_maps( c.terminal );
        _out.report[ "replay" ] = r.ok ? "ok" : r.message;
        verdict( r.ok );
    }

    void lambda_verb()
    {
        const auto i = parse_family_tag( _cmd.generators );
        std::optional< family_tag > s;
        if ( !_cmd.with_s.empty() )
            s = parse_family_tag( _cmd.with_s );
        const instantiation inst{ _cmd.labels.empty() ? std::vector< std::string >{ "x" } : _cmd.labels,
                                  _cmd.dim_bound.value_or( 1 ) };
        const auto members = lambda_generate( s, i, _cmd.depth, inst, _b );
        json list = json::array();
        for ( const auto& m : members )
            list.push_back( { { "name", m.name },
                              { "domain", counts( *m.map.domain ) },
                              { "codomain", counts( *m.map.codomain ) },
                              { "cofibration", is_cofibration_hdts( m.map ) } } );
        _out.report[ "depth" ] = _cmd.depth;
        _out.report[ "count" ] = members.size();
        _out.report[ "members" ] = std::move( list );
    }

    void dot_verb()
    {
        const auto d = load( input( 0 ), _b );
        if ( d.kind == io::document_kind::hdts )
            _out.text = io::to_dot( *d.system );
        else if ( d.kind == io::document_kind::precub )
            _out.text = io::to_dot( *d.precub );
        else
            throw error( "expected a transition system or a precubical set" );
    }

    const command& _cmd;
    const budget& _b;
    outcome _out;
};

} // namespace

int run( const command& cmd, std::ostream& out, std::ostream& err )
{
    budget b;
    if ( cmd.budget_nodes )
        b.max_search_nodes = *cmd.budget_nodes;
    const auto start = std::chrono::steady_clock::now();

    outcome o;
    auto fail = [ & ]( const std::string& message ) {
        o.code = exit_error;
        o.text.clear();
        o.report = { { "verb", cmd.verb }, { "error", message } };
        err << "error: " << message << "\n";
    };
    try
    {
        o = runner{ cmd, b }.dispatch();
    }
    catch ( const budget_exceeded& e )
    {
        fail( e.what() );
        o.report[ "budget" ] = { { "cap", e.cap() }, { "limit", e.limit() } };
    }
    catch ( const io::load_error& e )
    {
        fail( e.what() );
        if ( e.line() )
            o.report[ "line" ] = e.line();
    }
    catch ( const std::exception& e )
    {
        fail( e.what() );
    }

    if ( cmd.timings && o.text.empty() )
    {
        const auto ms = std::chrono::duration< double, std::milli >( std::chrono::steady_clock::now() - start ).count();
        o.report[ "timings" ] = { { "total_ms", ms } };
    }
    const auto payload = o.text.empty() ? o.report.dump( 2 ) + "\n" : o.text;
    if ( cmd.out.empty() )
        out << payload;
    else
    {
        std::ofstream file( cmd.out );
        if ( !( file << payload ) )
        {
            err << "error: cannot write '" << cmd.out << "'\n";
            return exit_error;
        }
    }
    return o.code;
}

int main_entry( int argc, const char* const* argv, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Transition systems of higher dimension and labelled symmetric precubical sets" };
    app.name( "hdts_cli" );
    app.require_subcommand( 1 );

    command cmd;
    std::size_t budget_nodes = 0;
    int dim_bound = -1;

    auto sub = [ & ]( const std::string& name, const std::string& about, std::size_t files ) {
        auto* s = app.add_subcommand( name, about );
        s->add_option( "--budget", budget_nodes, "Cap on search nodes" )->check( CLI::PositiveNumber );
        s->add_option( "--out", cmd.out, "Write the report to this path" );
        s->add_flag( "--timings", cmd.timings, "Add wall-clock timings to the report" );
        if ( files > 0 )
            s->add_option( "files", cmd.inputs, "Input JSON files" )->required()->expected( static_cast< int >( files ) );
        return s;
    };

    sub( "validate", "Load and validate a system, precubical set or map", 1 );
    sub( "info", "Counts and properties of a document", 1 );
    auto* cube_cmd = sub( "cube", "Emit a basic construction", 0 );
    cube_cmd->add_option( "--kind", cmd.kind, "cube, boundary, pure, doublet, interval, terminal, standard, standard-boundary" );
    cube_cmd->add_option( "letters", cmd.letters, "Label word" );
    cube_cmd->add_option( "--dim-bound", dim_bound, "Arity bound for interval and terminal" );
    sub( "realize", "Realization of a precubical set", 1 );
    sub( "nerve", "Nerve of a system", 1 )->add_option( "--dim-bound", dim_bound, "Largest cell dimension" );
    sub( "cubify", "Colimit of the cubes of a system", 1 );
    sub( "coreflect", "Union of the subcubes of a system", 1 );
    sub( "csa1", "CSA1 reflection of a system or a map", 1 );
    sub( "bls", "Label-merging reflection of a system or a map", 1 );
    sub( "sh", "HDA reflection of a precubical set", 1 );
    sub( "check-hda", "At most one cell per shell", 1 );
    sub( "equiv", "Weak equivalence test for a map", 1 )
            ->add_option( "--model", cmd.model, "cts, cts+ or localized" )
            ->check( CLI::IsMember( { "cts", "cts+", "localized" } ) );
    sub( "homotopic", "Homotopy between two parallel maps", 2 );
    sub( "cellularize", "Cell-complex factorization of a cofibration", 1 );
    auto* lambda_cmd = sub( "lambda", "Finite slice of a Lambda set", 0 );
    lambda_cmd->add_option( "--depth", cmd.depth, "Pushout-product depth" )->check( CLI::NonNegativeNumber );
    lambda_cmd->add_option( "--dim-bound", dim_bound, "Largest cube dimension of the generators" );
    lambda_cmd->add_option( "--generators", cmd.generators, "I or I+" )->check( CLI::IsMember( { "I", "I+" } ) );
    lambda_cmd->add_option( "--with-s", cmd.with_s, "S or S_cof" )->check( CLI::IsMember( { "S", "S_cof" } ) );
    lambda_cmd->add_option( "--labels", cmd.labels, "Labels to instantiate over" )->delimiter( ',' );
    sub( "dot", "DOT export of the 1-skeleton", 1 );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::ParseError& e )
    {
        const int code = app.exit( e, out, err );
        return code == 0 ? exit_affirmative : exit_error;
    }

    cmd.verb = app.get_subcommands().front()->get_name();
    if ( budget_nodes > 0 )
        cmd.budget_nodes = budget_nodes;
    if ( dim_bound >= 0 )
        cmd.dim_bound = dim_bound;
    return run( cmd, out, err );
}

} // namespace hdts::cli
