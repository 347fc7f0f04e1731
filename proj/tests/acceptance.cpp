// Runs the acceptance criteria and prints one pass/fail line per criterion.

#include "support/corpus.hpp"

#include "hdts/core/constructions.hpp"
#include "hdts/core/cubes.hpp"
#include "hdts/core/hom.hpp"
#include "hdts/core/limits.hpp"
#include "hdts/homotopy/cellularize.hpp"
#include "hdts/homotopy/equivalence.hpp"
#include "hdts/homotopy/generators.hpp"
#include "hdts/homotopy/pushout_product.hpp"
#include "hdts/homotopy/reflections.hpp"
#include "hdts/precub/constructions.hpp"
#include "hdts/precub/hom.hpp"
#include "hdts/precub/operations.hpp"
#include "hdts/realize/realize.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hdts;

namespace
{

// Collects the failed checks of one criterion.
class criterion
{
public:
    void expect( bool ok, const std::string& what )
    {
        ++_checks;
        if ( !ok )
            _failures.push_back( what );
    }

    [[nodiscard]] bool passed() const { return _failures.empty() && _checks > 0; }
    [[nodiscard]] std::size_t checks() const { return _checks; }
    [[nodiscard]] const std::vector< std::string >& failures() const { return _failures; }

private:
    std::size_t _checks = 0;
    std::vector< std::string > _failures;
};

std::size_t factorial( std::size_t n ) { return n <= 1 ? 1 : n * factorial( n - 1 ); }

std::size_t orbit_size( const transition& t )
{
    auto a = t.actions;
    std::size_t n = 0;
    do
        ++n;
    while ( std::next_permutation( a.begin(), a.end() ) );
    return n;
}

void cube_counts( criterion& c )
{
    const word letters{ "a", "b", "c", "d" };
    for ( std::size_t n = 1; n <= 4; ++n )
    {
        const auto x = cube( word( letters.begin(), letters.begin() + static_cast< long >( n ) ) );
        const auto tag = "C" + std::to_string( n );
        c.expect( x->state_count() == ( 1u << n ), tag + " states" );
        c.expect( x->action_count() == n, tag + " actions" );
        c.expect( x->count_of_arity( n ) == 1, tag + " one canonical top transition" );
        for ( const auto& t : x->transitions() )
            if ( t.arity() == n )
                c.expect( orbit_size( t ) == factorial( n ), tag + " ordered orbit of size n!" );
    }
}

void cubification_counterexample( criterion& c )
{
    const auto r = cubify( cube_boundary( { "x1", "x2" } ) );
    c.expect( r.object->action_count() == 4, "cub of the boundary has four actions" );
    c.expect( !is_isomorphism( r.counit ), "counit is not an isomorphism" );
}

void realization_counterexample( criterion& c )
{
    const auto tb = realize( standard_boundary( { "x", "y" } ) );
    const auto tc = realize( standard_cube( { "x", "y" } ) );
    c.expect( tb.object->action_count() == 4, "realized boundary has four actions" );
    c.expect( tc.object->action_count() == 2, "realized square has two actions" );
    const auto f = realize_map( standard_boundary_inclusion( { "x", "y" } ), tb, tc );
    c.expect( is_valid_map( f ), "realized inclusion is a map" );
    c.expect( !is_cofibration_hdts( f ), "realized inclusion is not a cofibration" );
}

void adjunction_identities( criterion& c )
{
    const std::vector< std::vector< action > > mus = {
        { { "x", "x" } },
        { { "u", "x" }, { "v", "x" } },
        { { "u", "x" }, { "v", "y" }, { "w", "y" } },
    };
    for ( const auto& mu : mus )
        c.expect( isomorphic( realize_of_free( mu, 3 ), clique( mu, 3 ) ),
                  "realization of a free object on " + std::to_string( mu.size() ) + " letters is the clique" );

    for ( const auto& k : { standard_cube( { "x" } ), standard_cube( { "a", "b" } ), standard_boundary( { "a", "b" } ) } )
    {
        const auto lhs = realize( cylinder_precub( k ).object ).object;
        const auto rhs = cylinder_hdts( realize( k ).object, k->sigma(), k->dim_bound() ).object;
        c.expect( isomorphic( lhs, rhs ), "realized cylinder is V times the realization" );
    }

    const std::vector< hdts_ptr > xs = { cube( { "x", "y" } ), cube_boundary( { "x", "y" } ), doublet( "x" ),
                                         corpus::shared_action_pushout_leg().codomain };
    for ( const auto& x : xs )
    {
        const int d = std::max< int >( 1, static_cast< int >( x->max_arity() ) );
        c.expect( isomorphic( realize( nerve( x, d ).object ).object, cubify( x ).object ),
                  "realized nerve is the cubification" );
    }
}

void reflection_laws( criterion& c )
{
    const auto& objs = corpus::objects();
    c.expect( objs.size() >= 20, "corpus has at least 20 objects" );
    for ( const auto& [ name, x ] : objs )
    {
        const auto r = csa1_reflect( x );
        const auto rr = csa1_reflect( r.object );
        c.expect( is_isomorphism( rr.unit ) && isomorphic( rr.object, r.object ), "CSA1 reflection idempotent on " + name );
        const auto b = bls_reflect( x );
        const auto bb = bls_reflect( b.object );
        c.expect( is_isomorphism( bb.unit ) && isomorphic( bb.object, b.object ), "label reflection idempotent on " + name );
        c.expect( label_injective( *b.object ), "label reflection is label-injective on " + name );
        c.expect( satisfies_csa1( *b.object ), "label reflection satisfies CSA1 on " + name );
    }
    c.expect( isomorphic( csa1_reflect( p_cof_map( "x" ).codomain ).object, doublet( "x" ) ),
              "CSA1 of the glued cylinders is the doublet" );
}

void weak_equivalence_deciders( criterion& c )
{
    c.expect( weak_equiv( cylinder_hdts( cube( { "x" } ) ).sigma, model::cts ).equivalent, "sigma accepted in cts" );
    c.expect( !weak_equiv( p_map( "x" ), model::cts ).equivalent, "p_x rejected in cts" );
    c.expect( weak_equiv( p_map( "x" ), model::localized ).equivalent, "p_x accepted in localized" );

    std::vector< corpus::named_map > maps = corpus::maps();
    for ( const auto& [ name, x ] : corpus::objects() )
    {
        maps.push_back( { "CSA1 unit of " + name, csa1_reflect( x ).unit } );
        maps.push_back( { "label unit of " + name, bls_reflect( x ).unit } );
    }
    for ( const auto& [ name, f ] : maps )
        c.expect( weak_equiv( f, model::cts ).equivalent == weak_equiv( f, model::cts_plus ).equivalent,
                  "cts and cts+ agree on " + name );
}

void precubical_localized( criterion& c )
{
    c.expect( weak_equiv_precub_localized( cylinder_precub( standard_cube( { "x" } ) ).sigma ).equivalent,
              "cylinder collapse accepted" );
    c.expect( !weak_equiv_precub_localized( standard_boundary_inclusion( { "x", "y" } ) ).equivalent,
              "boundary inclusion rejected" );
}

void hda_paradigm( criterion& c )
{
    const auto ds = corpus::double_square();
    c.expect( !check_hda( *ds ).hda, "double square fails the HDA condition" );
    c.expect( isomorphic_precub( sh_reflect( ds ).object, standard_cube( { "x", "y" } ) ), "sh of the double square" );
    for ( const auto& [ name, x ] : corpus::objects() )
    {
        const int d = std::max< int >( 1, static_cast< int >( x->max_arity() ) );
        c.expect( check_hda( *nerve( x, d ).object ).hda, "nerve of " + name + " satisfies HDA" );
    }
}

void factorization_replay( criterion& c )
{
    std::size_t done = 0;
    for ( const auto& [ name, f ] : corpus::cofibrations() )
    {
        if ( !is_cubical( *f.domain ) || !is_cubical( *f.codomain ) )
            continue;
        const auto fac = cellularize( f );
        const auto r = replay( fac );
        c.expect( r.ok, "replay of " + name + ( r.ok ? "" : ": " + r.message ) );
        ++done;
    }
    c.expect( done >= 10, "at least 10 cofibrations factored" );
}

void pushout_product_closure( criterion& c )
{
    const instantiation inst{ { "a", "b" }, 2 };
    const auto corners = { corner::gamma, corner::gamma0, corner::gamma1 };
    for ( const auto& m : hdts_family( family_tag::i_hdts, inst ) )
        for ( auto k : corners )
            c.expect( is_cofibration_hdts( pushout_product( m.map, k ) ), m.name + "*" + to_string( k ) + " is a cofibration" );
    for ( const auto& m : precub_family( inst ) )
        for ( auto k : corners )
            c.expect( is_cofibration_precub( pushout_product( m.map, k ) ),
                      m.name + "*" + to_string( k ) + " is a precubical cofibration" );
    // The extra members of I+ are realizations of boundary inclusions; their
    // corners are realizations of precubical cofibrations.
    for ( const word& w : std::vector< word >{ { "a", "a" }, { "a", "b" }, { "b", "a" }, { "b", "b" } } )
        for ( auto k : corners )
            c.expect( realized_corner_is_cell( standard_boundary_inclusion( w ), k ),
                      "realized boundary corner " + to_string( k ) + " is a realized cofibration" );

    for ( const auto& k : { standard_cube( { "a", "b" } ), standard_boundary( { "a", "b" } ), corpus::double_square(),
                            precub_interval( label_alphabet{ { "a", "b" } }, 2 ) } )
        c.expect( is_cofibration_precub( cylinder_ends( k ) ), "ends of a precubical cylinder are injective" );
    for ( const auto& [ name, x ] : corpus::objects() )
        c.expect( is_cofibration_hdts( cylinder_ends( x ) ), "ends of cyl " + name + " are a cofibration" );
}

void homotopy_is_equality( criterion& c )
{
    const std::vector< hdts_ptr > targets = { cube( { "x" } ), cube( { "x", "y" } ), doublet( "x" ),
                                              cube_boundary( { "x", "y" } ), corpus::loop() };
    const std::vector< hdts_ptr > sources = { cube( {} ), cube( { "x" } ), cube( { "y" } ), discrete( 2 ),
                                              coproduct( { cube( { "x" } ), cube( { "x" } ) } ).object };
    std::size_t pairs = 0;
    for ( const auto& t : targets )
    {
        c.expect( satisfies_csa1( *t ), "target satisfies CSA1" );
        for ( const auto& s : sources )
        {
            const auto hs = hom_set( s, t );
            for ( const auto& f : hs )
                for ( const auto& g : hs )
                {
                    ++pairs;
                    c.expect( homotopic( f, g ) == same_map( f, g ), "homotopic iff equal" );
                }
        }
    }
    c.expect( pairs > 100, "enough map pairs" );
}

} // namespace

int main()
{
    const std::vector< std::pair< std::string, std::function< void( criterion& ) > > > criteria = {
        { "cube counts", cube_counts },
        { "cubification counterexample", cubification_counterexample },
        { "realization counterexample", realization_counterexample },
        { "adjunction identities", adjunction_identities },
        { "reflection laws", reflection_laws },
        { "weak-equivalence deciders", weak_equivalence_deciders },
        { "precubical localized equivalence", precubical_localized },
        { "HDA paradigm", hda_paradigm },
        { "factorization replay", factorization_replay },
        { "pushout-product closure", pushout_product_closure },
        { "homotopy versus equality", homotopy_is_equality },
    };
    int failed = 0;
    for ( std::size_t i = 0; i < criteria.size(); ++i )
    {
        criterion c;
        std::string error;
        try
        {
            criteria[ i ].second( c );
        }
        catch ( const std::exception& e )
        {
            error = e.what();
        }
        const bool ok = error.empty() && c.passed();
        failed += ok ? 0 : 1;
        std::cout << ( ok ? "PASS" : "FAIL" ) << "  " << ( i + 1 ) << ". " << criteria[ i ].first << " (" << c.checks()
                  << " checks)\n";
        if ( !error.empty() )
            std::cout << "      exception: " << error << "\n";
        for ( const auto& f : c.failures() )
            std::cout << "      failed: " << f << "\n";
    }
    std::cout << ( criteria.size() - failed ) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
