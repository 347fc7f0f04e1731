#pragma once

#include "hdts/precub/precub_set.hpp"

#include <map>

namespace hdts
{

// cyl K: cells of dimension n are pairs (x, e) with x in K_n and e in
// {0,1}^n; faces delete the paired bit, symmetries swap bits. Vertices keep
// the names of K.
struct precub_cylinder
{
    precub_ptr object;
    precub_map gamma0;
    precub_map gamma1;
    precub_map sigma;
};

precub_cylinder cylinder_precub( const precub_ptr& k );

// The cylinder of a map, cyl f: cyl K -> cyl L.
precub_map cylinder_map( const precub_cylinder& ck, const precub_cylinder& cl, const precub_map& f );

// Pairs of cells with equal words; operators componentwise.
struct precub_product
{
    precub_ptr object;
    precub_map first;
    precub_map second;
    std::vector< std::map< std::pair< int, int >, int > > cell_of;
};

precub_product product_precub( const precub_ptr& k, const precub_ptr& l );

precub_map pairing_precub( const precub_product& p, const precub_map& f, const precub_map& g );

struct precub_diagram
{
    struct arrow
    {
        std::size_t from;
        std::size_t to;
        precub_map map;
    };

    std::vector< precub_ptr > objects;
    std::vector< arrow > arrows;

    std::size_t add_object( precub_ptr k )
    {
        objects.push_back( std::move( k ) );
        return objects.size() - 1;
    }
    void add_arrow( std::size_t from, std::size_t to, precub_map f ) { arrows.push_back( { from, to, std::move( f ) } ); }
};

struct precub_colimit
{
    precub_ptr object;
    std::vector< precub_map > cocone;
};

// Dimensionwise set colimits (names "i.name", classes ordered by their
// smallest member); the bound is the largest bound of the objects. Throws
// when merged cells carry different words or operators are not well defined.
precub_colimit colimit_precub( const precub_diagram& d );

precub_map induced_precub_map( const precub_colimit& c, const precub_ptr& apex, const std::vector< precub_map >& cone );

precub_colimit coproduct_precub( const std::vector< precub_ptr >& ks );

// Pushout of B <-f- A -g-> C; cocone indexed A, B, C.
precub_colimit pushout_precub( const precub_map& f, const precub_map& g );

struct precub_quotient
{
    precub_ptr object;
    precub_map unit;
};

// The quotient by the smallest congruence containing the given pairs of
// cells (dimension, a, b): merged cells have merged faces and symmetries.
precub_quotient quotient_precub( const precub_ptr& k, const std::vector< std::tuple< int, int, int > >& pairs );

// Injective in every dimension n >= 1.
bool is_cofibration_precub( const precub_map& f );

struct hda_verdict
{
    bool hda = true;
    int dim = 0;
    int first = -1;
    int second = -1;
};

// No two distinct p-cells, p >= 2, share all their faces.
hda_verdict check_hda( const precub_set& k );

struct sh_result
{
    precub_ptr object;
    precub_map unit;
};

// Merges offending pairs until check_hda holds.
sh_result sh_reflect( const precub_ptr& k );

} // namespace hdts
