#pragma once

#include "hdts/precub/cube_arrow.hpp"

#include <memory>
#include <optional>

namespace hdts
{

// A cell of dimension n: its label word (length n), its faces
// faces[2(i-1) + alpha] = d_i^alpha (cells of dimension n-1) and its
// symmetries syms[i-1] = s_i (cells of dimension n). Entries of -1 mark gaps
// in a candidate table.
struct cell
{
    std::string name;
    word label;
    std::vector< int > faces;
    std::vector< int > syms;

    bool operator==( const cell& ) const = default;
};

// A labelled symmetric precubical set with cells of dimension 0..dim_bound.
class precub_set
{
public:
    precub_set() = default;

    // Requires cells.size() == dim_bound + 1 and operator tables of the right
    // sizes; the presheaf conditions are checked by validate_presheaf.
    precub_set( label_alphabet sigma, int dim_bound, std::vector< std::vector< cell > > cells );

    [[nodiscard]] const label_alphabet& sigma() const { return _sigma; }
    [[nodiscard]] int dim_bound() const { return _dim_bound; }

    [[nodiscard]] const std::vector< cell >& cells( int n ) const { return _cells[ n ]; }
    [[nodiscard]] const cell& at( int n, int x ) const { return _cells[ n ][ x ]; }
    [[nodiscard]] std::size_t cell_count( int n ) const { return n <= _dim_bound ? _cells[ n ].size() : 0; }
    [[nodiscard]] std::size_t total_cells() const;
    // Largest dimension with a cell, -1 when empty.
    [[nodiscard]] int top_dim() const;

    [[nodiscard]] int face( int n, int x, int i, int alpha ) const { return _cells[ n ][ x ].faces[ 2 * ( i - 1 ) + alpha ]; }
    [[nodiscard]] int sym( int n, int x, int i ) const { return _cells[ n ][ x ].syms[ i - 1 ]; }

    [[nodiscard]] std::optional< int > find_cell( int n, const std::string& name ) const;

    bool operator==( const precub_set& ) const = default;

private:
    label_alphabet _sigma;
    int _dim_bound = 0;
    std::vector< std::vector< cell > > _cells{ 1 };
};

using precub_ptr = std::shared_ptr< const precub_set >;

template < typename... Args >
precub_ptr make_precub( Args&&... args )
{
    return std::make_shared< const precub_set >( std::forward< Args >( args )... );
}

// The same cells with another dimension bound; raising adds empty
// dimensions, lowering drops cells above the bound.
precub_ptr with_dim_bound( const precub_ptr& k, int dim_bound );

// K(f)(x) for x in K_n, f: [m] -> [n], chaining the operator tables along the
// canonical factorization of f.
int apply_arrow( const precub_set& k, const cube_arrow& f, int x );

int apply_generator( const precub_set& k, const cube_generator& g, int x );

enum class precub_violation
{
    none,
    table_gap,
    label_mismatch,
    coherence,
};

std::string to_string( precub_violation v );

struct precub_validation
{
    bool valid = true;
    precub_violation kind = precub_violation::none;
    std::string message;
};

// Table totality, the label rules for faces and symmetries, and coherence:
// for every cell x in K_n, every generator g into [n] and every arrow h into
// the domain of g, K(g o h)(x) = K(h)(K(g)(x)). This makes K a presheaf.
precub_validation validate_presheaf( const precub_set& k );

struct precub_map
{
    precub_ptr domain;
    precub_ptr codomain;
    std::vector< std::vector< int > > cell_map;  // per dimension of the domain
};

std::optional< std::string > precub_map_violation( const precub_map& f );
inline bool is_valid_precub_map( const precub_map& f ) { return !precub_map_violation( f ).has_value(); }

precub_map identity_precub_map( const precub_ptr& k );
precub_map compose( const precub_map& g, const precub_map& f );
bool same_precub_map( const precub_map& f, const precub_map& g );

} // namespace hdts
