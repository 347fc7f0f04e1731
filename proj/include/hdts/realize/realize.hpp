#pragma once

#include "hdts/core/cubes.hpp"
#include "hdts/core/limits.hpp"
#include "hdts/precub/precub_set.hpp"

namespace hdts
{

// The map of cubes C_m[v] -> C_n[w] realizing f: [m] -> [n]: a state e goes
// to (e_fhat(1), ..., e_fhat(n)) with e_-inf = 0 and e_+inf = 1, and the
// action (v_i, i) goes to (v_i, j) where fhat(j) = i. Throws when the words
// do not match along f.
hdts_map realize_arrow( const cube_arrow& f, const word& source, const word& target );

// T(K): the colimit of one cube per cell along the face and symmetry
// generators. legs[n][x] is the cocone leg of the cell x of dimension n.
struct realization
{
    hdts_ptr object;
    std::vector< std::vector< hdts_map > > legs;
};

realization realize( const precub_ptr& k, const budget& b = {} );

// T(f) between given realizations of its domain and codomain.
hdts_map realize_map( const precub_map& f, const realization& tk, const realization& tl );

// R(X) truncated at dim_bound: the cells of dimension n are the cubes
// C_n[w] -> X, named by their vertex and action images; operators are
// precomposition with faces and symmetries.
struct nerve_result
{
    precub_ptr object;
    std::vector< std::vector< cube_map > > cubes;  // per dimension, in cell order
};

nerve_result nerve( const hdts_ptr& x, int dim_bound, const budget& b = {} );

// The counit T(R(X)) -> X.
hdts_map counit( const realization& trx, const nerve_result& rx );

struct adjunction_report
{
    std::size_t hom_realized = 0;  // |hom(T K, X)|
    std::size_t hom_nerve = 0;     // |hom(K, R X)|
    bool transposes_inverse = false;
    bool counit_valid = false;
    bool counit_iso = false;
    bool cubification_iso = false;  // T(R(X)) isomorphic to cub(X)

    [[nodiscard]] bool ok() const
    {
        return hom_realized == hom_nerve && transposes_inverse && counit_valid && cubification_iso;
    }
};

adjunction_report adjunction_check( const precub_ptr& k, const hdts_ptr& x, const budget& b = {} );

// T applied to the free object on mu, truncated at dim_bound.
hdts_ptr realize_of_free( const std::vector< action >& mu, int dim_bound, const budget& b = {} );

} // namespace hdts
