#pragma once

#include "hdts/core/limits.hpp"
#include "hdts/precub/operations.hpp"

namespace hdts
{

// cyl X = V x X with V truncated at dim_bound (which must be at least the
// largest arity of X). The states of V x X are those of X since V has a single
// state; gamma_k sends u to ((mu u, k), u) and sigma is the second projection.
struct hdts_cylinder
{
    hdts_ptr object;
    hdts_map gamma0;
    hdts_map gamma1;
    hdts_map sigma;
    product_result product;

    [[nodiscard]] const hdts_map& gamma( int k ) const { return k == 0 ? gamma0 : gamma1; }
};

hdts_cylinder cylinder_hdts( const hdts_ptr& x, const label_alphabet& sigma, int dim_bound, const budget& b = {} );

// The cylinder with the alphabet of x and the bound max(1, max arity of x).
hdts_cylinder cylinder_hdts( const hdts_ptr& x, const budget& b = {} );

// cyl f: cyl X -> cyl Y, both cylinders built with the same interval.
hdts_map cylinder_map( const hdts_cylinder& cx, const hdts_cylinder& cy, const hdts_map& f );

enum class corner
{
    gamma,
    gamma0,
    gamma1,
};

std::string to_string( corner c );

// f * gamma: (B + B) u_(A + A) cyl A -> cyl B, induced by gamma0, gamma1 on B
// and cyl f; f * gamma_k: B u_A cyl A -> cyl B along gamma_k. Both cylinders
// use the merged alphabet and the bound max(1, arities of A and B).
hdts_map pushout_product( const hdts_map& f, corner c, const budget& b = {} );

precub_map pushout_product( const precub_map& f, corner c );

// Membership of T(f) * c in the cofibrations generated by C, R and the
// realized boundary inclusions: holds when f * c is a precubical cofibration
// and T(f) * c is isomorphic, as an arrow, to T(f * c).
bool realized_corner_is_cell( const precub_map& f, corner c, const budget& b = {} );

// The map K + K -> cyl K induced by gamma0 and gamma1.
precub_map cylinder_ends( const precub_ptr& k );
hdts_map cylinder_ends( const hdts_ptr& x, const budget& b = {} );

} // namespace hdts
