#pragma once

#include "hdts/precub/precub_set.hpp"

namespace hdts
{

enum class family_tag
{
    i_hdts,    // C, R, boundary inclusions of cubes, C_1[x] -> doublet[x]
    i_plus,    // i_hdts and the realized boundary inclusions of squares
    i_precub,  // C, R and the boundary inclusions of standard cubes
    s_family,  // p_x: C_1[x] + C_1[x] -> doublet[x]
    s_cof,     // the cofibrant replacements of the p_x
};

std::string to_string( family_tag t );
family_tag parse_family_tag( const std::string& s );

// Which members of a family to build: the labels to run over and the largest
// cube dimension.
struct instantiation
{
    std::vector< std::string > labels;
    int dim_cap = 2;
};

struct named_map
{
    std::string name;
    hdts_map map;
};

struct named_precub_map
{
    std::string name;
    precub_map map;
};

// Members of a family of maps of systems, in a fixed order. Throws
// budget_exceeded past max_family_members and hdts::error for i_precub.
std::vector< named_map > hdts_family( family_tag t, const instantiation& inst, const budget& b = {} );

// Members of i_precub.
std::vector< named_precub_map > precub_family( const instantiation& inst, const budget& b = {} );

// C: empty -> {0} and R: {0,1} -> {0}.
hdts_map generator_c();
hdts_map generator_r();
precub_map precub_generator_c();
precub_map precub_generator_r();

// p_x: C_1[x] + C_1[x] -> doublet[x], the first copy onto (1,x,2).
hdts_map p_map( const std::string& x );

// C_1[x] + C_1[x] -> (V x C_1[x] + V x C_1[x]) / (x2 = x4): each copy enters
// its cylinder through gamma0, and the actions coming from (x,1) in the two
// cylinders are identified.
hdts_map p_cof_map( const std::string& x );

} // namespace hdts
