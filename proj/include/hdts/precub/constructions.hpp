#pragma once

#include "hdts/precub/precub_set.hpp"

namespace hdts
{

// The labelled standard cube: cells of dimension m are the arrows [m] -> [n]
// in the order of enumerate_arrows, named by arrow_name, with the words pulled
// back from w; d(x) = x o delta and s(x) = x o sigma. The bound is n.
precub_ptr standard_cube( const word& w );

// The standard cube without its n-cells (bound n).
precub_ptr standard_boundary( const word& w );

// The index of the cell f in standard_cube(w).
int standard_cell( const cube_arrow& f );

// The truncation at dim_bound of the free object on mu: cells of dimension n
// are the words of length n over the actions, labelled through mu.
precub_ptr free_precub( const std::vector< action >& mu, int dim_bound );

// free on sigma x {0,1} -> sigma (letters "(x,0)", "(x,1)").
precub_ptr precub_interval( const label_alphabet& sigma, int dim_bound );

// free on the identity of sigma: the terminal object up to the bound.
precub_ptr precub_terminal( const label_alphabet& sigma, int dim_bound );

precub_ptr empty_precub( int dim_bound = 0 );

// The inclusion of the boundary into the standard cube.
precub_map standard_boundary_inclusion( const word& w );

// The map from the standard cube on the word of x classifying the cell x.
precub_map yoneda_map( const precub_ptr& k, int n, int x );

} // namespace hdts
