#pragma once

#include "hdts/core/weak_hdts.hpp"

namespace hdts
{

// Name of the cube state with coordinates given by the bits of `mask`
// (bit i-1 holds coordinate i), e.g. "01" for n = 2. C_0 has the state "()".
std::string cube_state_name( unsigned mask, std::size_t n );

// Action (w_i, i) of a cube, printed "(a,1)".
std::string cube_action_name( const std::string& label, std::size_t i );

// The n-cube C_n[w]. State ids are the coordinate bitmasks, action i-1 is
// (w_i, i), and (e, D, e + D) is a transition for every nonempty set D of
// coordinates equal to 0 in e.
hdts_ptr cube( const word& w );

// C_n[w] without its n-transition. For n = 1 the action is dropped as well,
// so the boundary of a 1-cube is the discrete system on two states.
hdts_ptr cube_boundary( const word& w );

// C_n[w]^ext: the two extreme states and the single n-transition.
hdts_ptr pure_cube( const word& w );

// The doublet: states 1..4, one action x, transitions (1,x,2) and (3,x,4).
hdts_ptr doublet( const std::string& x );

// S(mu) truncated at arity dim_bound: one state "0", the given actions, and
// every multiset of 1..dim_bound actions as a loop.
hdts_ptr clique( const std::vector< action >& mu, int dim_bound = default_dim_bound );

// The interval object V = S(sigma x {0,1} -> sigma), actions "(x,0)", "(x,1)".
hdts_ptr interval( const label_alphabet& sigma, int dim_bound = default_dim_bound );

// The terminal object S(id) over sigma.
hdts_ptr terminal( const label_alphabet& sigma, int dim_bound = default_dim_bound );

// n isolated states "0".."n-1".
hdts_ptr discrete( std::size_t n );

// The system with no state and the single action x (the lone action x_).
hdts_ptr lone_action( const std::string& x );

hdts_ptr empty_hdts();

// The map of systems sending x_ to the action of C_1[x].
hdts_map lone_action_in_cube( const std::string& x );

// Inclusion of the boundary / pure transition into the cube.
hdts_map boundary_inclusion( const word& w );
hdts_map pure_inclusion( const word& w );

// C_1[x] -> doublet[x], onto the transition (1,x,2).
hdts_map cube_into_doublet( const std::string& x );

} // namespace hdts
