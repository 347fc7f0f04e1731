#pragma once

#include "hdts/core/weak_hdts.hpp"

namespace hdts
{

// A cube of x: a map C_n[w] -> x.
struct cube_map
{
    word w;
    hdts_map map;

    [[nodiscard]] std::size_t dim() const { return w.size(); }
};

// The map C_{n-1}[w without letter i] -> C_n[w] inserting the constant alpha
// at coordinate i (1-based).
hdts_map cube_face_inclusion( const word& w, std::size_t i, int alpha );

// The map C_n[w with letters i, i+1 swapped] -> C_n[w] exchanging the
// coordinates i and i+1 (1-based).
hdts_map cube_swap( const word& w, std::size_t i );

// c after the face inclusion / coordinate swap.
cube_map cube_face( const cube_map& c, std::size_t i, int alpha );
cube_map cube_symmetry( const cube_map& c, std::size_t i );

// Every cube of x of dimension at most n_max. Cubes of dimension n >= 1 are
// found per n-transition and per ordering of its actions, with the remaining
// vertices assigned by backtracking.
std::vector< cube_map > enumerate_cube_maps( const hdts_ptr& x, std::size_t n_max, const budget& b = {} );

struct cubical_verdict
{
    bool cubical = true;
    std::string witness;
};

// All actions are used and the Intermediate state axiom holds.
cubical_verdict check_cubical( const weak_hdts& x );
inline bool is_cubical( const weak_hdts& x ) { return check_cubical( x ).cubical; }

struct coreflect_result
{
    hdts_ptr object;
    hdts_map inclusion;
};

// The union of the subcubes of x (all states kept), with its inclusion.
coreflect_result coreflect_cubical( const hdts_ptr& x, const budget& b = {} );

struct cubify_result
{
    hdts_ptr object;
    hdts_map counit;
    std::vector< cube_map > cubes;
};

// The colimit of all cubes of x along faces and symmetries, with the
// canonical map to x.
cubify_result cubify( const hdts_ptr& x, const budget& b = {} );

} // namespace hdts
