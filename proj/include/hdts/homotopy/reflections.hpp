#pragma once

#include "hdts/core/weak_hdts.hpp"

#include <optional>

namespace hdts
{

struct reflection
{
    hdts_ptr object;
    hdts_map unit;
};

// Two distinct actions with the same label on parallel 1-transitions.
struct csa1_witness
{
    action_id first;
    action_id second;
    state_id source;
    state_id target;
};

// All violating pairs (first < second), sorted.
std::vector< csa1_witness > csa1_violations( const weak_hdts& x );
inline bool satisfies_csa1( const weak_hdts& x ) { return csa1_violations( x ).empty(); }

// Merges one violating pair at a time and re-closes until CSA1 holds. The
// smallest pair is merged first; with a seed, the pair is drawn at random
// among the current violations instead (for order-independence checks).
reflection csa1_reflect( const hdts_ptr& x, const budget& b = {}, std::optional< unsigned > seed = {} );

// Merges all actions sharing a label, then re-closes.
reflection bls_reflect( const hdts_ptr& x, const budget& b = {} );

bool label_injective( const weak_hdts& x );

// The map between reflections induced by f: the unique map r(f) with
// r(f) o rx.unit = ry.unit o f. Throws when f does not descend.
hdts_map reflect_map( const reflection& rx, const reflection& ry, const hdts_map& f );

// CSA1(f) and bl(f) computed from scratch.
hdts_map csa1_map( const hdts_map& f, const budget& b = {} );
hdts_map bls_map( const hdts_map& f, const budget& b = {} );

} // namespace hdts
