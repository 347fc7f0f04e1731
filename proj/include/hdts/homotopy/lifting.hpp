#pragma once

#include "hdts/homotopy/generators.hpp"
#include "hdts/homotopy/pushout_product.hpp"

#include <limits>

namespace hdts
{

// A commutative square
//
//   A --top--> X
//   |          |
//   f          g
//   v          v
//   B --bottom-> Y
//
// whose diagonal fillers k: B -> X (k f = top, g k = bottom) are searched.
struct lifting_square
{
    hdts_map f;
    hdts_map g;
    hdts_map top;
    hdts_map bottom;
};

struct precub_lifting_square
{
    precub_map f;
    precub_map g;
    precub_map top;
    precub_map bottom;
};

// All fillers, up to `limit`. Throws hdts::error when the square does not
// commute.
std::vector< hdts_map > lift_search( const lifting_square& sq, std::size_t limit = std::numeric_limits< std::size_t >::max(),
                                     const budget& b = {} );
std::vector< precub_map > lift_search( const precub_lifting_square& sq,
                                       std::size_t limit = std::numeric_limits< std::size_t >::max() );

// The extensions k: B -> X of u: A -> X along j: A -> B (k j = u): the
// fillers of the square of j against X -> 1.
std::vector< hdts_map > extensions( const hdts_map& j, const hdts_map& u,
                                    std::size_t limit = std::numeric_limits< std::size_t >::max(), const budget& b = {} );

// X is j-injective when every u: A -> X extends along j, j-orthogonal when
// every u extends uniquely. The witness is the first u failing the condition.
struct extension_verdict
{
    bool holds = true;
    std::optional< hdts_map > witness;
    std::size_t extension_count = 0;  // for the witness
};

extension_verdict check_injective( const hdts_map& j, const hdts_ptr& x, const budget& b = {} );
extension_verdict check_orthogonal( const hdts_map& j, const hdts_ptr& x, const budget& b = {} );

// The slice of Lambda(V, S, I) with Lambda^0 = S u (I * gamma0) u (I * gamma1)
// and Lambda^(n+1) = Lambda^n * gamma, for the depths 0..depth, deduplicated
// up to isomorphism of arrows. S may be absent.
std::vector< named_map > lambda_generate( std::optional< family_tag > s, family_tag i, int depth,
                                          const instantiation& inst, const budget& b = {} );

} // namespace hdts
