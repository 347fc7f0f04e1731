#pragma once

#include "hdts/core/weak_hdts.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hdts
{

// Table values standing for the constant coordinates 0 and 1.
inline constexpr int neg_inf = -1;
inline constexpr int pos_inf = -2;

// An arrow [m] -> [n] of the cube category with symmetries, given by its
// table fhat: {1..n} -> {1..m} u {-inf, +inf}; fhat[j-1] is the value at j.
// The finite values form a bijection onto {1..m}.
struct cube_arrow
{
    int m = 0;
    int n = 0;
    std::vector< int > fhat;

    [[nodiscard]] bool valid() const;

    auto operator<=>( const cube_arrow& ) const = default;
    bool operator==( const cube_arrow& ) const = default;
};

cube_arrow identity_arrow( int n );

// delta_i^alpha: [n-1] -> [n].
cube_arrow face_arrow( int n, int i, int alpha );

// sigma_i: [n] -> [n], 1 <= i < n.
cube_arrow symmetry_arrow( int n, int i );

// g after f, for f: [m] -> [n] and g: [n] -> [p]; the table of the composite
// is fhat after ghat.
cube_arrow arrow_compose( const cube_arrow& g, const cube_arrow& f );

// All arrows [m] -> [n] in a fixed order (finite values before -inf before
// +inf, position by position). There are C(n,m) 2^(n-m) m! of them.
std::vector< cube_arrow > enumerate_arrows( int m, int n );

// A generating arrow: a face delta_i^alpha into [n] or a symmetry sigma_i of [n].
struct cube_generator
{
    enum class kind
    {
        face,
        symmetry
    };

    kind k = kind::face;
    int n = 0;
    int i = 1;
    int alpha = 0;

    [[nodiscard]] cube_arrow arrow() const;

    bool operator==( const cube_generator& ) const = default;
};

// All generators with codomain [n].
std::vector< cube_generator > generators_into( int n );

// Canonical factorization f = g_1 o g_2 o ... o g_k, returned outermost first:
// the faces inserting the constants (largest position first), then the
// adjacent swaps realizing the residual permutation in bubble-sort order.
std::vector< cube_generator > factorize( const cube_arrow& f );

// The label word of f^*(x) when x carries the word w.
word pull_word( const cube_arrow& f, const word& w );

// The position j with fhat(j) = k.
int position_of( const cube_arrow& f, int k );

// "[1,2]", "[-,1]", "[+]" ...
std::string arrow_name( const cube_arrow& f );

} // namespace hdts
