#pragma once

#include "hdts/homotopy/equivalence.hpp"
#include "hdts/homotopy/lifting.hpp"

namespace hdts
{

enum class fibrancy_status
{
    fibrant,
    not_fibrant,
    unknown,
};

std::string to_string( fibrancy_status s );

struct fibrancy_verdict
{
    fibrancy_status status = fibrancy_status::unknown;
    std::string witness;           // the failing member of the slice
    std::optional< hdts_map > map;  // the map that does not extend
};

// Sound certificate: systems satisfying CSA1 are fibrant in cts and cts+
// (and, when label-injective, in the localized structure). Otherwise unknown.
fibrancy_verdict fibrancy_certificate( const hdts_ptr& x, model m );

// Sound refutation: looks for a member j: A -> B of the slice of Lambda up to
// `depth` and a map A -> X without extension along j. The slice uses I for
// cts, I+ for cts+, and S_cof with I for the localized structure, over the
// labels of X with cubes up to dim_cap. Never answers fibrant.
fibrancy_verdict fibrancy_refute( const hdts_ptr& x, model m, int depth, int dim_cap = 1, const budget& b = {} );

} // namespace hdts
