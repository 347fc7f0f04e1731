#pragma once

#include "hdts/homotopy/reflections.hpp"
#include "hdts/precub/precub_set.hpp"

namespace hdts
{

// A homotopy H: cyl A -> B with H gamma0 = f and H gamma1 = g, searched among
// the maps out of the cylinder of the common domain.
std::optional< hdts_map > find_homotopy( const hdts_map& f, const hdts_map& g, const budget& b = {} );
inline bool homotopic( const hdts_map& f, const hdts_map& g, const budget& b = {} )
{
    return find_homotopy( f, g, b ).has_value();
}

enum class model
{
    cts,
    cts_plus,
    localized,
};

std::string to_string( model m );
model parse_model( const std::string& s );

struct equivalence_verdict
{
    bool equivalent = false;
    hdts_map reflected;  // CSA1(f) or bl(f)
    std::string reason;  // why the reflected map is not an isomorphism
};

// cts and cts+ share their weak equivalences, the maps f with CSA1(f) an
// isomorphism; the localized structure uses bl(f). Throws hdts::error when
// the domain or codomain is not cubical.
equivalence_verdict weak_equiv( const hdts_map& f, model m, const budget& b = {} );

// bl(T(f)) is an isomorphism.
equivalence_verdict weak_equiv_precub_localized( const precub_map& f, const budget& b = {} );

// Why a map is not an isomorphism, empty when it is one.
std::string isomorphism_defect( const hdts_map& f );

} // namespace hdts
