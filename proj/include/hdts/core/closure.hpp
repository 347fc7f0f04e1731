#pragma once

#include "hdts/core/weak_hdts.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hdts
{

// Smallest superset of `seed` closed under the composition axiom in multiset
// form: whenever M = A + B + C (nonempty sub-multisets) and
//   M : a -> b,  A : a -> v1,  B + C : v1 -> b,  A + B : a -> v2,  C : v2 -> b
// are transitions, B : v1 -> v2 is added. Iterates to the fixpoint. Throws
// budget_exceeded when more than max_derived_transitions are derived.
std::vector< transition > close_composition( std::size_t state_count, std::size_t action_count,
                                             std::vector< transition > seed, const budget& b = {} );

// Raw system as read from a file: string ids, transition action lists in any
// order.
struct hdts_candidate
{
    struct raw_transition
    {
        std::string from;
        std::vector< std::string > actions;
        std::string to;
    };

    std::vector< std::string > sigma;
    std::vector< std::string > states;
    std::vector< action > actions;
    std::vector< raw_transition > transitions;
};

enum class violation_kind
{
    none,
    empty_alphabet,
    duplicate_id,
    dangling_state,
    dangling_action,
    label_outside_alphabet,
    empty_transition,
    non_canonical,
    composition_not_closed,
};

std::string to_string( violation_kind k );

struct hdts_validation
{
    bool valid = true;
    violation_kind kind = violation_kind::none;
    std::string message;
    // The first derivable but missing transition, for composition_not_closed.
    std::optional< transition > witness;
    // The multiset axiom holds by construction of the canonical encoding.
    std::string multiset_axiom = "represented";
};

hdts_validation validate( const weak_hdts& x, const budget& b = {} );

// Checks references and encoding of the raw candidate, then the closure
// condition on its canonical form.
hdts_validation validate( const hdts_candidate& c, const budget& b = {} );

// Builds the canonical weak HDTS of a candidate (sorting every action list by
// action order). Throws hdts::error on dangling or duplicate ids.
weak_hdts canonicalize( const hdts_candidate& c );

// Builds a system and closes its transitions.
hdts_ptr make_closed( label_alphabet sigma, std::vector< std::string > states, std::vector< action > actions,
                      std::vector< transition > transitions, const budget& b = {} );

} // namespace hdts
