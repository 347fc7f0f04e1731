#pragma once

#include "hdts/budget.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdts
{

using state_id = int;
using action_id = int;
using word = std::vector< std::string >;

// The effective alphabet: a sorted, duplicate-free set of label tokens.
class label_alphabet
{
public:
    label_alphabet() = default;
    explicit label_alphabet( std::vector< std::string > labels );

    [[nodiscard]] const std::vector< std::string >& labels() const { return _labels; }
    [[nodiscard]] bool contains( const std::string& label ) const;
    [[nodiscard]] bool empty() const { return _labels.empty(); }
    [[nodiscard]] std::size_t size() const { return _labels.size(); }

    [[nodiscard]] label_alphabet merged( const label_alphabet& other ) const;

    bool operator==( const label_alphabet& ) const = default;

private:
    std::vector< std::string > _labels;
};

struct action
{
    std::string name;
    std::string label;

    bool operator==( const action& ) const = default;
};

// A transition with its actions stored as a sorted multiset; this is the
// canonical representative of the orbit under permutation of the actions.
struct transition
{
    state_id source = 0;
    std::vector< action_id > actions;
    state_id target = 0;

    [[nodiscard]] std::size_t arity() const { return actions.size(); }

    auto operator<=>( const transition& ) const = default;
    bool operator==( const transition& ) const = default;
};

// A finite weak higher dimensional transition system. Transitions are kept in
// canonical form, sorted and duplicate-free. Closure under the composition
// axiom is checked by validate(), not enforced here.
class weak_hdts
{
public:
    weak_hdts() = default;

    // Sorts every action list and the transition set. Throws hdts::error on
    // dangling references.
    weak_hdts( label_alphabet sigma, std::vector< std::string > states, std::vector< action > actions,
               std::vector< transition > transitions );

    [[nodiscard]] const label_alphabet& sigma() const { return _sigma; }

    [[nodiscard]] std::size_t state_count() const { return _states.size(); }
    [[nodiscard]] std::size_t action_count() const { return _actions.size(); }
    [[nodiscard]] std::size_t transition_count() const { return _transitions.size(); }

    [[nodiscard]] const std::vector< std::string >& state_names() const { return _states; }
    [[nodiscard]] const std::string& state_name( state_id s ) const { return _states[ s ]; }
    [[nodiscard]] const std::vector< action >& actions() const { return _actions; }
    [[nodiscard]] const action& action_at( action_id u ) const { return _actions[ u ]; }
    [[nodiscard]] const std::string& label_of( action_id u ) const { return _actions[ u ].label; }
    [[nodiscard]] const std::vector< transition >& transitions() const { return _transitions; }

    [[nodiscard]] bool has_transition( const transition& t ) const;

    // All states nu with (source, acts, nu) a transition; acts must be sorted.
    [[nodiscard]] std::vector< state_id > targets( state_id source, std::span< const action_id > acts ) const;

    [[nodiscard]] std::size_t max_arity() const;
    [[nodiscard]] std::size_t count_of_arity( std::size_t n ) const;

    [[nodiscard]] std::optional< state_id > find_state( const std::string& name ) const;
    [[nodiscard]] std::optional< action_id > find_action( const std::string& name ) const;

    // Labels actually carried by actions, sorted.
    [[nodiscard]] std::vector< std::string > used_labels() const;

    bool operator==( const weak_hdts& ) const = default;

private:
    label_alphabet _sigma;
    std::vector< std::string > _states;
    std::vector< action > _actions;
    std::vector< transition > _transitions;
};

using hdts_ptr = std::shared_ptr< const weak_hdts >;

template < typename... Args >
hdts_ptr make_hdts( Args&&... args )
{
    return std::make_shared< const weak_hdts >( std::forward< Args >( args )... );
}

// A map of weak HDTS: a state map and a label-preserving action map sending
// transitions to transitions.
struct hdts_map
{
    hdts_ptr domain;
    hdts_ptr codomain;
    std::vector< state_id > state_map;
    std::vector< action_id > action_map;

    [[nodiscard]] transition image( const transition& t ) const;
};

// Same domain/codomain objects (structurally) and same component maps.
bool same_map( const hdts_map& f, const hdts_map& g );

// Empty optional when f is a valid map, otherwise a description of the first
// violated condition.
std::optional< std::string > map_violation( const hdts_map& f );
inline bool is_valid_map( const hdts_map& f ) { return !map_violation( f ).has_value(); }

hdts_map identity_map( const hdts_ptr& x );

// g after f.
hdts_map compose( const hdts_map& g, const hdts_map& f );

std::string to_string( const weak_hdts& x, const transition& t );

} // namespace hdts
