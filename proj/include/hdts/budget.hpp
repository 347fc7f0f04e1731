#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdts
{

// Hard caps for the exhaustive procedures. Exceeding one is an error, never a
// silent truncation.
struct budget
{
    std::size_t max_derived_transitions = 500'000;
    std::size_t max_search_nodes = 20'000'000;
    std::size_t max_family_members = 2'000;
};

inline constexpr int default_dim_bound = 4;

class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class budget_exceeded : public error
{
public:
    budget_exceeded( const std::string& what_cap, std::size_t limit )
            : error( "budget exceeded: " + what_cap + " (limit " + std::to_string( limit ) + ")" ),
              _cap{ what_cap }, _limit{ limit }
    {
    }

    [[nodiscard]] const std::string& cap() const { return _cap; }
    [[nodiscard]] std::size_t limit() const { return _limit; }

private:
    std::string _cap;
    std::size_t _limit;
};

// Counts search nodes against budget::max_search_nodes.
class search_counter
{
public:
    explicit search_counter( const budget& b, const char* what = "search nodes" )
            : _limit{ b.max_search_nodes }, _what{ what }
    {
    }

    void tick()
    {
        if ( ++_count > _limit )
            throw budget_exceeded( _what, _limit );
    }

private:
    std::size_t _count = 0;
    std::size_t _limit;
    const char* _what;
};

} // namespace hdts
