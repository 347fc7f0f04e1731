#pragma once

#include <boost/pending/disjoint_sets.hpp>

#include <cstddef>
#include <vector>

namespace hdts::detail
{

class union_find
{
public:
    explicit union_find( std::size_t n ) : _sets( n ), _size( n ) {}

    void unite( std::size_t a, std::size_t b ) { _sets.union_set( a, b ); }
    std::size_t find( std::size_t a ) { return _sets.find_set( a ); }
    bool same( std::size_t a, std::size_t b ) { return find( a ) == find( b ); }

    // Class number of every element; classes are numbered in the order of
    // their smallest members.
    std::vector< int > classes( std::size_t* count = nullptr )
    {
        std::vector< int > of_root( _size, -1 );
        std::vector< int > out( _size );
        int next = 0;
        for ( std::size_t i = 0; i < _size; ++i )
        {
            auto r = find( i );
            if ( of_root[ r ] < 0 )
                of_root[ r ] = next++;
            out[ i ] = of_root[ r ];
        }
        if ( count )
            *count = static_cast< std::size_t >( next );
        return out;
    }

private:
    boost::disjoint_sets_with_storage<> _sets;
    std::size_t _size;
};

} // namespace hdts::detail
