#include "hdts/cli/command.hpp"

#include <iostream>

int main( int argc, char** argv )
{
    return hdts::cli::main_entry( argc, argv, std::cout, std::cerr );
}
