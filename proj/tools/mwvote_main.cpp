#include <iostream>

#include "mwvote/cli.hpp"

int main(int argc, char** argv) { return mwvote::cli::run(argc, argv, std::cout, std::cerr); }
