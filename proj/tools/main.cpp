#include <iostream>

#include "metricvote/cli.hpp"

int main(int argc, char** argv) { return metricvote::run_cli(argc, argv, std::cout, std::cerr); }
