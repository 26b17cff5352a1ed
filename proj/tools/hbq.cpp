#include "cli.hpp"

int main(int argc, char** argv) { return hbq::cli::run_cli(argc, argv, std::cout, std::cerr); }
