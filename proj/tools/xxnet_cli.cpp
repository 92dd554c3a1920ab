#include "xxnet/cli.hpp"

int main(int argc, char** argv) { return xxnet::cli::run(argc, argv); }
