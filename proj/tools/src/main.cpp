#include "kplex/cli.hpp"

int main(int argc, char** argv) { return kplex::cli::main(argc, argv); }
