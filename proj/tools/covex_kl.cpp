#include "covex/cli.hpp"

int main(int argc, char** argv) { return covex::cli::run(argc, argv); }
