#include "vpv/cli.hpp"

int main(int argc, char** argv) { return vpv::cli::run(argc, argv); }
