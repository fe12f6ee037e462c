#include "klr/cli.hpp"

int main(int argc, char** argv) { return klr::cli::cli_main(argc, argv); }
