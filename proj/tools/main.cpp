#include "sktlab/cli.hpp"

int main(int argc, char** argv) { return sktlab::cli_main(argc, argv); }
