#include "mem/cli.hpp"

int main(int argc, char** argv) { return mem::cli::run_main(argc, argv); }
