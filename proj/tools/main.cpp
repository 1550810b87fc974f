#include "radsplit/cli.hpp"

int main(int argc, char** argv) { return radsplit::cli::main_entry(argc, argv); }
