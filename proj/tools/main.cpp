#include "cli.hpp"

int main(int argc, char** argv) { return dworkhg::cli::main_entry(argc, argv); }
