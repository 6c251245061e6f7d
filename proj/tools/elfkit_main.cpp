#include "elfkit/run_commands.hpp"

int main(int argc, char** argv) { return elfkit::cli_main(argc, argv); }
