#include "egf/cli/commands.hpp"

int main(int argc, char** argv) { return egf::cli::run(argc, argv); }
