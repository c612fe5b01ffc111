#include "monoword/cli/commands.hpp"

int main(int argc, char** argv) { return monoword::cli::run(argc, argv); }
