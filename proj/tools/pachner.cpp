#include "cli_commands.hpp"

int main(int argc, char** argv) { return pachner::cli::run(argc, argv); }
