#include "qheun_cli/runner.hpp"

int main(int argc, char** argv) { return qheun::cli::cli_main(argc, argv); }
