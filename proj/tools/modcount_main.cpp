#include "modcount/cli.hpp"

int main(int argc, char** argv) { return modcount::cli_main(argc, argv); }
