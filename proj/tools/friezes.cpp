#include "frz/cli.hpp"

int main(int argc, char** argv) { return frz::cli_main(argc, argv); }
