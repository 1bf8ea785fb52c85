#include "frit/cli.hpp"

int main(int argc, char** argv) { return frit::run_cli(argc, argv); }
