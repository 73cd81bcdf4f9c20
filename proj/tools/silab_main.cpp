#include "silab/cli.hpp"

int main(int argc, char** argv) { return silab::run_cli(argc, argv); }
