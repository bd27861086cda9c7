#include "cli.hpp"

int main(int argc, char** argv) { return wvg::run_cli(argc, argv); }
