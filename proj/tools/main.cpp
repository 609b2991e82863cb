#include "gaindoublet/cli.hpp"

int main(int argc, char** argv) { return gaindoublet::run_cli(argc, argv); }
