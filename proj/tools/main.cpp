#include "monty/cli.hpp"

int main(int argc, char** argv) { return monty::run_cli(argc, argv); }
