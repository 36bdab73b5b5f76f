#include "uncertts/cli.hpp"

int main(int argc, char** argv) { return uncertts::cli_main(argc, argv); }
