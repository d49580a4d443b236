#include "xns/cli.hpp"

int main(int argc, char** argv) { return xns::cli_main(argc, argv); }
