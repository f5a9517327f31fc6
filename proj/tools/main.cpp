#include "skewent/cli.hpp"

int main(int argc, char** argv) { return skewent::cli_main(argc, argv); }
