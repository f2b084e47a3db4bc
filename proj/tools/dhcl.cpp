#include "dhcl/cli.hpp"

int main(int argc, char** argv) { return dhcl::cli::run(argc, argv); }
