#include "cli.hpp"

int main(int argc, char** argv) { return ujl::cli::run(argc, argv); }
