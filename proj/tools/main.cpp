#include "gorenstein/cli.hpp"

int main(int argc, char** argv) { return gor::cli::run(argc, argv); }
