#include "larag/cli.hpp"

int main(int argc, char** argv) { return larag::cli::run(argc, argv); }
