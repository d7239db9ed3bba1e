#include "axstring/cli.hpp"

int main(int argc, char** argv) { return axstring::cli::run(argc, argv); }
