#include "qconc/cli.hpp"

int main(int argc, char** argv) { return qconc::cli::run(argc, argv); }
