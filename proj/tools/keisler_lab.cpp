#include "klab/cli/app.hpp"

int main(int argc, char** argv) { return klab::cli::run(argc, argv); }
