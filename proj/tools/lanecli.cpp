#include <lanekit/cli.hpp>

int main(int argc, char** argv) { return lanekit::cli_main(argc, argv); }
