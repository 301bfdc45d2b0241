#include "wres/cli/app.hpp"

int main(int argc, char** argv) { return wres::run_cli(argc, argv); }
