#include <elastic_landau/cli.hpp>

int main(int argc, char** argv) { return elastic_landau::cli::run(argc, argv); }
