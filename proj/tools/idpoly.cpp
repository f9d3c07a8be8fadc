#include <idpoly/cli.hpp>

int main(int argc, char** argv) { return idpoly::cli::run(argc, argv); }
