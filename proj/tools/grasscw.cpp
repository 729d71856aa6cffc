#include <grasscw/cli.hpp>

int main(int argc, char** argv) { return grasscw::cli::run(argc, argv); }
