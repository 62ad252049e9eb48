#include "dcla/cli.hpp"

int main(int argc, char** argv) { return dcla::cli::main(argc, argv); }
