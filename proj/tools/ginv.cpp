#include "ginv/engine.hpp"

int main(int argc, char** argv) { return ginv::run_cli(argc, argv); }
