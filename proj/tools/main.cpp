#include "swarmlab/cli.hpp"

int main(int argc, char** argv) {
    return swarmlab::cli_main(argc, argv);
}
