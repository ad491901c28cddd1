#include "gbforge/cli.hpp"

int main(int argc, char** argv) {
    return gbforge::cli::run(argc, argv);
}
