#include "cli_app.hpp"

int main(int argc, char** argv) {
    return evacsim::cli::run_cli(argc, argv);
}
