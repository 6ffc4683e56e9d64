#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  return rlpc::cli::main_with_args(std::vector<std::string>(argv + 1, argv + argc));
}
