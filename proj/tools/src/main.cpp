#include <string>
#include <vector>

#include "splitflow/tools/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return splitflow::tools::run_cli(args);
}
