#include <string>
#include <vector>

#include "widthforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return widthforge::cli::run(args);
}
