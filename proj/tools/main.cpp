#include <string>
#include <vector>

#include "bwcv/cli.hpp"

int main(int argc, char** argv) {
  return bwcv::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
