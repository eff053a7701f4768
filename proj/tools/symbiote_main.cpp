#include <string>
#include <vector>

#include "symbiote/cli.hpp"

int main(int argc, char** argv) {
  return symbiote::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
