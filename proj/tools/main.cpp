#include <iostream>
#include <vector>

#include "tldkit/cli.hpp"

int main(int argc, char** argv) {
  return tldkit::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
