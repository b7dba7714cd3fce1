#include "ospkw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const auto res = ospkw::run_command_line(argc, argv);
  std::cout << res.payload;
  return res.exit_code;
}
