#include "mincorner/cli.hpp"

#include <iostream>

namespace mincorner {

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  (void)args;
  (void)in;
  (void)out;
  err << "not yet implemented\n";
  return kExitUsage;
}

}  // namespace mincorner
