#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idemfact::cli {

  enum ExitCode : int {
    success         = 0,
    malformed_input = 2,
    not_singular    = 3,
    check_failed    = 4,
    indeterminate   = 5,
  };

  //! Runs the command line `args` (args[0] is the program name). `in` is
  //! read when a certificate is given as "-".
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace idemfact::cli
