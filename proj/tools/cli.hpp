// The sncat command line tool.

#ifndef SNCAT_TOOLS_CLI_HPP_
#define SNCAT_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace sncat::cli {

  inline constexpr int kExitOk       = 0;
  inline constexpr int kExitFailed   = 1;
  inline constexpr int kExitUsage    = 2;

  //! Runs the tool on \p args (without the program name). Results go to
  //! \p out unless --out is given, diagnostics to \p err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace sncat::cli

#endif  // SNCAT_TOOLS_CLI_HPP_
