#ifndef TORUSCONV_TOOLS_CLI_HPP
#define TORUSCONV_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace torusconv::cli
{

/// Exit codes: 0 success, 1 a verify suite failed, 2 usage or range error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace torusconv::cli

#endif
