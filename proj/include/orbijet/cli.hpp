#ifndef ORBIJET_CLI_HPP
#define ORBIJET_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orbijet
{

// args[0] is the command name. Returns 0 when everything passed, 1 when a
// check failed and 2 on bad input.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace orbijet

#endif
