#ifndef DORMANT_CLI_HPP
#define DORMANT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace dormant {

/*
 * Command-line front end (verbs: degree, polynomial, verlinde, vi,
 * bundle-count, quot-degree, validate).  args excludes the program name.
 * Returns the process exit status: 0 success, 1 usage error or validation
 * failure, 2 hypothesis violation, 3 numeric instability.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dormant

#endif
