#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jfenum {

// Runs one jfenum invocation; args exclude the program name. Returns the
// process exit code: 0 iff every requested verdict is MATCH/EQUAL, 1 on a
// failed verdict, 2 on usage errors, 3 on computation errors (reported as
// JSON on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jfenum
