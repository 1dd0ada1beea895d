#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fukflow::cli {

constexpr const char* kSchema = "fukaya-flow/1";

// args excludes the program name. Exit codes: 0 ok, 1 verification
// failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fukflow::cli
