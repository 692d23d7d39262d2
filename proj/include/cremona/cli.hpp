#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cremona::cli {

// exit codes
constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

// args exclude the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
