#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsynth::cli {

// Exit codes: 0 when the decision is yes, 1 when it is no, 2 on usage,
// I/O or validation errors.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kError = 2;

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsynth::cli
