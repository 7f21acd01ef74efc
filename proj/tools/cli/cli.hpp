#pragma once

#include <iosfwd>

namespace hitkit::cli {

inline constexpr int kAccept = 0;
inline constexpr int kReject = 1;
inline constexpr int kUsage = 2;

// Entry point of the hitkit tool. `-` in a file slot means in / out.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hitkit::cli
