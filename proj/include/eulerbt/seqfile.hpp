#pragma once

#include <istream>
#include <string>
#include <vector>

#include "eulerbt/rat.hpp"

namespace eulerbt {

// Sequence file format shared by the transform/euler/accelerate commands:
// one rational per line ("p/q" or integer), '#' starts a comment, blank
// lines are skipped.
std::vector<Rat> parse_sequence(std::istream& in);

std::vector<Rat> read_sequence_file(const std::string& path);

}  // namespace eulerbt
