#pragma once

#include <string>
#include <vector>

namespace triquad::cli {

/// Resolves the positional graph input convention: "-" reads standard
/// input, an existing file path reads that file, anything else is taken
/// as a literal. Returns the non-empty lines.
std::vector<std::string> read_input_lines(const std::string& input);

}  // namespace triquad::cli
