#pragma once

// Grid arguments: "a,b,c" or "a:b:step" (inclusive of b when it lands on the
// lattice). Grids must be strictly increasing.

#include <stdexcept>
#include <string>
#include <vector>

namespace monoword::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_real_grid(const std::string& text);
std::vector<int> parse_int_grid(const std::string& text);

}  // namespace monoword::cli
