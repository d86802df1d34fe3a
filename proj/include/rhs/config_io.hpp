#pragma once

#include "rhs/geometry.hpp"

#include <stdexcept>
#include <string>

namespace rhs {

/// Raised for malformed or incomplete config files; the message carries
/// the file, line and key involved.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Key-value board description. Lines look like `key = value`, `#` starts
/// a comment. Required keys: frequency_hz, rows, cols, spacing_x_m,
/// spacing_y_m, feeds. Optional with defaults: surface_index (1.6),
/// amp_on (1), amp_off (0), leakage_alpha (0). feeds is a list of [x, y]
/// pairs in meters, e.g. feeds = [[-0.0082, 0.0]].
RhsConfig load_config(const std::string& path);

RhsConfig parse_config(const std::string& text, const std::string& source_name);

} // namespace rhs
