#pragma once

#include <iosfwd>
#include <string>

#include "littlewood/integer_set.hpp"

namespace littlewood::setcore {

/// Parses either format: plain text (one base-10 integer per line, blank
/// lines and '#' comments ignored) or a JSON array of integers. The format
/// is auto-detected from the first non-whitespace byte ('[' means JSON).
IntegerSet read_set(std::istream& in);

/// read_set() on a file path, or on stdin when path is "-".
IntegerSet read_set_path(const std::string& path);

/// Writes the plain one-integer-per-line text format.
void write_set(std::ostream& out, const IntegerSet& A);

}  // namespace littlewood::setcore
