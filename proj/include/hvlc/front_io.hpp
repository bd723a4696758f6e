#pragma once

#include <filesystem>
#include <iosfwd>

#include "hvlc/geometry.hpp"

namespace hvlc {

/// Front files hold one box per line as whitespace-separated decimals.
/// Lines starting with '#' are comments and blank lines are skipped; the
/// dimension is taken from the first data line.
Front read_front(std::istream& in);
Front read_front(const std::filesystem::path& path);

/// Writes with 17 significant digits, so read_front(write_front(f)) == f.
void write_front(const Front& front, std::ostream& out);
void write_front(const Front& front, const std::filesystem::path& path);

}  // namespace hvlc
