#pragma once

#include <filesystem>
#include <iosfwd>

#include "splitcheck/splitting.hpp"

namespace splitcheck::splitting {

// Scheme file grammar (one directive per line, '#' starts a comment):
//
//   name <label>
//   canonical <true|false>
//   <ref> <coefficient>        repeated, in product order (leftmost first)
//
// "name" and "canonical" are reserved and cannot be used as references.
SplittingScheme read_scheme(std::istream& is);
void write_scheme(std::ostream& os, const SplittingScheme& scheme);

SplittingScheme load_scheme(const std::filesystem::path& path);

}  // namespace splitcheck::splitting
