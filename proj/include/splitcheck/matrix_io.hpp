#pragma once

#include <filesystem>
#include <iosfwd>

#include "splitcheck/matrix_core.hpp"

namespace splitcheck::linalg {

// Plain-text matrix format: first line "n", then n lines each holding n
// whitespace-separated "re,im" pairs. Values are written with 17 significant
// digits so reading back reproduces the matrix bit for bit.
void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix read_matrix(std::istream& is);

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::filesystem::path& path);

}  // namespace splitcheck::linalg
