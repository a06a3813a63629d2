#include "splitcheck/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "splitcheck/errors.hpp"

namespace splitcheck::linalg {

namespace {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InvalidArgument("matrix: bad number '" + text + "'");
  return value;
}

}  // namespace

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("write_matrix: matrix is not square");
  os << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
    }
    os << '\n';
  }
}

ComplexMatrix read_matrix(std::istream& is) {
  long long n = 0;
  if (!(is >> n) || n < 1) throw InvalidArgument("read_matrix: missing or invalid dimension line");
  ComplexMatrix m(n, n);
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      std::string pair;
      if (!(is >> pair)) throw InvalidArgument("read_matrix: truncated input");
      const auto comma = pair.find(',');
      if (comma == std::string::npos) throw InvalidArgument("read_matrix: expected re,im");
      m(i, j) = Complex(parse_double(pair.substr(0, comma)), parse_double(pair.substr(comma + 1)));
    }
  }
  if (!m.allFinite()) throw InvalidArgument("read_matrix: non-finite entry");
  return m;
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream os(path);
  if (!os) throw InvalidArgument("save_matrix: cannot open " + path.string());
  write_matrix(os, m);
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("load_matrix: cannot open " + path.string());
  return read_matrix(is);
}

}  // namespace splitcheck::linalg
