#include "natgrad/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace natgrad {

void write_matrix_text(std::ostream& out, const Matrix& m) {
  require(m.rows() == m.cols(), "write_matrix_text: matrix must be square");
  out << m.rows() << "\n";
  char buf[32];
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
      out << buf << (j + 1 == m.cols() ? "" : " ");
    }
    out << "\n";
  }
}

void write_matrix_text(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  write_matrix_text(out, m);
  if (!out) throw ParseError(path + ": write failed");
}

Matrix read_matrix_text(std::istream& in, const std::string& name) {
  Index d = 0;
  if (!(in >> d) || d < 1)
    throw ParseError(name + ": bad or missing matrix dimension");
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      if (!(in >> m(i, j)))
        throw ParseError(name + ": truncated at row " + std::to_string(i + 1));
  return m;
}

Matrix read_matrix_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return read_matrix_text(in, path);
}

}  // namespace natgrad
