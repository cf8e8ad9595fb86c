#pragma once

#include "natgrad/types.hpp"

#include <iosfwd>
#include <string>

namespace natgrad {

/// Row-major text format for square matrices: first line the dimension D,
/// then D lines of D space-separated entries at round-trip precision.
void write_matrix_text(std::ostream& out, const Matrix& m);
void write_matrix_text(const std::string& path, const Matrix& m);

Matrix read_matrix_text(std::istream& in, const std::string& name = "<stream>");
Matrix read_matrix_text(const std::string& path);

}  // namespace natgrad
