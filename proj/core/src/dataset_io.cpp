#include "natgrad/dataset_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace natgrad {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

[[noreturn]] void fail(const std::string& path, int line_no,
                       const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

void save_dataset_csv(const std::string& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  const Index d = data.features.cols();
  for (Index j = 0; j < d; ++j) out << "f" << (j + 1) << ",";
  out << "label\n";
  for (Index i = 0; i < data.size(); ++i) {
    for (Index j = 0; j < d; ++j)
      out << format_double(data.features(i, j)) << ",";
    out << data.labels[static_cast<std::size_t>(i)] << "\n";
  }
  if (!out) throw ParseError(path + ": write failed");
}

Dataset load_dataset_csv(const std::string& path, int class_count) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");

  std::string line;
  if (!std::getline(in, line)) fail(path, 1, "missing header");
  const auto header = split_csv_line(line);
  require(class_count >= 2, "load_dataset_csv: class_count must be >= 2");
  if (header.size() < 2 || header.back() != "label")
    fail(path, 1, "header must be f1,...,fd,label");
  const int d = static_cast<int>(header.size()) - 1;

  std::vector<Vector> rows;
  std::vector<int> labels;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (static_cast<int>(fields.size()) != d + 1)
      fail(path, line_no, "expected " + std::to_string(d + 1) + " fields");
    Vector x(d);
    for (int j = 0; j < d; ++j) {
      try {
        x(j) = std::stod(fields[static_cast<std::size_t>(j)]);
      } catch (const std::exception&) {
        fail(path, line_no, "bad feature value '" +
                                fields[static_cast<std::size_t>(j)] + "'");
      }
    }
    if (!all_finite(x)) fail(path, line_no, "non-finite feature");
    int label = 0;
    try {
      label = std::stoi(fields.back());
    } catch (const std::exception&) {
      fail(path, line_no, "bad label '" + fields.back() + "'");
    }
    if (label < 0 || label >= class_count)
      fail(path, line_no,
           "label " + std::to_string(label) + " outside [0, " +
               std::to_string(class_count) + ")");
    rows.push_back(std::move(x));
    labels.push_back(label);
  }
  if (rows.empty()) fail(path, line_no, "dataset has no rows");

  Dataset data;
  data.features.resize(static_cast<Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    data.features.row(static_cast<Index>(i)) = rows[i].transpose();
  data.labels = std::move(labels);
  return data;
}

}  // namespace natgrad
