#pragma once

#include "natgrad/model.hpp"

#include <string>

namespace natgrad {

/// CSV with header "f1,...,fd,label"; one row per observation, features
/// printed with full round-trip precision.
void save_dataset_csv(const std::string& path, const Dataset& data);

/// Loads the CSV format above. Labels are validated against
/// [0, class_count); violations raise ParseError naming file and line.
Dataset load_dataset_csv(const std::string& path, int class_count);

}  // namespace natgrad
