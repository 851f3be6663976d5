#pragma once

#include <string>

#include "mem/expfam.hpp"

namespace mem {

// Plain-text exchange formats: matrices are whitespace-separated with one row
// per line; vectors carry one value per line.
Mat read_matrix(const std::string& path);
Vec read_vector(const std::string& path);
void write_vector(const std::string& path, const Vec& v);

}  // namespace mem
