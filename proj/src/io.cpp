#include "mem/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "mem/errors.hpp"

namespace mem {

Mat read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("io: cannot open '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    double v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw ConfigError("io: malformed number in '" + path + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("io: empty matrix in '" + path + "'");
  const size_t n = rows.front().size();
  Mat m(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) {
      throw ConfigError("io: ragged rows in '" + path + "'");
    }
    for (size_t j = 0; j < n; ++j) m(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
  }
  return m;
}

Vec read_vector(const std::string& path) {
  Mat m = read_matrix(path);
  if (m.cols() != 1) {
    throw ConfigError("io: '" + path + "' is not a one-value-per-line vector");
  }
  return m.col(0);
}

void write_vector(const std::string& path, const Vec& v) {
  std::ofstream out(path);
  if (!out) throw ConfigError("io: cannot write '" + path + "'");
  out.precision(17);
  for (Eigen::Index i = 0; i < v.size(); ++i) out << v(i) << '\n';
  if (!out) throw ConfigError("io: write failed for '" + path + "'");
}

}  // namespace mem
