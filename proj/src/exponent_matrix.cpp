#include "gldpc/exponent_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gldpc {

ExponentMatrix::ExponentMatrix(std::vector<std::vector<int>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty() || entries_[0].empty())
    throw std::invalid_argument("exponent matrix: empty");
  for (const auto& row : entries_) {
    if (row.size() != entries_[0].size())
      throw std::invalid_argument("exponent matrix: ragged rows");
    for (int v : row)
      if (v < -1) throw std::invalid_argument("exponent matrix: entry below -1");
  }
}

std::vector<int> ExponentMatrix::row_support(int r) const {
  std::vector<int> s;
  for (int c = 0; c < cols(); ++c)
    if (entries_[r][c] >= 0) s.push_back(c);
  return s;
}

void ExponentMatrix::validate(int zc, bool strict) const {
  if (zc < 1) throw std::invalid_argument("lifting size must be >= 1");
  for (int r = 0; r < rows(); ++r) {
    for (int c = 0; c < cols(); ++c)
      if (entries_[r][c] >= zc)
        throw std::invalid_argument("exponent " + std::to_string(entries_[r][c]) +
                                    " at row " + std::to_string(r + 1) +
                                    " requires lifting size > " +
                                    std::to_string(entries_[r][c]));
    if (strict && row_degree(r) < 2)
      throw std::invalid_argument("exponent matrix row " + std::to_string(r + 1) +
                                  " has fewer than 2 nonnegative entries");
  }
}

int row_overlap(const ExponentMatrix& m, int i, int j) {
  if (i == j) throw std::invalid_argument("row_overlap: identical row index");
  int count = 0;
  for (int c = 0; c < m.cols(); ++c)
    if (m.at(i, c) >= 0 && m.at(j, c) >= 0) ++count;
  return count;
}

ExponentMatrix parse_exponent_matrix(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<int> row;
    int v;
    while (ls >> v) row.push_back(v);
    if (!ls.eof()) throw std::invalid_argument("exponent matrix: non-integer token");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return ExponentMatrix(std::move(rows));
}

ExponentMatrix load_exponent_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open exponent matrix file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_exponent_matrix(ss.str());
}

}  // namespace gldpc
