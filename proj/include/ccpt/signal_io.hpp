#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ccpt/linalg.hpp"

namespace ccpt {

// One sample per row: a single column for real signals, "re,im" for
// complex ones. Blank lines and lines starting with '#' are skipped.
// Throws IoError naming the offending line on malformed or ragged input.
ComplexSignal parse_signal_csv(std::istream& in, const std::string& source = "<stream>");
ComplexSignal read_signal_csv(const std::filesystem::path& path);

// Writes one column when every imaginary part is zero, two otherwise;
// 17 significant digits.
void write_signal_csv(std::ostream& out, const ComplexSignal& x);
void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& x);

// Row-major dump, 17 significant digits, optional header row.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header = {});

std::string format_double(double v);

}  // namespace ccpt
