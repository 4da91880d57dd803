#include "ccpt/signal_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ccpt/error.hpp"
#include "ccpt/signalgen.hpp"

namespace ccpt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, const std::string& source, std::size_t line) {
  field = trim(field);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
    throw IoError(source + ":" + std::to_string(line) + ": not a number: '" +
                  std::string(field) + "'");
  }
  return value;
}

}  // namespace

ComplexSignal parse_signal_csv(std::istream& in, const std::string& source) {
  ComplexSignal x;
  std::size_t columns = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty() || row.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t comma; (comma = row.find(',', start)) != std::string_view::npos; start = comma + 1) {
      fields.push_back(row.substr(start, comma - start));
    }
    fields.push_back(row.substr(start));

    if (fields.size() > 2) {
      throw IoError(source + ":" + std::to_string(line_no) + ": expected 1 or 2 columns, got " +
                    std::to_string(fields.size()));
    }
    if (columns == 0) columns = fields.size();
    if (fields.size() != columns) {
      throw IoError(source + ":" + std::to_string(line_no) + ": ragged row, expected " +
                    std::to_string(columns) + " columns");
    }
    const double re = parse_field(fields[0], source, line_no);
    const double im = columns == 2 ? parse_field(fields[1], source, line_no) : 0.0;
    x.emplace_back(re, im);
  }
  if (in.bad()) throw IoError(source + ": read failure");
  if (x.empty()) throw IoError(source + ": no samples");
  return x;
}

ComplexSignal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_signal_csv(in, path.string());
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_signal_csv(std::ostream& out, const ComplexSignal& x) {
  const bool real = is_real(x);
  for (const Complex& v : x) {
    out << format_double(v.real());
    if (!real) out << ',' << format_double(v.imag());
    out << '\n';
  }
}

void write_signal_csv(const std::filesystem::path& path, const ComplexSignal& x) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_signal_csv(out, x);
  if (!out) throw IoError("write failed for " + path.string());
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m, const std::vector<std::string>& header) {
  if (!header.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? "," : "") << format_double(m(r, c));
    out << '\n';
  }
}

}  // namespace ccpt
