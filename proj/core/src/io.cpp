#include "exoflr/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "exoflr/errors.hpp"

namespace exoflr {

namespace {

[[noreturn]] void parse_fail(const std::string& path, std::size_t line, const std::string& what) {
  fail(errc::ParseError, path + ":" + std::to_string(line) + ": " + what);
}

std::vector<double> split_doubles(const std::string& line, const std::string& path,
                                  std::size_t lineno) {
  std::vector<double> out;
  const char* ptr = line.data();
  const char* end = line.data() + line.size();
  while (ptr != end) {
    double v = 0.0;
    const auto [next, ec] = std::from_chars(ptr, end, v);
    if (ec != std::errc{}) parse_fail(path, lineno, "expected a number");
    out.push_back(v);
    ptr = next;
    if (ptr != end) {
      if (*ptr != ',') parse_fail(path, lineno, "expected ',' between values");
      ++ptr;
      if (ptr == end) parse_fail(path, lineno, "trailing comma");
    }
  }
  if (out.empty()) parse_fail(path, lineno, "empty row");
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Dataset read_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::IoError, "cannot open '" + path + "' for reading");

  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!trim(line).empty()) return true;
    }
    return false;
  };

  if (!next_line()) fail(errc::ParseError, path + ": empty file");
  if (trim(line) != "p,n") parse_fail(path, lineno, "expected header 'p,n'");
  if (!next_line()) parse_fail(path, lineno, "missing 'p,n' value line");
  const auto shape = split_doubles(line, path, lineno);
  if (shape.size() != 2) parse_fail(path, lineno, "expected exactly two values p,n");
  const int p = static_cast<int>(shape[0]);
  const long n = static_cast<long>(shape[1]);
  if (p < 1 || static_cast<double>(p) != shape[0]) parse_fail(path, lineno, "invalid grid order p");
  if (n < 2 || static_cast<double>(n) != shape[1]) parse_fail(path, lineno, "invalid sample count n");

  Dataset data;
  auto read_curves = [&](std::vector<SampledCurve>& dst, const char* label) {
    for (long i = 0; i < n; ++i) {
      if (!next_line()) parse_fail(path, lineno, std::string("missing ") + label + " row");
      auto values = split_doubles(line, path, lineno);
      if (values.size() != static_cast<std::size_t>(p) + 1) {
        parse_fail(path, lineno,
                   std::string(label) + " row has " + std::to_string(values.size()) +
                       " values, expected " + std::to_string(p + 1));
      }
      dst.push_back(SampledCurve{std::move(values)});
    }
  };
  read_curves(data.X, "X");
  read_curves(data.W, "W");

  if (!next_line()) parse_fail(path, lineno, "missing Y row");
  data.Y = split_doubles(line, path, lineno);
  if (data.Y.size() != static_cast<std::size_t>(n)) {
    parse_fail(path, lineno, "Y row has " + std::to_string(data.Y.size()) + " values, expected " +
                                 std::to_string(n));
  }
  if (next_line()) parse_fail(path, lineno, "unexpected trailing content");
  return data;
}

void write_dataset(const Dataset& data, const std::string& path) {
  validate(data);
  std::ofstream out(path);
  if (!out) fail(errc::IoError, "cannot open '" + path + "' for writing");

  char buf[40];
  auto put_row = [&](const std::vector<double>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j]);
      if (j) out << ',';
      out << buf;
    }
    out << '\n';
  };

  out << "p,n\n" << data.p() << ',' << data.n() << '\n';
  for (const auto& x : data.X) put_row(x.values);
  for (const auto& w : data.W) put_row(w.values);
  put_row(data.Y);
  out.flush();
  if (!out) fail(errc::IoError, "failed writing '" + path + "'");
}

std::vector<SweepCell> parse_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::IoError, "cannot open '" + path + "' for reading");

  SweepCell defaults;
  std::vector<SweepCell> cells;
  bool in_cell = false;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (auto hash = s.find('#'); hash != std::string::npos) s = trim(s.substr(0, hash));
    if (s.empty()) continue;

    if (s == "[cell]") {
      cells.push_back(defaults);
      in_cell = true;
      continue;
    }
    if (s.front() == '[') parse_fail(path, lineno, "unknown section '" + s + "'");

    const auto eq = s.find('=');
    if (eq == std::string::npos) parse_fail(path, lineno, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) parse_fail(path, lineno, "expected 'key = value'");

    SweepCell& cell = in_cell ? cells.back() : defaults;
    auto as_double = [&]() {
      try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        parse_fail(path, lineno, "invalid number '" + value + "'");
      }
    };
    auto as_long = [&]() {
      try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
      } catch (const std::exception&) {
        parse_fail(path, lineno, "invalid integer '" + value + "'");
      }
    };

    if (key == "beta" || key == "beta_id") {
      cell.dgp.beta_id = static_cast<int>(as_long());
    } else if (key == "n") {
      cell.dgp.n = static_cast<std::size_t>(as_long());
    } else if (key == "p") {
      cell.dgp.p = static_cast<int>(as_long());
    } else if (key == "rho") {
      cell.dgp.rho = as_double();
    } else if (key == "nu_instr") {
      cell.dgp.nu_instr = as_double();
    } else if (key == "sigma") {
      cell.dgp.sigma = as_double();
    } else if (key == "h") {
      cell.dgp.h = as_double();
    } else if (key == "alpha") {
      cell.alpha = as_double();
    } else if (key == "nu_sobolev" || key == "nu") {
      cell.nu_sobolev = as_double();
    } else if (key == "gamma") {
      cell.gamma = as_double();
    } else if (key == "test") {
      if (value == "asymptotic") {
        cell.test.kind = TestSpec::Kind::Asymptotic;
      } else if (value == "bootstrap") {
        cell.test.kind = TestSpec::Kind::Bootstrap;
      } else {
        parse_fail(path, lineno, "test must be 'asymptotic' or 'bootstrap'");
      }
    } else if (key == "scheme") {
      try {
        cell.test.scheme = scheme_from_string(value);
      } catch (const Error&) {
        parse_fail(path, lineno, "unknown scheme '" + value + "'");
      }
    } else if (key == "B") {
      cell.test.B = static_cast<int>(as_long());
    } else if (key == "reps") {
      cell.reps = static_cast<int>(as_long());
    } else if (key == "seed") {
      cell.seed = static_cast<std::uint64_t>(as_long());
    } else {
      parse_fail(path, lineno, "unknown key '" + key + "'");
    }
  }

  if (cells.empty()) fail(errc::ParseError, path + ": no [cell] blocks");
  return cells;
}

}  // namespace exoflr
