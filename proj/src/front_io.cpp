#include "hvlc/front_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "hvlc/error.hpp"

namespace hvlc {

Front read_front(std::istream& in) {
  std::vector<double> flat;
  std::size_t d = 0;
  std::size_t line_no = 0;
  std::string line;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    row.clear();
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
      if (p == end) break;
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != '\r')) {
        throw ParseError(line_no, "malformed number '" + std::string(p, std::find_if(p, end, [](char c) {
                                                                       return c == ' ' || c == '\t';
                                                                     })) + "'");
      }
      if (!std::isfinite(v) || v < 0.0) {
        throw InputError("line " + std::to_string(line_no) + ": coordinate must be finite and nonnegative");
      }
      row.push_back(v);
      p = next;
    }
    if (d == 0) d = row.size();
    if (row.size() != d) {
      throw ParseError(line_no, "expected " + std::to_string(d) + " values, got " + std::to_string(row.size()));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (d == 0) throw ParseError(line_no, "no data lines");
  return Front(d, std::move(flat));
}

Front read_front(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_front(in);
}

void write_front(const Front& front, std::ostream& out) {
  std::string buf;
  for (std::size_t i = 0; i < front.size(); ++i) {
    buf.clear();
    const auto b = front[i];
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) buf.push_back(' ');
      fmt::format_to(std::back_inserter(buf), "{:.17g}", b[k]);
    }
    buf.push_back('\n');
    out << buf;
  }
}

void write_front(const Front& front, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_front(front, out);
}

}  // namespace hvlc
