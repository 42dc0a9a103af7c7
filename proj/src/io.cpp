#include "speccert/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

namespace speccert {

ParseError::ParseError(const std::string& source, int line, int column, const std::string& message)
    : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++line_no_;
    return true;
  }
  int line_no() const { return line_no_; }

  [[noreturn]] void fail(int column, const std::string& message) const {
    throw ParseError(source_, line_no_, column, message);
  }

  long long parse_int(const Token& t, const char* what) const {
    long long v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail(t.column, std::string("expected integer ") + what);
    return v;
  }

  double parse_double(const Token& t, const char* what) const {
    double v = 0.0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) fail(t.column, std::string("expected number ") + what);
    return v;
  }

  // Only blank lines may follow the last record.
  void expect_end() {
    std::string line;
    while (next(line)) {
      const auto toks = tokenize(line);
      if (!toks.empty()) fail(toks.front().column, "unexpected content after the last record");
    }
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

std::string format_roundtrip(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_12g(double x) {
  if (!std::isfinite(x)) return format_roundtrip(x);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return format_roundtrip(std::strtod(buf, nullptr));
}

WeightedGraph parse_edge_list(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::string line;
  if (!r.next(line)) throw ParseError(source, 1, 1, "missing header line 'n m'");
  auto head = tokenize(line);
  if (head.size() != 2) r.fail(head.empty() ? 1 : head.front().column, "header must be 'n m'");
  const long long n = r.parse_int(head[0], "vertex count n");
  const long long m = r.parse_int(head[1], "edge count m");
  if (n < 1) r.fail(head[0].column, "vertex count must be >= 1");
  if (m < 0) r.fail(head[1].column, "edge count must be >= 0");
  if (m > n * (n - 1) / 2) r.fail(head[1].column, "more edges than vertex pairs");

  Matrix w = Matrix::Zero(n, n);
  std::set<std::pair<long long, long long>> seen;
  for (long long e = 0; e < m; ++e) {
    if (!r.next(line)) {
      throw ParseError(source, r.line_no() + 1, 1,
                       "expected " + std::to_string(m) + " edge lines, found " + std::to_string(e));
    }
    auto toks = tokenize(line);
    if (toks.size() != 3) r.fail(toks.empty() ? 1 : toks.front().column, "edge line must be 'i j w'");
    const long long i = r.parse_int(toks[0], "vertex i");
    const long long j = r.parse_int(toks[1], "vertex j");
    const double x = r.parse_double(toks[2], "weight w");
    if (i < 0 || i >= n) r.fail(toks[0].column, "vertex i out of range [0,n)");
    if (j < 0 || j >= n) r.fail(toks[1].column, "vertex j out of range [0,n)");
    if (!(i < j)) r.fail(toks[1].column, "edge must satisfy i < j");
    if (!(x > 0.0) || !std::isfinite(x)) r.fail(toks[2].column, "weight must be finite and > 0");
    if (!seen.emplace(i, j).second) r.fail(toks[0].column, "duplicate edge");
    w(i, j) = w(j, i) = x;
  }
  r.expect_end();
  return WeightedGraph(std::move(w));
}

WeightedGraph read_edge_list(const std::string& path) {
  auto in = open_in(path);
  return parse_edge_list(in, path);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  const int n = g.size();
  out << n << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.weight(i, j) > 0.0) out << i << ' ' << j << ' ' << format_roundtrip(g.weight(i, j)) << '\n';
}

void write_edge_list(const std::string& path, const WeightedGraph& g) {
  auto out = open_out(path);
  write_edge_list(out, g);
  if (!out) throw InputError("failed writing '" + path + "'");
}

Partition parse_partition(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  std::vector<int> labels;
  std::string line;
  bool blank_seen = false;
  int blank_line = 0;
  while (r.next(line)) {
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (!blank_seen) blank_line = r.line_no();
      blank_seen = true;
      continue;
    }
    if (blank_seen) throw ParseError(source, blank_line, 1, "blank line inside partition");
    if (toks.size() != 1) r.fail(toks[1].column, "partition line must hold a single label");
    const long long v = r.parse_int(toks[0], "label");
    if (v < 0 || v > 1'000'000'000) r.fail(toks[0].column, "label must be a nonnegative integer");
    labels.push_back(static_cast<int>(v));
  }
  if (labels.empty()) throw ParseError(source, 1, 1, "partition file is empty");
  return Partition::from_labels(std::move(labels));
}

Partition read_partition(const std::string& path) {
  auto in = open_in(path);
  return parse_partition(in, path);
}

void write_partition(std::ostream& out, const Partition& p) {
  for (int l : p.labels()) out << l << '\n';
}

void write_partition(const std::string& path, const Partition& p) {
  auto out = open_out(path);
  write_partition(out, p);
  if (!out) throw InputError("failed writing '" + path + "'");
}

void write_matrix_tsv(std::ostream& out, const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << '\t';
      out << format_12g(m(i, j));
    }
    out << '\n';
  }
}

}  // namespace speccert
