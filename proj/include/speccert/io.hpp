#pragma once

#include <iosfwd>
#include <string>

#include "speccert/graph.hpp"

namespace speccert {

// Malformed file content; what() carries "source:line:column: message".
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Edge list: first line "n m", then m lines "i j w" with 0 <= i < j < n and
// w > 0, whitespace separated. Duplicate (i, j) pairs are rejected.
WeightedGraph parse_edge_list(std::istream& in, const std::string& source = "<edge list>");
WeightedGraph read_edge_list(const std::string& path);
// Edges in row-major (i, j) order; weights in shortest round-trip form.
void write_edge_list(std::ostream& out, const WeightedGraph& g);
void write_edge_list(const std::string& path, const WeightedGraph& g);

// Partition: one integer label per line, line i is vertex i. k = max label + 1.
Partition parse_partition(std::istream& in, const std::string& source = "<partition>");
Partition read_partition(const std::string& path);
void write_partition(std::ostream& out, const Partition& p);
void write_partition(const std::string& path, const Partition& p);

// Row i of the matrix as tab-separated values (12 significant digits).
void write_matrix_tsv(std::ostream& out, const Matrix& m);

// Shortest decimal string that parses back to exactly x.
std::string format_roundtrip(double x);
// Shortest decimal string that parses back to x rounded to 12 significant digits.
std::string format_12g(double x);

}  // namespace speccert
