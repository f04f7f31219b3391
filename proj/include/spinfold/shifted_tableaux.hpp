#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinfold/partitions.hpp"

namespace spinfold {

// Letter of the marked alphabet 1' < 1 < 2' < 2 < ...
struct Letter {
  int value = 1;
  bool marked = false;

  // Rank respecting the alphabet order above.
  int rank() const { return 2 * value + (marked ? 0 : 1); }
  static Letter from_rank(int r) { return Letter{r / 2, (r & 1) == 0}; }

  std::string to_string() const { return std::to_string(value) + (marked ? "'" : ""); }

  friend bool operator==(const Letter& a, const Letter& b) { return a.rank() == b.rank(); }
  friend bool operator<(const Letter& a, const Letter& b) { return a.rank() < b.rank(); }
  friend bool operator<=(const Letter& a, const Letter& b) { return a.rank() <= b.rank(); }
};

struct Cell {
  int row = 0; // 1-based
  int col = 0;

  friend bool operator==(const Cell& a, const Cell& b) { return a.row == b.row && a.col == b.col; }
  friend bool operator<(const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  }
};

// Shifted diagram of a strict partition: row i occupies columns i..lambda_i+i-1.
class ShiftedDiagram {
public:
  explicit ShiftedDiagram(StrictPartition shape);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(Cell c) const;

private:
  StrictPartition shape_;
  std::vector<Cell> cells_;
};

ShiftedDiagram shifted_diagram(const StrictPartition& shape);

// True when S(inner) is a subset of S(outer).
bool diagram_contains(const StrictPartition& outer, const StrictPartition& inner);

// S(outer) \ S(inner), row-major. Error not_contained when the inner diagram
// does not fit.
std::vector<Cell> skew_cells(const StrictPartition& outer, const StrictPartition& inner);

using TableauWord = std::vector<Letter>;

// Marked skew shifted tableau. Construction validates the four filling rules:
// weakly increasing rows and columns, each unmarked letter at most once per
// column, each marked letter at most once per row.
class ShiftedSkewTableau {
public:
  ShiftedSkewTableau(StrictPartition outer, StrictPartition inner, std::map<Cell, Letter> entries);

  const StrictPartition& outer() const { return outer_; }
  const StrictPartition& inner() const { return inner_; }
  const std::map<Cell, Letter>& entries() const { return entries_; }

  // c_k = number of cells holding k or k', up to the largest value present.
  std::vector<int> content() const;

  // Rows read left to right, bottom row first.
  TableauWord word() const;

  std::string to_string() const; // ASCII grid; marked letters rendered "k'"

private:
  StrictPartition outer_;
  StrictPartition inner_;
  std::map<Cell, Letter> entries_;
};

TableauWord word(const ShiftedSkewTableau& t);

// First condition of the Littlewood-Richardson word test: for every value a
// present, the leftmost occurrence of a or a' must be unmarked.
bool first_occurrences_unmarked(const TableauWord& w);

// Lattice condition on tableau words. With N = |w| and, for 0 <= j <= 2N,
//   m_i(j) = #(unmarked i among the last j letters)            for j <= N,
//   m_i(j) = m_i(N) + #(marked i' among the first j-N letters) for j > N,
// the word is rejected if m_i(j) = m_(i+1)(j) while the next letter scanned
// (w_(N-j) on the first pass, w_(j-N+1) on the second) is i+1 or (i+1)' on
// the first pass, or i or (i+1)' on the second.
bool has_lattice_property(const TableauWord& w);

bool satisfies_tp(const TableauWord& w);

// Number of skew shifted tableaux of shape outer/inner with content exactly
// `content` whose words pass satisfies_tp. Returns 0 when the inner shape
// does not fit or when length(outer) > length(inner) + length(content).
// Error size_mismatch unless |outer| = |inner| + |content|.
long long lr_filling_count(const StrictPartition& outer, const StrictPartition& inner,
                           const StrictPartition& content);

// Enumerate the counted tableaux themselves (used for printing and tests).
std::vector<ShiftedSkewTableau> lr_fillings(const StrictPartition& outer, const StrictPartition& inner,
                                            const StrictPartition& content);

} // namespace spinfold
