#include "spinfold/shifted_tableaux.hpp"

#include <algorithm>
#include <functional>

#include "spinfold/errors.hpp"

namespace spinfold {

ShiftedDiagram::ShiftedDiagram(StrictPartition shape) : shape_(std::move(shape)) {
  const auto& parts = shape_.parts();
  for (int i = 1; i <= static_cast<int>(parts.size()); ++i)
    for (int j = i; j <= parts[i - 1] + i - 1; ++j) cells_.push_back(Cell{i, j});
}

bool ShiftedDiagram::contains(Cell c) const {
  const auto& parts = shape_.parts();
  if (c.row < 1 || c.row > static_cast<int>(parts.size())) return false;
  return c.col >= c.row && c.col <= parts[c.row - 1] + c.row - 1;
}

ShiftedDiagram shifted_diagram(const StrictPartition& shape) { return ShiftedDiagram(shape); }

bool diagram_contains(const StrictPartition& outer, const StrictPartition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.parts()[i] > outer.parts()[i]) return false;
  return true;
}

std::vector<Cell> skew_cells(const StrictPartition& outer, const StrictPartition& inner) {
  if (!diagram_contains(outer, inner))
    raise(Errc::not_contained, "diagram of " + inner.to_string() + " does not fit inside " + outer.to_string());
  std::vector<Cell> out;
  for (int i = 1; i <= outer.length(); ++i) {
    int inner_part = i <= inner.length() ? inner.parts()[i - 1] : 0;
    for (int j = inner_part + i; j <= outer.parts()[i - 1] + i - 1; ++j) out.push_back(Cell{i, j});
  }
  return out;
}

ShiftedSkewTableau::ShiftedSkewTableau(StrictPartition outer, StrictPartition inner,
                                       std::map<Cell, Letter> entries)
    : outer_(std::move(outer)), inner_(std::move(inner)), entries_(std::move(entries)) {
  auto cells = skew_cells(outer_, inner_);
  if (cells.size() != entries_.size())
    raise(Errc::size_mismatch, "tableau must fill every cell of the skew diagram");
  for (const Cell& c : cells) {
    auto it = entries_.find(c);
    if (it == entries_.end()) raise(Errc::size_mismatch, "tableau is missing a cell entry");
    if (it->second.value < 1) raise(Errc::parse_error, "letters must have positive value");
    auto left = entries_.find(Cell{c.row, c.col - 1});
    if (left != entries_.end()) {
      if (!(left->second <= it->second)) raise(Errc::not_contained, "row entries must weakly increase");
      if (left->second == it->second && it->second.marked)
        raise(Errc::not_contained, "marked letter repeated in a row");
    }
    auto up = entries_.find(Cell{c.row - 1, c.col});
    if (up != entries_.end()) {
      if (!(up->second <= it->second)) raise(Errc::not_contained, "column entries must weakly increase");
      if (up->second == it->second && !it->second.marked)
        raise(Errc::not_contained, "unmarked letter repeated in a column");
    }
  }
}

std::vector<int> ShiftedSkewTableau::content() const {
  std::vector<int> out;
  for (const auto& [cell, letter] : entries_) {
    if (static_cast<int>(out.size()) < letter.value) out.resize(letter.value, 0);
    ++out[letter.value - 1];
  }
  return out;
}

TableauWord ShiftedSkewTableau::word() const {
  std::vector<std::vector<Letter>> rows;
  for (const auto& [cell, letter] : entries_) {
    if (static_cast<int>(rows.size()) < cell.row) rows.resize(cell.row);
    rows[cell.row - 1].push_back(letter); // map order gives increasing columns
  }
  TableauWord out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::string ShiftedSkewTableau::to_string() const {
  std::string out;
  for (int i = 1; i <= outer_.length(); ++i) {
    int inner_part = i <= inner_.length() ? inner_.parts()[i - 1] : 0;
    std::string line;
    for (int j = 1; j <= outer_.parts()[i - 1] + i - 1; ++j) {
      std::string cell = "   ";
      if (j >= inner_part + i) {
        auto it = entries_.find(Cell{i, j});
        std::string s = it->second.to_string();
        cell = s + std::string(s.size() < 3 ? 3 - s.size() : 1, ' ');
      } else if (j >= i) {
        cell = ".  ";
      }
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

TableauWord word(const ShiftedSkewTableau& t) { return t.word(); }

bool first_occurrences_unmarked(const TableauWord& w) {
  std::vector<bool> seen;
  for (const Letter& x : w) {
    if (static_cast<int>(seen.size()) < x.value) seen.resize(x.value, false);
    if (!seen[x.value - 1]) {
      if (x.marked) return false;
      seen[x.value - 1] = true;
    }
  }
  return true;
}

bool has_lattice_property(const TableauWord& w) {
  int maxval = 0;
  for (const Letter& x : w) maxval = std::max(maxval, x.value);
  if (maxval <= 1) return true;
  std::vector<int> m(maxval + 2, 0); // m[v] for 1 <= v <= maxval, m[maxval+1] stays 0
  // First pass: scan right to left, counting unmarked letters.
  for (size_t j = 0; j < w.size(); ++j) {
    const Letter& x = w[w.size() - 1 - j];
    if (x.value >= 2 && m[x.value - 1] == m[x.value]) return false;
    if (!x.marked) ++m[x.value];
  }
  // Second pass: scan left to right, counting marked letters.
  for (const Letter& x : w) {
    if (x.marked) {
      if (x.value >= 2 && m[x.value - 1] == m[x.value]) return false;
      ++m[x.value];
    } else {
      if (m[x.value] == m[x.value + 1]) return false;
    }
  }
  return true;
}

bool satisfies_tp(const TableauWord& w) {
  return first_occurrences_unmarked(w) && has_lattice_property(w);
}

namespace {

// Backtracking enumerator over the fillings of a skew shifted diagram with a
// fixed content, pruning on the four tableau rules cell by cell and testing
// the word conditions on completed fillings. Cells are visited row-major;
// letters are handled as ranks (2v for v', 2v+1 for v).
class FillingSearch {
public:
  FillingSearch(const StrictPartition& outer, const StrictPartition& inner,
                const StrictPartition& content)
      : outer_(outer), inner_(inner), content_(content.parts()) {
    cells_ = skew_cells(outer, inner);
    remaining_ = content_;
    grid_.assign(static_cast<size_t>(outer.length() + 1) * width(), 0);
  }

  long long count(std::vector<ShiftedSkewTableau>* sink) {
    sink_ = sink;
    hits_ = 0;
    fill(0);
    return hits_;
  }

private:
  size_t width() const { return static_cast<size_t>(outer_.n() + outer_.length() + 2); }
  int& at(int row, int col) { return grid_[static_cast<size_t>(row) * width() + col]; }

  void fill(size_t idx) {
    if (idx == cells_.size()) {
      finish();
      return;
    }
    Cell c = cells_[idx];
    int left = c.col - 1 >= c.row && !in_inner(c.row, c.col - 1) ? at(c.row, c.col - 1) : 0;
    int up = c.row >= 2 && !in_inner(c.row - 1, c.col) ? at(c.row - 1, c.col) : 0;
    int lo = std::max({left, up, 2});
    int hi = 2 * static_cast<int>(content_.size()) + 1;
    for (int rank = lo; rank <= hi; ++rank) {
      bool marked = (rank & 1) == 0;
      if (rank == left && marked) continue;  // marked repeat in row
      if (rank == up && !marked) continue;   // unmarked repeat in column
      int value = rank / 2;
      if (remaining_[value - 1] == 0) continue;
      --remaining_[value - 1];
      at(c.row, c.col) = rank;
      fill(idx + 1);
      at(c.row, c.col) = 0;
      ++remaining_[value - 1];
    }
  }

  bool in_inner(int row, int col) const {
    if (row > inner_.length()) return false;
    return col <= inner_.parts()[row - 1] + row - 1;
  }

  void finish() {
    TableauWord w;
    w.reserve(cells_.size());
    // cells_ is row-major; emit rows bottom to top, left to right.
    size_t end = cells_.size();
    while (end > 0) {
      size_t begin = end;
      int row = cells_[end - 1].row;
      while (begin > 0 && cells_[begin - 1].row == row) --begin;
      for (size_t i = begin; i < end; ++i) w.push_back(Letter::from_rank(at(cells_[i].row, cells_[i].col)));
      end = begin;
    }
    if (!satisfies_tp(w)) return;
    ++hits_;
    if (sink_) {
      std::map<Cell, Letter> entries;
      for (const Cell& c : cells_) entries[c] = Letter::from_rank(at(c.row, c.col));
      sink_->emplace_back(outer_, inner_, std::move(entries));
    }
  }

  const StrictPartition& outer_;
  const StrictPartition& inner_;
  std::vector<int> content_;
  std::vector<int> remaining_;
  std::vector<Cell> cells_;
  std::vector<int> grid_;
  std::vector<ShiftedSkewTableau>* sink_ = nullptr;
  long long hits_ = 0;
};

} // namespace

long long lr_filling_count(const StrictPartition& outer, const StrictPartition& inner,
                           const StrictPartition& content) {
  if (outer.n() != inner.n() + content.n())
    raise(Errc::size_mismatch, "|outer| must equal |inner| + |content|: " + outer.to_string() + " vs " +
                                   inner.to_string() + " + " + content.to_string());
  if (!diagram_contains(outer, inner)) return 0;
  if (outer.length() > inner.length() + content.length()) return 0;
  if (content.empty()) return outer == inner ? 1 : 0;
  return FillingSearch(outer, inner, content).count(nullptr);
}

std::vector<ShiftedSkewTableau> lr_fillings(const StrictPartition& outer, const StrictPartition& inner,
                                            const StrictPartition& content) {
  std::vector<ShiftedSkewTableau> out;
  if (outer.n() != inner.n() + content.n())
    raise(Errc::size_mismatch, "|outer| must equal |inner| + |content|");
  if (!diagram_contains(outer, inner)) return out;
  if (outer.length() > inner.length() + content.length()) return out;
  if (content.empty()) {
    if (outer == inner) out.emplace_back(outer, inner, std::map<Cell, Letter>{});
    return out;
  }
  FillingSearch(outer, inner, content).count(&out);
  return out;
}

} // namespace spinfold
