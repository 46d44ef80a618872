#pragma once

#include "globk/globular_set.hpp"
#include "globk/table.hpp"

#include <vector>

namespace globk {

/// Element (x_1, ..., x_n) of the globular product X(T), with x_k in X_{i_k}.
struct GlobularTuple {
  std::vector<CellId> entries;
  friend bool operator==(const GlobularTuple&, const GlobularTuple&) = default;
  friend auto operator<=>(const GlobularTuple&, const GlobularTuple&) = default;
};

/// Whether consecutive entries satisfy s^{i_k}_{i'_k}(x_k) = t^{i_{k+1}}_{i'_k}(x_{k+1}).
inline bool is_glued(const GlobularSet& x, const TableOfDimensions& table, const std::vector<CellId>& entries) {
  if (entries.size() != table.width()) return false;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] >= x.size(table.outer(k + 1))) return false;
  for (std::size_t k = 1; k < table.width(); ++k) {
    Dim meet = table.inner(k);
    if (x.src(table.outer(k), meet, entries[k - 1]) != x.tgt(table.outer(k + 1), meet, entries[k])) return false;
  }
  return true;
}

/// All tuples of X(T), enumerated by backtracking in lexicographic order of
/// the cell indices.
inline std::vector<GlobularTuple> globular_product(const GlobularSet& x, const TableOfDimensions& table) {
  if (table.max_dim() > x.truncation())
    fail(ErrorKind::DimOutOfRange, "table '" + table.to_string() + "' exceeds truncation " +
                                       std::to_string(x.truncation()));
  const std::size_t n = table.width();
  // candidates[k][b]: cells of X_{i_{k+1}} whose target at the k-th meet is b, ascending
  std::vector<std::vector<std::vector<CellId>>> candidates(n);
  for (std::size_t k = 1; k < n; ++k) {
    Dim d = table.outer(k + 1), meet = table.inner(k);
    candidates[k].resize(x.size(meet));
    for (CellId u = 0; u < x.size(d); ++u) candidates[k][x.tgt(d, meet, u)].push_back(u);
  }

  std::vector<GlobularTuple> out;
  std::vector<CellId> current(n);
  auto descend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back({current});
      return;
    }
    CellId glue = x.src(table.outer(k), table.inner(k), current[k - 1]);
    for (CellId u : candidates[k][glue]) {
      current[k] = u;
      self(self, k + 1);
    }
  };
  for (CellId u = 0; u < x.size(table.outer(1)); ++u) {
    current[0] = u;
    descend(descend, 1);
  }
  return out;
}

/// The k-th entry (1-based); dual to the canonical morphism into the k-th disk.
inline CellId projection(const TableOfDimensions& table, std::size_t k, const GlobularTuple& tuple) {
  if (k < 1 || k > table.width() || tuple.entries.size() != table.width())
    fail(ErrorKind::IndexOutOfRange, "projection " + std::to_string(k) + " on a table of width " +
                                         std::to_string(table.width()));
  return tuple.entries[k - 1];
}

}  // namespace globk
