#pragma once

#include "globk/error.hpp"
#include "globk/globular_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace globk {

/// Shape datum (i_1, ..., i_n; i'_1, ..., i'_{n-1}) of a globular sum, with
/// i_k > i'_k < i_{k+1}. Written as the alternating string "i_1 i'_1 i_2 ... i_n".
class TableOfDimensions {
 public:
  TableOfDimensions(std::vector<Dim> outer, std::vector<Dim> inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (outer_.empty()) fail(ErrorKind::ShapeViolation, "a table needs width at least 1");
    if (inner_.size() + 1 != outer_.size())
      fail(ErrorKind::ShapeViolation, "width " + std::to_string(outer_.size()) + " needs " +
                                          std::to_string(outer_.size() - 1) + " inner dimensions");
    for (Dim d : outer_)
      if (d < 0) fail(ErrorKind::ShapeViolation, "negative dimension");
    for (std::size_t k = 0; k < inner_.size(); ++k) {
      if (inner_[k] < 0) fail(ErrorKind::ShapeViolation, "negative dimension");
      if (!(outer_[k] > inner_[k]) || !(outer_[k + 1] > inner_[k]))
        fail(ErrorKind::ShapeViolation, "at k=" + std::to_string(k + 1) + ": need i_k > i'_k and i_{k+1} > i'_k");
    }
  }

  /// Single disk D_i.
  static TableOfDimensions disk(Dim i) { return TableOfDimensions({i}, {}); }

  std::size_t width() const noexcept { return outer_.size(); }
  const std::vector<Dim>& outer() const noexcept { return outer_; }
  const std::vector<Dim>& inner() const noexcept { return inner_; }

  /// 1-based accessors matching the usual i_k / i'_k indexing.
  Dim outer(std::size_t k) const { return outer_.at(k - 1); }
  Dim inner(std::size_t k) const { return inner_.at(k - 1); }

  Dim max_dim() const { return *std::max_element(outer_.begin(), outer_.end()); }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < outer_.size(); ++k) {
      if (k > 0) out << ' ' << inner_[k - 1] << ' ';
      out << outer_[k];
    }
    return out.str();
  }

  friend bool operator==(const TableOfDimensions&, const TableOfDimensions&) = default;

 private:
  std::vector<Dim> outer_;
  std::vector<Dim> inner_;
};

inline TableOfDimensions parse_table(std::string_view text) {
  std::vector<Dim> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == '\t') {
      ++pos;
      continue;
    }
    Dim value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || end == text.data() + pos || value < 0)
      fail(ErrorKind::ParseError, "bad integer at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    values.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
  }
  if (values.empty()) fail(ErrorKind::ParseError, "empty table");
  if (values.size() % 2 == 0)
    fail(ErrorKind::ParseError, "a table has an odd number of entries, got " + std::to_string(values.size()));
  std::vector<Dim> outer, inner;
  for (std::size_t k = 0; k < values.size(); ++k) (k % 2 == 0 ? outer : inner).push_back(values[k]);
  return TableOfDimensions(std::move(outer), std::move(inner));
}

/// Every table with width <= max_width and all dimensions <= max_dim, in
/// lexicographic order of the alternating sequence.
inline std::vector<TableOfDimensions> enumerate_tables(std::size_t max_width, Dim max_dim) {
  std::vector<TableOfDimensions> out;
  std::vector<Dim> outer, inner;
  auto extend = [&](auto&& self) -> void {
    out.emplace_back(outer, inner);
    if (outer.size() == max_width) return;
    for (Dim meet = 0; meet < outer.back(); ++meet) {
      for (Dim next = meet + 1; next <= max_dim; ++next) {
        inner.push_back(meet);
        outer.push_back(next);
        self(self);
        outer.pop_back();
        inner.pop_back();
      }
    }
  };
  if (max_width == 0) return out;
  for (Dim first = 0; first <= max_dim; ++first) {
    outer.assign(1, first);
    inner.clear();
    extend(extend);
  }
  return out;
}

/// Finite planar rooted tree; children are ordered left to right.
struct PlanarTree {
  std::vector<PlanarTree> children;

  friend bool operator==(const PlanarTree&, const PlanarTree&) = default;

  /// Nested-bracket rendering, e.g. "[[][]]" for a root with two leaves.
  std::string to_string() const {
    std::string out = "[";
    for (const auto& c : children) out += c.to_string();
    return out + "]";
  }
};

/// The tree whose leaves, read left to right, sit at heights i_1..i_n and
/// whose consecutive leaves meet at heights i'_1..i'_{n-1}.
inline PlanarTree table_to_tree(const TableOfDimensions& table) {
  PlanarTree root;
  // path[h] is the node at height h on the branch to the most recent leaf
  std::vector<PlanarTree*> path{&root};
  auto grow = [&](Dim to) {
    while (static_cast<Dim>(path.size()) <= to) {
      auto& kids = path.back()->children;
      kids.emplace_back();
      path.push_back(&kids.back());
    }
  };
  grow(table.outer(1));
  for (std::size_t k = 1; k < table.width(); ++k) {
    path.resize(static_cast<std::size_t>(table.inner(k)) + 1);
    grow(table.outer(k + 1));
  }
  return root;
}

inline TableOfDimensions tree_to_table(const PlanarTree& tree) {
  std::vector<Dim> outer, inner;
  // lowest height seen since the previous leaf; that is where the two leaves meet
  Dim lowest = 0;
  auto walk = [&](auto&& self, const PlanarTree& node, Dim height) -> void {
    lowest = std::min(lowest, height);
    if (node.children.empty()) {
      if (!outer.empty()) inner.push_back(lowest);
      outer.push_back(height);
      lowest = height;
      return;
    }
    for (const auto& child : node.children) {
      self(self, child, height + 1);
      lowest = std::min(lowest, height);
    }
  };
  walk(walk, tree, 0);
  return TableOfDimensions(std::move(outer), std::move(inner));
}

}  // namespace globk
