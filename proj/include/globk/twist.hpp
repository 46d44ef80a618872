#pragma once

#include "globk/error.hpp"
#include "globk/omega.hpp"
#include "globk/product.hpp"
#include "globk/table.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace globk {

/// A cell of level i of the twisted complex: (x_1, ..., x_{i+1}) with x_k in
/// X_k and s^k_{k-1}(x_k) = t^{k+1}_{k-1}(x_{k+1}) for 1 <= k <= i.
struct TwistedCell {
  std::vector<CellId> entries;  // entries[k-1] lies in X_k

  Dim level() const noexcept { return static_cast<Dim>(entries.size()) - 1; }
  /// 1-based component x_k.
  CellId at(Dim k) const { return entries.at(static_cast<std::size_t>(k - 1)); }

  friend bool operator==(const TwistedCell&, const TwistedCell&) = default;
  friend auto operator<=>(const TwistedCell&, const TwistedCell&) = default;
};

/// Truncated cell (x_{j+1}, ..., x_{i+1}) of the segment X~_{j,i}, same gluing.
struct TwistedSegment {
  Dim lower = 0;  // j
  std::vector<CellId> entries;

  Dim upper() const noexcept { return lower + static_cast<Dim>(entries.size()) - 1; }
  CellId at(Dim k) const { return entries.at(static_cast<std::size_t>(k - lower - 1)); }

  friend bool operator==(const TwistedSegment&, const TwistedSegment&) = default;
  friend auto operator<=>(const TwistedSegment&, const TwistedSegment&) = default;
};

/// Image of the canonical isomorphism: the first twisted cell kept whole, and
/// for each later piece only the entries that are not determined by the
/// previous one.
struct MixedTuple {
  TwistedCell head;
  std::vector<TwistedSegment> tail;

  friend bool operator==(const MixedTuple&, const MixedTuple&) = default;
  friend auto operator<=>(const MixedTuple&, const MixedTuple&) = default;
};

using TwistedTuple = std::vector<TwistedCell>;

/// Table "1 0 2 1 3 ... i-1 i+1" whose globular product is X~_i.
inline TableOfDimensions twisted_table(Dim i) {
  if (i < 0) fail(ErrorKind::DimOutOfRange, "negative twisted level");
  std::vector<Dim> outer(static_cast<std::size_t>(i) + 1), inner(static_cast<std::size_t>(i));
  std::iota(outer.begin(), outer.end(), 1);
  std::iota(inner.begin(), inner.end(), 0);
  return {outer, inner};
}

/// Table "j+1 j j+2 j+1 ... i-1 i+1" whose globular product is X~_{j,i}.
inline TableOfDimensions segment_table(Dim j, Dim i) {
  if (j < 0 || i < j) fail(ErrorKind::DimOutOfRange, "segment (" + std::to_string(j) + "," + std::to_string(i) + ")");
  std::vector<Dim> outer(static_cast<std::size_t>(i - j) + 1), inner(static_cast<std::size_t>(i - j));
  std::iota(outer.begin(), outer.end(), j + 1);
  std::iota(inner.begin(), inner.end(), j);
  return {outer, inner};
}

/// Flattened table of the mixed presentation over T: the pieces of a mixed
/// tuple laid end to end form an ordinary globular product.
inline TableOfDimensions mixed_table(const TableOfDimensions& t) {
  std::vector<Dim> outer, inner;
  for (Dim d = 1; d <= t.outer(1) + 1; ++d) {
    if (d > 1) inner.push_back(d - 2);
    outer.push_back(d);
  }
  for (std::size_t l = 1; l < t.width(); ++l) {
    const Dim meet = t.inner(l);
    inner.push_back(meet);
    for (Dim d = meet + 2; d <= t.outer(l + 1) + 1; ++d) {
      if (d > meet + 2) inner.push_back(d - 2);
      outer.push_back(d);
    }
  }
  return {outer, inner};
}

namespace detail {

/// 0 when (x_{first}, x_{first+1}, ...) is a glued run, otherwise the 1-based
/// dimension k of the first broken gluing condition s^k_{k-1}(x_k) = t^{k+1}_{k-1}(x_{k+1}).
inline Dim first_break(const GlobularSet& x, Dim first, const std::vector<CellId>& entries) {
  for (std::size_t p = 0; p + 1 < entries.size(); ++p) {
    const Dim k = first + static_cast<Dim>(p);
    if (x.src(k, k - 1, entries[p]) != x.tgt(k + 1, k - 1, entries[p + 1])) return k;
  }
  return 0;
}

inline void require_run(const GlobularSet& x, Dim first, const std::vector<CellId>& entries, const std::string& what) {
  if (entries.empty()) fail(ErrorKind::DimOutOfRange, what + " has no entries");
  const Dim last = first + static_cast<Dim>(entries.size()) - 1;
  if (last > x.truncation())
    fail(ErrorKind::DimOutOfRange, what + " needs dimension " + std::to_string(last) + " > truncation " +
                                       std::to_string(x.truncation()));
  for (std::size_t p = 0; p < entries.size(); ++p) x.require_cell(first + static_cast<Dim>(p), entries[p]);
  if (Dim k = first_break(x, first, entries))
    fail(ErrorKind::GluingViolation, what + " breaks gluing at k=" + std::to_string(k));
}

inline std::string render_run(const GlobularSet& x, Dim first, const std::vector<CellId>& entries) {
  std::string s = "(";
  for (std::size_t p = 0; p < entries.size(); ++p) {
    if (p) s += "|";
    s += x.name(first + static_cast<Dim>(p), entries[p]);
  }
  return s + ")";
}

}  // namespace detail

inline std::string render(const OmegaStructure& x, const TwistedCell& c) {
  return detail::render_run(x.base(), 1, c.entries);
}

inline std::string render(const OmegaStructure& x, const TwistedSegment& c) {
  return detail::render_run(x.base(), c.lower + 1, c.entries);
}

inline bool is_twisted_cell(const OmegaStructure& x, const TwistedCell& c) {
  if (c.entries.empty() || c.level() + 1 > x.truncation()) return false;
  for (Dim k = 1; k <= c.level() + 1; ++k)
    if (c.at(k) >= x.size(k)) return false;
  return detail::first_break(x.base(), 1, c.entries) == 0;
}

inline void require_twisted(const OmegaStructure& x, const TwistedCell& c) {
  detail::require_run(x.base(), 1, c.entries, "twisted cell");
}

inline void require_segment(const OmegaStructure& x, const TwistedSegment& c) {
  if (c.lower < 0) fail(ErrorKind::DimOutOfRange, "segment with negative lower bound");
  detail::require_run(x.base(), c.lower + 1, c.entries, "twisted segment");
}

/// X~_i, in lexicographic order of the entries.
inline std::vector<TwistedCell> twisted_cells(const OmegaStructure& x, Dim i) {
  if (i < 0 || i + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "twisted level " + std::to_string(i) + " needs truncation >= " +
                                       std::to_string(i + 1) + ", have " + std::to_string(x.truncation()));
  std::vector<TwistedCell> out;
  for (auto& t : globular_product(x.base(), twisted_table(i))) out.push_back({std::move(t.entries)});
  return out;
}

/// X~_{j,i}, in lexicographic order of the entries.
inline std::vector<TwistedSegment> segment_cells(const OmegaStructure& x, Dim j, Dim i) {
  if (j < 0 || i < j || i + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "segment (" + std::to_string(j) + "," + std::to_string(i) +
                                       ") outside truncation " + std::to_string(x.truncation()));
  std::vector<TwistedSegment> out;
  for (auto& t : globular_product(x.base(), segment_table(j, i))) out.push_back({j, std::move(t.entries)});
  return out;
}

/// s~(x) = (x_1, ..., x_{i-1}, x_i *^i_{i-1} t_{i+1}(x_{i+1})).
inline TwistedCell t_src(const OmegaStructure& x, const TwistedCell& c) {
  require_twisted(x, c);
  const Dim i = c.level();
  if (i < 1) fail(ErrorKind::DimOutOfRange, "level 0 twisted cells have no source");
  TwistedCell out{std::vector<CellId>(c.entries.begin(), c.entries.end() - 1)};
  out.entries.back() = x.compose(i, i - 1, c.at(i), x.base().tgt(i + 1, c.at(i + 1)));
  return out;
}

/// t~(x) = (x_1, ..., x_i).
inline TwistedCell t_tgt(const OmegaStructure& x, const TwistedCell& c) {
  require_twisted(x, c);
  if (c.level() < 1) fail(ErrorKind::DimOutOfRange, "level 0 twisted cells have no target");
  return {std::vector<CellId>(c.entries.begin(), c.entries.end() - 1)};
}

inline TwistedCell t_boundary(const OmegaStructure& x, Side side, const TwistedCell& c, Dim j) {
  require_twisted(x, c);
  if (j < 0 || j > c.level())
    fail(ErrorKind::DimOutOfRange, "twisted boundary from level " + std::to_string(c.level()) + " to " +
                                       std::to_string(j));
  TwistedCell out = c;
  while (out.level() > j) out = side == Side::Source ? t_src(x, out) : t_tgt(x, out);
  return out;
}

/// Iterated twisted boundaries s~^i_j and t~^i_j.
inline TwistedCell t_src(const OmegaStructure& x, const TwistedCell& c, Dim j) {
  return t_boundary(x, Side::Source, c, j);
}
inline TwistedCell t_tgt(const OmegaStructure& x, const TwistedCell& c, Dim j) {
  return t_boundary(x, Side::Target, c, j);
}

namespace detail {

inline void require_shape(const TableOfDimensions& t, const TwistedTuple& cells) {
  if (cells.size() != t.width())
    fail(ErrorKind::ShapeViolation, std::to_string(cells.size()) + " twisted cells for a table of width " +
                                        std::to_string(t.width()));
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (cells[k].level() != t.outer(k + 1))
      fail(ErrorKind::ShapeViolation, "piece " + std::to_string(k + 1) + " has level " +
                                          std::to_string(cells[k].level()) + ", table wants " +
                                          std::to_string(t.outer(k + 1)));
}

}  // namespace detail

/// Whether s~^{i_k}_{i'_k}(x^k) = t~^{i_{k+1}}_{i'_k}(x^{k+1}) for all k;
/// returns the first failing k, or 0.
inline std::size_t twisted_first_break(const OmegaStructure& x, const TableOfDimensions& t, const TwistedTuple& cells) {
  detail::require_shape(t, cells);
  for (std::size_t k = 1; k < t.width(); ++k)
    if (t_src(x, cells[k - 1], t.inner(k)) != t_tgt(x, cells[k], t.inner(k))) return k;
  return 0;
}

/// Tuples of twisted cells glued along T by the twisted boundaries.
inline std::vector<TwistedTuple> twisted_product(const OmegaStructure& x, const TableOfDimensions& t) {
  if (t.max_dim() + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "table '" + t.to_string() + "' needs truncation " +
                                       std::to_string(t.max_dim() + 1));
  const std::size_t n = t.width();
  std::vector<std::vector<TwistedCell>> levels(n);
  // buckets[k]: cells of piece k+1 keyed by their target at the k-th meet
  std::vector<std::map<TwistedCell, std::vector<std::size_t>>> buckets(n);
  for (std::size_t k = 0; k < n; ++k) {
    levels[k] = twisted_cells(x, t.outer(k + 1));
    if (k > 0)
      for (std::size_t p = 0; p < levels[k].size(); ++p)
        buckets[k][t_tgt(x, levels[k][p], t.inner(k))].push_back(p);
  }
  std::vector<TwistedTuple> out;
  TwistedTuple current(n);
  auto descend = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(current);
      return;
    }
    auto it = buckets[k].find(t_src(x, current[k - 1], t.inner(k)));
    if (it == buckets[k].end()) return;
    for (std::size_t p : it->second) {
      current[k] = levels[k][p];
      self(self, k + 1);
    }
  };
  for (const auto& c : levels[0]) {
    current[0] = c;
    descend(descend, 1);
  }
  return out;
}

/// Splits a tuple of globular_product(X, mixed_table(T)) into its pieces.
inline MixedTuple split_mixed(const TableOfDimensions& t, const std::vector<CellId>& flat) {
  MixedTuple m;
  auto it = flat.begin();
  m.head.entries.assign(it, it + t.outer(1) + 1);
  it += t.outer(1) + 1;
  for (std::size_t l = 1; l < t.width(); ++l) {
    const Dim lower = t.inner(l) + 1;
    const auto len = t.outer(l + 1) - lower + 1;
    m.tail.push_back({lower, std::vector<CellId>(it, it + len)});
    it += len;
  }
  return m;
}

inline std::vector<CellId> flatten(const MixedTuple& m) {
  std::vector<CellId> flat = m.head.entries;
  for (const auto& s : m.tail) flat.insert(flat.end(), s.entries.begin(), s.entries.end());
  return flat;
}

/// All mixed tuples over T.
inline std::vector<MixedTuple> mixed_product(const OmegaStructure& x, const TableOfDimensions& t) {
  if (t.max_dim() + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "table '" + t.to_string() + "' needs truncation " +
                                       std::to_string(t.max_dim() + 1));
  std::vector<MixedTuple> out;
  for (const auto& tuple : globular_product(x.base(), mixed_table(t))) out.push_back(split_mixed(t, tuple.entries));
  return out;
}

/// c: keeps x^1 whole and, for l >= 2, only the entries of x^l above i'_{l-1}+1.
inline MixedTuple canonical_iso_c(const OmegaStructure& x, const TableOfDimensions& t, const TwistedTuple& cells) {
  detail::require_shape(t, cells);
  for (const auto& c : cells) require_twisted(x, c);
  if (std::size_t k = twisted_first_break(x, t, cells))
    fail(ErrorKind::GluingViolation, "twisted tuple breaks gluing condition " + std::to_string(k) + ": " +
                                         render(x, t_src(x, cells[k - 1], t.inner(k))) + " != " +
                                         render(x, t_tgt(x, cells[k], t.inner(k))));
  MixedTuple m{cells[0], {}};
  for (std::size_t l = 1; l < t.width(); ++l) {
    const Dim lower = t.inner(l) + 1;
    m.tail.push_back({lower, std::vector<CellId>(cells[l].entries.begin() + lower, cells[l].entries.end())});
  }
  return m;
}

/// c^{-1}: rebuilds each dropped prefix from the previous piece by
/// x^{l+1}_k = x^l_k for k <= i'_l and
/// x^{l+1}_{i'_l+1} = x^l_{i'_l+1} *^{i'_l+1}_{i'_l} t_{i'_l+2}(x^l_{i'_l+2}).
inline TwistedTuple canonical_iso_c_inv(const OmegaStructure& x, const TableOfDimensions& t, const MixedTuple& m) {
  if (m.tail.size() + 1 != t.width())
    fail(ErrorKind::ShapeViolation, std::to_string(m.tail.size() + 1) + " pieces for a table of width " +
                                        std::to_string(t.width()));
  if (m.head.level() != t.outer(1)) fail(ErrorKind::ShapeViolation, "first piece has the wrong level");
  require_twisted(x, m.head);
  for (std::size_t l = 1; l < t.width(); ++l) {
    const auto& s = m.tail[l - 1];
    if (s.lower != t.inner(l) + 1 || s.upper() != t.outer(l + 1))
      fail(ErrorKind::ShapeViolation, "piece " + std::to_string(l + 1) + " has the wrong bounds");
    require_segment(x, s);
  }
  const auto& b = x.base();
  TwistedTuple cells{m.head};
  for (std::size_t l = 1; l < t.width(); ++l) {
    const Dim meet = t.inner(l);
    const auto& prev = cells.back();
    const auto& seg = m.tail[l - 1];
    const Dim top = prev.level() + 1;
    if (b.src(top, meet, prev.at(top)) != b.tgt(meet + 2, meet, seg.entries.front()))
      fail(ErrorKind::GluingViolation, "mixed tuple breaks gluing condition " + std::to_string(l) + ": " +
                                           b.name(meet, b.src(top, meet, prev.at(top))) + " != " +
                                           b.name(meet, b.tgt(meet + 2, meet, seg.entries.front())));
    TwistedCell next{std::vector<CellId>(prev.entries.begin(), prev.entries.begin() + meet)};
    next.entries.push_back(x.compose(meet + 1, meet, prev.at(meet + 1), b.tgt(meet + 2, prev.at(meet + 2))));
    next.entries.insert(next.entries.end(), seg.entries.begin(), seg.entries.end());
    cells.push_back(std::move(next));
  }
  return cells;
}

/// x *~^i_j y for s~^i_j(x) = t~^i_j(y): (x_1, ..., x_{j+1}, x_l *^l_j y_l for l = j+2..i+1),
/// evaluated on the mixed form of the pair.
inline TwistedCell t_compose(const OmegaStructure& x, Dim j, const TwistedCell& u, const TwistedCell& v) {
  require_twisted(x, u);
  require_twisted(x, v);
  const Dim i = u.level();
  if (v.level() != i || !(i > j && j >= 0))
    fail(ErrorKind::DimOutOfRange, "twisted composition *~^" + std::to_string(i) + "_" + std::to_string(j) +
                                       " of levels " + std::to_string(u.level()) + " and " +
                                       std::to_string(v.level()));
  auto su = t_src(x, u, j), tv = t_tgt(x, v, j);
  if (su != tv)
    fail(ErrorKind::NotComposable, "*~^" + std::to_string(i) + "_" + std::to_string(j) + " of " + render(x, u) +
                                       " and " + render(x, v) + ": source " + render(x, su) + " != target " +
                                       render(x, tv));
  const TableOfDimensions shape({i, i}, {j});
  MixedTuple m = canonical_iso_c(x, shape, {u, v});
  TwistedCell out{std::vector<CellId>(u.entries.begin(), u.entries.begin() + j + 1)};
  for (Dim l = j + 2; l <= i + 1; ++l) out.entries.push_back(x.compose(l, j, u.at(l), m.tail[0].at(l)));
  return out;
}

/// k~_i(x) = (x_1, ..., x_{i+1}, k_{i+1} k_i s_{i+1}(x_{i+1})).
inline TwistedCell t_unit(const OmegaStructure& x, const TwistedCell& c) {
  require_twisted(x, c);
  const Dim i = c.level();
  if (i + 2 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "twisted unit at level " + std::to_string(i) + " needs truncation >= " +
                                       std::to_string(i + 2));
  TwistedCell out = c;
  out.entries.push_back(x.iter_unit(i, i + 2, x.base().src(i + 1, c.at(i + 1))));
  return out;
}

/// k~^i_j by iterating k~.
inline TwistedCell t_iter_unit(const OmegaStructure& x, const TwistedCell& c, Dim i) {
  require_twisted(x, c);
  if (i < c.level()) fail(ErrorKind::DimOutOfRange, "iterated twisted unit to a lower level");
  TwistedCell out = c;
  while (out.level() < i) out = t_unit(x, out);
  return out;
}

/// k~^i_j(y) = (y_1, ..., y_{j+1}, k^l_j s_{j+1}(y_{j+1}) for l = j+2..i+1).
inline TwistedCell t_iter_unit_closed(const OmegaStructure& x, const TwistedCell& c, Dim i) {
  require_twisted(x, c);
  const Dim j = c.level();
  if (i < j || (i > j && i + 1 > x.truncation()))
    fail(ErrorKind::DimOutOfRange, "iterated twisted unit from " + std::to_string(j) + " to " + std::to_string(i));
  TwistedCell out = c;
  const CellId base = x.base().src(j + 1, c.at(j + 1));
  for (Dim l = j + 2; l <= i + 1; ++l) out.entries.push_back(x.iter_unit(j, l, base));
  return out;
}

/// w~^i_j(x) = (x_1, ..., x_j, x_{j+1} *^{j+1}_j t_{j+2}(x_{j+2}), w^l_j(x_l) for l = j+2..i+1).
inline TwistedCell t_inverse(const OmegaStructure& x, Dim j, const TwistedCell& c) {
  require_twisted(x, c);
  const Dim i = c.level();
  if (!x.has_inverses()) fail(ErrorKind::InversesAbsent, "twisted inverse needs inverse tables");
  if (!(i > j && j >= 0))
    fail(ErrorKind::DimOutOfRange, "twisted inverse w~^" + std::to_string(i) + "_" + std::to_string(j));
  TwistedCell out{std::vector<CellId>(c.entries.begin(), c.entries.begin() + j)};
  out.entries.push_back(x.compose(j + 1, j, c.at(j + 1), x.base().tgt(j + 2, c.at(j + 2))));
  for (Dim l = j + 2; l <= i + 1; ++l) out.entries.push_back(x.inverse(l, j, c.at(l)));
  return out;
}

/// The twisted structure as an OmegaStructure truncated at N-1, with cells
/// named "(x1|x2|...)". Inverse tables are built when X has them.
inline OmegaStructure build_twisted(const OmegaStructure& x) {
  const Dim n = x.truncation() - 1;
  if (n < 0) fail(ErrorKind::DimOutOfRange, "the twisted structure of a 0-truncated structure is empty");
  std::vector<std::vector<TwistedCell>> cells(static_cast<std::size_t>(n) + 1);
  std::vector<std::map<TwistedCell, CellId>> index(cells.size());
  std::vector<std::vector<std::string>> names(cells.size());
  for (Dim i = 0; i <= n; ++i) {
    cells[i] = twisted_cells(x, i);
    for (CellId u = 0; u < cells[i].size(); ++u) {
      index[i].emplace(cells[i][u], u);
      names[i].push_back(render(x, cells[i][u]));
    }
  }
  auto lookup = [&](Dim i, const TwistedCell& c) {
    auto it = index[i].find(c);
    if (it == index[i].end())
      fail(ErrorKind::GluingViolation, "operation produced " + render(x, c) + ", not a twisted cell of level " +
                                           std::to_string(i));
    return it->second;
  };

  std::vector<std::vector<CellId>> src(cells.size()), tgt(cells.size());
  for (Dim i = 1; i <= n; ++i)
    for (const auto& c : cells[i]) {
      src[i].push_back(lookup(i - 1, t_src(x, c)));
      tgt[i].push_back(lookup(i - 1, t_tgt(x, c)));
    }

  auto t = OmegaTables::blank(GlobularSet(names, src, tgt), x.has_inverses());
  for (Dim i = 1; i <= n; ++i) {
    const auto sz = static_cast<CellId>(cells[i].size());
    for (Dim j = 0; j < i; ++j) {
      std::map<TwistedCell, std::vector<CellId>> by_target;
      for (CellId v = 0; v < sz; ++v) by_target[t_tgt(x, cells[i][v], j)].push_back(v);
      for (CellId u = 0; u < sz; ++u) {
        auto it = by_target.find(t_src(x, cells[i][u], j));
        if (it == by_target.end()) continue;
        for (CellId v : it->second) t.comp_at(i, j, u, v) = lookup(i, t_compose(x, j, cells[i][u], cells[i][v]));
      }
      if (t.inv)
        for (CellId u = 0; u < sz; ++u) (*t.inv)[i][j][u] = lookup(i, t_inverse(x, j, cells[i][u]));
    }
  }
  for (Dim i = 0; i < n; ++i)
    for (CellId u = 0; u < cells[i].size(); ++u) t.unit[i][u] = lookup(i + 1, t_unit(x, cells[i][u]));
  return OmegaStructure(std::move(t));
}

}  // namespace globk
