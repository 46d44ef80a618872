#pragma once

#include "globk/omega.hpp"
#include "globk/parallel.hpp"
#include "globk/product.hpp"
#include "globk/report.hpp"
#include "globk/twist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace globk {

/// a_i(x_1, ..., x_{i+1}) = s_{i+1}(x_{i+1}), a cell of X_i.
inline CellId a_map(const OmegaStructure& x, const TwistedCell& c) {
  require_twisted(x, c);
  return x.base().src(c.level() + 1, c.entries.back());
}

/// Segment version a_{j,i}: same formula on the last entry.
inline CellId a_map(const OmegaStructure& x, const TwistedSegment& c) {
  require_segment(x, c);
  return x.base().src(c.upper() + 1, c.entries.back());
}

/// b_i(x_1, ..., x_{i+1}) = t_1(x_1), a cell of X_0.
inline CellId b_map(const OmegaStructure& x, const TwistedCell& c) {
  require_twisted(x, c);
  return x.base().tgt(1, c.at(1));
}

/// r_{j,i}(u) = (k_j t^i_j(u), ..., k_{i-1} t^i_{i-1}(u), k_i(u)).
inline TwistedSegment r_segment(const OmegaStructure& x, Dim j, Dim i, CellId u) {
  if (j < 0 || i < j || i + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "r_{" + std::to_string(j) + "," + std::to_string(i) + "} needs truncation >= " +
                                       std::to_string(i + 1));
  x.base().require_cell(i, u);
  TwistedSegment out{j, {}};
  for (Dim l = j; l <= i; ++l) out.entries.push_back(x.unit(l, x.base().tgt(i, l, u)));
  return out;
}

/// r_i = r_{0,i}, viewed as a twisted cell.
inline TwistedCell r_cell(const OmegaStructure& x, Dim i, CellId u) {
  return {r_segment(x, 0, i, u).entries};
}

/// r_S: r_{i_1} on the first entry, r_{i'_{l-1}+1, i_l} on the others.
inline MixedTuple r_sum(const OmegaStructure& x, const TableOfDimensions& t, const GlobularTuple& tuple) {
  if (!is_glued(x.base(), t, tuple.entries))
    fail(ErrorKind::GluingViolation, "tuple is not an element of the globular product over '" + t.to_string() + "'");
  MixedTuple m{r_cell(x, t.outer(1), tuple.entries[0]), {}};
  for (std::size_t l = 1; l < t.width(); ++l)
    m.tail.push_back(r_segment(x, t.inner(l) + 1, t.outer(l + 1), tuple.entries[l]));
  return m;
}

/// Whether m lies in the mixed product over T.
inline bool is_mixed(const OmegaStructure& x, const TableOfDimensions& t, const MixedTuple& m) {
  if (m.tail.size() + 1 != t.width() || m.head.level() != t.outer(1)) return false;
  for (std::size_t l = 1; l < t.width(); ++l)
    if (m.tail[l - 1].lower != t.inner(l) + 1 || m.tail[l - 1].upper() != t.outer(l + 1)) return false;
  return is_glued(x.base(), mixed_table(t), flatten(m));
}

/// For every tuple of X(T): r_S lands in the mixed product and the
/// componentwise a-maps send it back to the tuple.
inline Report check_section(const OmegaStructure& x, const TableOfDimensions& t, std::size_t cap = 100) {
  if (t.max_dim() + 1 > x.truncation())
    fail(ErrorKind::DimOutOfRange, "section check on '" + t.to_string() + "' needs truncation >= " +
                                       std::to_string(t.max_dim() + 1));
  const auto& b = x.base();
  std::vector<std::string> bad;
  for (const auto& tuple : globular_product(b, t)) {
    if (bad.size() >= cap) break;
    std::string at = "(";
    for (std::size_t k = 0; k < tuple.entries.size(); ++k)
      at += (k ? "," : "") + b.name(t.outer(k + 1), tuple.entries[k]);
    at += ")";
    MixedTuple m = r_sum(x, t, tuple);
    if (!is_mixed(x, t, m)) {
      bad.push_back(at + ": r lands outside the mixed product");
      continue;
    }
    std::vector<CellId> back{a_map(x, m.head)};
    for (const auto& s : m.tail) back.push_back(a_map(x, s));
    if (back != tuple.entries) {
      std::string got = "(";
      for (std::size_t k = 0; k < back.size(); ++k) got += (k ? "," : "") + b.name(t.outer(k + 1), back[k]);
      bad.push_back(at + ": a(r(x)) = " + got + ")");
    }
  }
  Report report;
  report.record("Section", "'" + t.to_string() + "'", bad);
  return report;
}

/// check_section over every table of width <= max_width and dims <= max_dim.
inline Report check_section_sweep(const OmegaStructure& x, std::size_t max_width, Dim max_dim, std::size_t cap = 100) {
  const auto tables = enumerate_tables(max_width, max_dim);
  auto parts = parallel_map(tables.size(), [&](std::size_t k) { return check_section(x, tables[k], cap); });
  Report report;
  for (const auto& p : parts) report.append(p);
  return report;
}

namespace detail {

template <class Check>
Report per_level(const OmegaStructure& x, const char* name_src, const char* name_tgt, Check&& check,
                 std::size_t cap) {
  Report report;
  for (Dim i = 1; i + 1 <= x.truncation(); ++i) {
    std::vector<std::string> bad_src, bad_tgt;
    for (const auto& c : twisted_cells(x, i)) check(i, c, bad_src, bad_tgt);
    if (bad_src.size() > cap) bad_src.resize(cap);
    if (bad_tgt.size() > cap) bad_tgt.resize(cap);
    report.record(name_src, "level=" + std::to_string(i), bad_src);
    report.record(name_tgt, "level=" + std::to_string(i), bad_tgt);
  }
  return report;
}

}  // namespace detail

/// a_{i-1} s~ = s_i a_i and a_{i-1} t~ = t_i a_i on every twisted cell.
inline Report check_alpha_naturality(const OmegaStructure& x, std::size_t cap = 100) {
  const auto& b = x.base();
  return detail::per_level(
      x, "AlphaSource", "AlphaTarget",
      [&](Dim i, const TwistedCell& c, auto& bad_src, auto& bad_tgt) {
        CellId a = a_map(x, c);
        CellId lhs_s = a_map(x, t_src(x, c)), rhs_s = b.src(i, a);
        CellId lhs_t = a_map(x, t_tgt(x, c)), rhs_t = b.tgt(i, a);
        if (lhs_s != rhs_s) bad_src.push_back(render(x, c) + ": " + b.name(i - 1, lhs_s) + " != " + b.name(i - 1, rhs_s));
        if (lhs_t != rhs_t) bad_tgt.push_back(render(x, c) + ": " + b.name(i - 1, lhs_t) + " != " + b.name(i - 1, rhs_t));
      },
      cap);
}

/// b_{i-1} s~ = b_i = b_{i-1} t~ on every twisted cell.
inline Report check_beta_naturality(const OmegaStructure& x, std::size_t cap = 100) {
  const auto& b = x.base();
  return detail::per_level(
      x, "BetaSource", "BetaTarget",
      [&](Dim, const TwistedCell& c, auto& bad_src, auto& bad_tgt) {
        CellId here = b_map(x, c);
        CellId via_s = b_map(x, t_src(x, c)), via_t = b_map(x, t_tgt(x, c));
        if (via_s != here) bad_src.push_back(render(x, c) + ": " + b.name(0, via_s) + " != " + b.name(0, here));
        if (via_t != here) bad_tgt.push_back(render(x, c) + ": " + b.name(0, via_t) + " != " + b.name(0, here));
      },
      cap);
}

/// k~^i_j s~^i_j(x) = (x_1, ..., x_j, x_{j+1} *^{j+1}_j t_{j+2}(x_{j+2}), k^l_j s^l_j(x_l) for l >= j+2).
inline TwistedCell ks_closed_form(const OmegaStructure& x, const TwistedCell& c, Dim j) {
  const auto& b = x.base();
  TwistedCell out{std::vector<CellId>(c.entries.begin(), c.entries.begin() + j)};
  out.entries.push_back(x.compose(j + 1, j, c.at(j + 1), b.tgt(j + 2, c.at(j + 2))));
  for (Dim l = j + 2; l <= c.level() + 1; ++l) out.entries.push_back(x.iter_unit(j, l, b.src(l, j, c.at(l))));
  return out;
}

/// k~^i_j t~^i_j(x) = (x_1, ..., x_{j+1}, k^l_j t^l_j(x_l) for l >= j+2).
inline TwistedCell kt_closed_form(const OmegaStructure& x, const TwistedCell& c, Dim j) {
  const auto& b = x.base();
  TwistedCell out{std::vector<CellId>(c.entries.begin(), c.entries.begin() + j + 1)};
  for (Dim l = j + 2; l <= c.level() + 1; ++l) out.entries.push_back(x.iter_unit(j, l, b.tgt(l, j, c.at(l))));
  return out;
}

/// Iterated twisted units of iterated twisted boundaries against the closed
/// forms, for all i > j at every level.
inline Report check_ks_kt(const OmegaStructure& x, std::size_t cap = 100) {
  Report report;
  for (Dim i = 1; i + 1 <= x.truncation(); ++i) {
    const auto cells = twisted_cells(x, i);
    for (Dim j = 0; j < i; ++j) {
      std::vector<std::string> bad_s, bad_t;
      // a broken unit table can push an intermediate cell off the twisted
      // set; that counts against the identity rather than aborting the sweep
      auto compare = [&](auto&& lhs, auto&& rhs, const TwistedCell& c, std::vector<std::string>& bad) {
        if (bad.size() >= cap) return;
        try {
          auto got = lhs(), want = rhs();
          if (got != want) bad.push_back(render(x, c) + ": " + render(x, got) + " != " + render(x, want));
        } catch (const Error& e) {
          bad.push_back(render(x, c) + ": " + e.what());
        }
      };
      for (const auto& c : cells) {
        compare([&] { return t_iter_unit(x, t_src(x, c, j), i); }, [&] { return ks_closed_form(x, c, j); }, c, bad_s);
        compare([&] { return t_iter_unit(x, t_tgt(x, c, j), i); }, [&] { return kt_closed_form(x, c, j); }, c, bad_t);
      }
      const std::string scope = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
      report.record("UnitOfSource", scope, bad_s);
      report.record("UnitOfTarget", scope, bad_t);
    }
  }
  return report;
}

/// A cell u of X_i with s~(r_i(u)) != r_{i-1}(s_i(u)), showing that r does
/// not commute with sources.
struct SplittingDefect {
  Dim dim;
  CellId cell;
  TwistedCell via_twisted_source;
  TwistedCell via_base_source;
};

inline std::optional<SplittingDefect> find_splitting_defect(const OmegaStructure& x) {
  for (Dim i = 1; i + 1 <= x.truncation(); ++i)
    for (CellId u = 0; u < x.size(i); ++u) {
      auto ru = r_cell(x, i, u);
      if (!is_twisted_cell(x, ru)) continue;  // only reachable with a broken unit table
      auto lhs = t_src(x, ru);
      auto rhs = r_cell(x, i - 1, x.base().src(i, u));
      if (lhs != rhs) return SplittingDefect{i, u, lhs, rhs};
    }
  return std::nullopt;
}

/// Everything above on one structure: the section identity over the table
/// sweep, both naturality checks and the unit identities.
inline Report check_decalage(const OmegaStructure& x, std::size_t max_width, Dim max_dim, std::size_t cap = 100) {
  Report report = check_section_sweep(x, max_width, max_dim, cap);
  report.append(check_alpha_naturality(x, cap));
  report.append(check_beta_naturality(x, cap));
  report.append(check_ks_kt(x, cap));
  return report;
}

}  // namespace globk
