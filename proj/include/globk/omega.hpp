#pragma once

#include "globk/error.hpp"
#include "globk/globular_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace globk {

/// Square table for one composition *^i_j, indexed by u * |X_i| + v;
/// kNoCell outside the composable pairs.
using CompTable = std::vector<CellId>;

/// Raw operation tables. `comp[i][j]` and `inv[i][j]` exist for N >= i > j >= 0,
/// `unit[i]` for 0 <= i < N. Fill this in and hand it to OmegaStructure,
/// which does all validation.
struct OmegaTables {
  GlobularSet base;
  std::vector<std::vector<CompTable>> comp;
  std::vector<std::vector<CellId>> unit;
  std::optional<std::vector<std::vector<std::vector<CellId>>>> inv;

  /// Allocates empty tables of the right shapes over `base`.
  static OmegaTables blank(GlobularSet base, bool with_inverses) {
    OmegaTables t{std::move(base), {}, {}, std::nullopt};
    const Dim n = t.base.truncation();
    t.comp.resize(static_cast<std::size_t>(n) + 1);
    for (Dim i = 1; i <= n; ++i) {
      const std::size_t sz = t.base.size(i);
      t.comp[i].assign(static_cast<std::size_t>(i), CompTable(sz * sz, kNoCell));
    }
    t.unit.resize(static_cast<std::size_t>(n));
    for (Dim i = 0; i < n; ++i) t.unit[i].assign(t.base.size(i), kNoCell);
    if (with_inverses) {
      t.inv.emplace(static_cast<std::size_t>(n) + 1);
      for (Dim i = 1; i <= n; ++i)
        (*t.inv)[i].assign(static_cast<std::size_t>(i), std::vector<CellId>(t.base.size(i), kNoCell));
    }
    return t;
  }

  CellId& comp_at(Dim i, Dim j, CellId u, CellId v) { return comp[i][j][u * base.size(i) + v]; }
};

/// A finite truncated infinity-precategory (or pregroupoid when inverse tables
/// are present) given by explicit tables. Construction checks that tables are
/// total and typed and that composition is defined exactly on the composable
/// pairs; the algebraic laws are left to the checkers in axioms.hpp.
class OmegaStructure {
 public:
  explicit OmegaStructure(OmegaTables tables) : t_(std::move(tables)) { validate(); }

  const GlobularSet& base() const noexcept { return t_.base; }
  const OmegaTables& tables() const noexcept { return t_; }
  Dim truncation() const noexcept { return t_.base.truncation(); }
  std::size_t size(Dim i) const { return t_.base.size(i); }
  bool has_inverses() const noexcept { return t_.inv.has_value(); }

  bool composable(Dim i, Dim j, CellId u, CellId v) const {
    return t_.base.src(i, j, u) == t_.base.tgt(i, j, v);
  }

  /// u *^i_j v, defined when s^i_j(u) = t^i_j(v).
  CellId compose(Dim i, Dim j, CellId u, CellId v) const {
    require_pair(i, j);
    t_.base.require_cell(i, u);
    t_.base.require_cell(i, v);
    if (!composable(i, j, u, v)) {
      const auto& b = t_.base;
      fail(ErrorKind::NotComposable, "*^" + std::to_string(i) + "_" + std::to_string(j) + " of " + b.name(i, u) +
                                         " and " + b.name(i, v) + ": source " + b.name(j, b.src(i, j, u)) +
                                         " != target " + b.name(j, b.tgt(i, j, v)));
    }
    return t_.comp[i][j][u * size(i) + v];
  }

  /// Like compose but returns kNoCell instead of throwing; kNoCell inputs
  /// propagate.
  CellId try_compose(Dim i, Dim j, CellId u, CellId v) const noexcept {
    if (u == kNoCell || v == kNoCell) return kNoCell;
    if (i < 1 || i > truncation() || j < 0 || j >= i) return kNoCell;
    const std::size_t n = t_.base.size(i);
    if (u >= n || v >= n) return kNoCell;
    return t_.comp[i][j][u * n + v];
  }

  /// k_i : X_i -> X_{i+1}.
  CellId unit(Dim i, CellId u) const {
    if (i < 0 || i >= truncation())
      fail(ErrorKind::DimOutOfRange, "unit k_" + std::to_string(i) + " needs dimension " + std::to_string(i + 1) +
                                         " <= " + std::to_string(truncation()));
    t_.base.require_cell(i, u);
    return t_.unit[i][u];
  }

  /// k^i_j = k_{i-1} ... k_j : X_j -> X_i; the identity when i == j.
  CellId iter_unit(Dim j, Dim i, CellId u) const {
    if (j > i) fail(ErrorKind::DimOutOfRange, "iterated unit from " + std::to_string(j) + " to " + std::to_string(i));
    t_.base.require_cell(j, u);
    for (Dim d = j; d < i; ++d) u = unit(d, u);
    return u;
  }

  /// w^i_j(u).
  CellId inverse(Dim i, Dim j, CellId u) const {
    if (!has_inverses()) fail(ErrorKind::InversesAbsent, "structure carries no inverse tables");
    require_pair(i, j);
    t_.base.require_cell(i, u);
    return (*t_.inv)[i][j][u];
  }

  const std::string& name(Dim i, CellId u) const { return t_.base.name(i, u); }

  void require_pair(Dim i, Dim j) const {
    if (!(i > j && j >= 0 && i <= truncation()))
      fail(ErrorKind::DimOutOfRange, "operation index (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") needs N >= i > j >= 0 with N = " + std::to_string(truncation()));
  }

 private:
  void validate() const {
    const Dim n = truncation();
    const auto& b = t_.base;
    auto where = [](Dim i, Dim j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
    if (t_.comp.size() != static_cast<std::size_t>(n) + 1)
      fail(ErrorKind::InvalidStructure, "composition tables do not match truncation");
    for (Dim i = 1; i <= n; ++i) {
      if (t_.comp[i].size() != static_cast<std::size_t>(i))
        fail(ErrorKind::InvalidStructure, "missing composition tables in dimension " + std::to_string(i));
      const std::size_t sz = b.size(i);
      for (Dim j = 0; j < i; ++j) {
        const auto& table = t_.comp[i][j];
        if (table.size() != sz * sz) fail(ErrorKind::InvalidStructure, "composition table " + where(i, j) + " has wrong size");
        for (CellId u = 0; u < sz; ++u) {
          for (CellId v = 0; v < sz; ++v) {
            CellId w = table[u * sz + v];
            bool inside = composable(i, j, u, v);
            if (inside && w == kNoCell)
              fail(ErrorKind::MissingCell, "composition " + where(i, j) + " undefined on composable pair " +
                                               b.name(i, u) + "|" + b.name(i, v));
            if (!inside && w != kNoCell)
              fail(ErrorKind::InvalidStructure, "composition " + where(i, j) + " defined on non-composable pair " +
                                                    b.name(i, u) + "|" + b.name(i, v));
            if (inside && w >= sz)
              fail(ErrorKind::MissingCell, "composition " + where(i, j) + " value out of range");
          }
        }
      }
    }
    if (t_.unit.size() != static_cast<std::size_t>(n))
      fail(ErrorKind::InvalidStructure, "unit tables do not match truncation");
    for (Dim i = 0; i < n; ++i) {
      if (t_.unit[i].size() != b.size(i))
        fail(ErrorKind::MissingCell, "unit table k_" + std::to_string(i) + " is not total");
      for (CellId v : t_.unit[i])
        if (v >= b.size(i + 1)) fail(ErrorKind::MissingCell, "unit table k_" + std::to_string(i) + " value out of range");
    }
    if (t_.inv) {
      const auto& inv = *t_.inv;
      if (inv.size() != static_cast<std::size_t>(n) + 1)
        fail(ErrorKind::InvalidStructure, "inverse tables do not match truncation");
      for (Dim i = 1; i <= n; ++i) {
        if (inv[i].size() != static_cast<std::size_t>(i))
          fail(ErrorKind::InvalidStructure, "missing inverse tables in dimension " + std::to_string(i));
        for (Dim j = 0; j < i; ++j) {
          if (inv[i][j].size() != b.size(i))
            fail(ErrorKind::MissingCell, "inverse table " + where(i, j) + " is not total");
          for (CellId v : inv[i][j])
            if (v >= b.size(i)) fail(ErrorKind::MissingCell, "inverse table " + where(i, j) + " value out of range");
        }
      }
    }
  }

  OmegaTables t_;
};

}  // namespace globk
