#pragma once

#include "globk/error.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace globk {

/// Cell dimension. Signed so that `j - 1` style arithmetic never wraps.
using Dim = int;

/// Position of a cell inside its dimension, in declaration order.
using CellId = std::uint32_t;

inline constexpr CellId kNoCell = std::numeric_limits<CellId>::max();

enum class Side { Source, Target };

/// A cell named by its dimension and position. Used in diagnostics.
struct CellRef {
  Dim dim = 0;
  CellId id = 0;
  friend bool operator==(const CellRef&, const CellRef&) = default;
};

/// Name-keyed input form of a globular set, as read from a file.
/// `src[i-1]` and `tgt[i-1]` hold the maps X_i -> X_{i-1}.
struct RawGlobularSet {
  Dim truncation = 0;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::map<std::string, std::string>> src;
  std::vector<std::map<std::string, std::string>> tgt;
};

class GlobularViolationError : public Error {
 public:
  GlobularViolationError(std::vector<CellRef> offenders, const std::string& what)
      : Error(ErrorKind::GlobularViolation, what), offenders_(std::move(offenders)) {}

  const std::vector<CellRef>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<CellRef> offenders_;
};

/// Finite globular set truncated at dimension N. Immutable once constructed;
/// the constructor is the only way in and it rejects anything that violates
/// the globular relations.
class GlobularSet {
 public:
  GlobularSet() : GlobularSet({{}}, {{}}, {{}}) {}

  /// `src[i]`/`tgt[i]` for 1 <= i <= N map X_i into X_{i-1}; index 0 is unused.
  GlobularSet(std::vector<std::vector<std::string>> names, std::vector<std::vector<CellId>> src,
              std::vector<std::vector<CellId>> tgt)
      : names_(std::move(names)), src_(std::move(src)), tgt_(std::move(tgt)) {
    if (names_.empty()) fail(ErrorKind::InvalidStructure, "a globular set needs at least dimension 0");
    src_.resize(names_.size());
    tgt_.resize(names_.size());
    index_.resize(names_.size());
    for (Dim i = 0; i <= truncation(); ++i) {
      for (CellId u = 0; u < names_[i].size(); ++u) {
        if (!index_[i].emplace(names_[i][u], u).second)
          fail(ErrorKind::InvalidStructure,
               "duplicate cell name '" + names_[i][u] + "' in dimension " + std::to_string(i));
      }
    }
    for (Dim i = 1; i <= truncation(); ++i) {
      for (const auto* table : {&src_[i], &tgt_[i]}) {
        if (table->size() != names_[i].size())
          fail(ErrorKind::MissingCell, "boundary table of dimension " + std::to_string(i) + " is not total");
        for (CellId v : *table)
          if (v >= names_[i - 1].size())
            fail(ErrorKind::MissingCell, "boundary value out of range in dimension " + std::to_string(i));
      }
    }
    check_relations();
  }

  Dim truncation() const noexcept { return static_cast<Dim>(names_.size()) - 1; }

  std::size_t size(Dim i) const {
    require_dim(i);
    return names_[i].size();
  }

  const std::vector<std::string>& names(Dim i) const {
    require_dim(i);
    return names_[i];
  }

  const std::string& name(Dim i, CellId u) const {
    require_cell(i, u);
    return names_[i][u];
  }

  std::optional<CellId> find(Dim i, std::string_view name) const {
    require_dim(i);
    auto it = index_[i].find(std::string(name));
    if (it == index_[i].end()) return std::nullopt;
    return it->second;
  }

  CellId src(Dim i, CellId u) const {
    require_face(i, u);
    return src_[i][u];
  }

  CellId tgt(Dim i, CellId u) const {
    require_face(i, u);
    return tgt_[i][u];
  }

  CellId face(Side side, Dim i, CellId u) const { return side == Side::Source ? src(i, u) : tgt(i, u); }

  /// Iterated boundary s^i_j or t^i_j; the identity when j == i.
  CellId boundary(Side side, Dim i, Dim j, CellId u) const {
    if (j < 0 || j > i)
      fail(ErrorKind::DimOutOfRange, "boundary from dimension " + std::to_string(i) + " to " + std::to_string(j));
    require_cell(i, u);
    for (Dim d = i; d > j; --d) u = face(side, d, u);
    return u;
  }

  CellId src(Dim i, Dim j, CellId u) const { return boundary(Side::Source, i, j, u); }
  CellId tgt(Dim i, Dim j, CellId u) const { return boundary(Side::Target, i, j, u); }

  const std::vector<CellId>& src_table(Dim i) const {
    require_face_dim(i);
    return src_[i];
  }
  const std::vector<CellId>& tgt_table(Dim i) const {
    require_face_dim(i);
    return tgt_[i];
  }

  void require_dim(Dim i) const {
    if (i < 0 || i > truncation())
      fail(ErrorKind::DimOutOfRange,
           "dimension " + std::to_string(i) + " outside 0.." + std::to_string(truncation()));
  }

  void require_cell(Dim i, CellId u) const {
    require_dim(i);
    if (u >= names_[i].size())
      fail(ErrorKind::IndexOutOfRange, "cell #" + std::to_string(u) + " in dimension " + std::to_string(i));
  }

 private:
  void require_face_dim(Dim i) const {
    if (i < 1 || i > truncation())
      fail(ErrorKind::DimOutOfRange, "no boundary maps out of dimension " + std::to_string(i));
  }

  void require_face(Dim i, CellId u) const {
    require_face_dim(i);
    if (u >= names_[i].size())
      fail(ErrorKind::IndexOutOfRange, "cell #" + std::to_string(u) + " in dimension " + std::to_string(i));
  }

  void check_relations() const {
    std::vector<CellRef> bad;
    std::ostringstream msg;
    msg << "globular relations fail at";
    for (Dim i = 2; i <= truncation(); ++i) {
      for (CellId u = 0; u < names_[i].size(); ++u) {
        bool ok = src_[i - 1][src_[i][u]] == src_[i - 1][tgt_[i][u]] &&
                  tgt_[i - 1][src_[i][u]] == tgt_[i - 1][tgt_[i][u]];
        if (!ok) {
          bad.push_back({i, u});
          msg << " (" << i << ", " << names_[i][u] << ")";
        }
      }
    }
    if (!bad.empty()) throw GlobularViolationError(std::move(bad), msg.str());
  }

  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<CellId>> src_;
  std::vector<std::vector<CellId>> tgt_;
  std::vector<std::unordered_map<std::string, CellId>> index_;
};

/// Builds a GlobularSet from name-keyed tables, reporting undeclared names as
/// MissingCell and every broken relation at once as GlobularViolation.
inline GlobularSet validate_globular_set(const RawGlobularSet& raw) {
  if (raw.truncation < 0) fail(ErrorKind::DimOutOfRange, "negative truncation");
  if (raw.cells.size() != static_cast<std::size_t>(raw.truncation) + 1)
    fail(ErrorKind::InvalidStructure, "expected " + std::to_string(raw.truncation + 1) + " cell lists, got " +
                                          std::to_string(raw.cells.size()));
  const auto n = static_cast<std::size_t>(raw.truncation);
  if (raw.src.size() != n || raw.tgt.size() != n)
    fail(ErrorKind::InvalidStructure, "expected " + std::to_string(n) + " source and target tables");

  std::vector<std::unordered_map<std::string, CellId>> index(raw.cells.size());
  for (std::size_t i = 0; i < raw.cells.size(); ++i)
    for (CellId u = 0; u < raw.cells[i].size(); ++u) index[i].emplace(raw.cells[i][u], u);

  auto lookup = [&](std::size_t dim, const std::string& name, const char* what) {
    auto it = index[dim].find(name);
    if (it == index[dim].end())
      fail(ErrorKind::MissingCell, std::string(what) + " refers to undeclared cell '" + name + "' of dimension " +
                                       std::to_string(dim));
    return it->second;
  };

  std::vector<std::vector<CellId>> src(raw.cells.size()), tgt(raw.cells.size());
  for (std::size_t i = 1; i < raw.cells.size(); ++i) {
    for (auto [table, out, what] : {std::tuple{&raw.src[i - 1], &src[i], "src"},
                                    std::tuple{&raw.tgt[i - 1], &tgt[i], "tgt"}}) {
      out->assign(raw.cells[i].size(), kNoCell);
      for (const auto& [key, value] : *table) {
        CellId u = lookup(i, key, what);
        (*out)[u] = lookup(i - 1, value, what);
      }
      for (CellId u = 0; u < out->size(); ++u)
        if ((*out)[u] == kNoCell)
          fail(ErrorKind::MissingCell, std::string(what) + " has no entry for '" + raw.cells[i][u] + "'");
    }
  }
  return GlobularSet(raw.cells, std::move(src), std::move(tgt));
}

}  // namespace globk
