#pragma once

#include "globk/error.hpp"
#include "globk/omega.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace globk {

/// Finite magma with a designated two-sided unit element.
struct Magma {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = a*b
  std::size_t identity = 0;

  std::size_t size() const noexcept { return names.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }

  /// Two-sided inverse of a, if any.
  std::optional<std::size_t> inverse(std::size_t a) const {
    for (std::size_t b = 0; b < size(); ++b)
      if (mul(a, b) == identity && mul(b, a) == identity) return b;
    return std::nullopt;
  }

  bool is_associative() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        for (std::size_t c = 0; c < size(); ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
    return true;
  }

  bool is_commutative() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool has_unit() const {
    for (std::size_t a = 0; a < size(); ++a)
      if (mul(identity, a) != a || mul(a, identity) != a) return false;
    return true;
  }

  /// Throws NotAGroup unless the table is a group with the stated identity.
  void require_group() const {
    if (names.empty() || table.size() != size() || identity >= size())
      fail(ErrorKind::NotAGroup, "malformed table");
    for (const auto& row : table)
      if (row.size() != size() || std::any_of(row.begin(), row.end(), [&](std::size_t v) { return v >= size(); }))
        fail(ErrorKind::NotAGroup, "malformed table");
    if (!has_unit()) fail(ErrorKind::NotAGroup, "'" + names[identity] + "' is not a unit");
    if (!is_associative()) fail(ErrorKind::NotAGroup, "table is not associative");
    for (std::size_t a = 0; a < size(); ++a)
      if (!inverse(a)) fail(ErrorKind::NotAGroup, "'" + names[a] + "' has no inverse");
  }
};

inline Magma cyclic_group(std::size_t order) {
  if (order == 0) fail(ErrorKind::NotAGroup, "cyclic group of order 0");
  Magma g;
  for (std::size_t a = 0; a < order; ++a) g.names.push_back(std::to_string(a));
  g.table.assign(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) g.table[a][b] = (a + b) % order;
  return g;
}

/// S_3 on permutations of {0,1,2}, each named by its image word; (p*q)(x) = p(q(x)).
inline Magma symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  Magma g;
  for (const auto& q : perms) g.names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  g.table.assign(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      g.table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

/// Product group G x H with names "g.h".
inline Magma direct_product(const Magma& g, const Magma& h) {
  Magma out;
  for (const auto& a : g.names)
    for (const auto& b : h.names) out.names.push_back(a + "." + b);
  const std::size_t m = h.size();
  out.table.assign(g.size() * m, std::vector<std::size_t>(g.size() * m));
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b)
      out.table[a][b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  out.identity = g.identity * m + h.identity;
  return out;
}

/// "zN" for the cyclic group of order N, "s3", or products joined by 'x'
/// such as "z2xz2".
inline Magma named_group(const std::string& name) {
  auto one = [](const std::string& part) -> Magma {
    if (part == "s3") return symmetric_group_3();
    if (part.size() >= 2 && part[0] == 'z' &&
        std::all_of(part.begin() + 1, part.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      return cyclic_group(std::stoul(part.substr(1)));
    fail(ErrorKind::ParseError, "unknown group '" + part + "' (expected zN, s3 or products like z2xz2)");
  };
  std::size_t pos = name.find('x');
  if (pos == std::string::npos) return one(name);
  return direct_product(one(name.substr(0, pos)), named_group(name.substr(pos + 1)));
}

namespace fixtures {

/// Structure with a single cell in each dimension below `level`, the elements
/// of `m` in dimension `level`, and only unit cells above it. Every
/// composition that reaches dimension `level` is the magma product. No
/// algebraic validation: this is also how deliberately broken fixtures are
/// made. Inverse tables are emitted when every element has a two-sided inverse.
inline OmegaStructure concentrated(const Magma& m, Dim level, Dim truncation) {
  if (level < 1 || level > truncation)
    fail(ErrorKind::DimOutOfRange, "level " + std::to_string(level) + " must lie in 1.." + std::to_string(truncation));
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(truncation) + 1);
  std::vector<std::vector<CellId>> src(names.size()), tgt(names.size());
  for (Dim d = 0; d <= truncation; ++d) {
    if (d < level) names[d] = {"*"};
    else names[d] = m.names;
    if (d >= 1) {
      src[d].assign(names[d].size(), 0);
      if (d > level) std::iota(src[d].begin(), src[d].end(), 0);
      tgt[d] = src[d];
    }
  }
  std::vector<std::optional<std::size_t>> inverses(m.size());
  bool invertible = true;
  for (std::size_t a = 0; a < m.size(); ++a) {
    inverses[a] = m.inverse(a);
    invertible = invertible && inverses[a].has_value();
  }

  auto t = OmegaTables::blank(GlobularSet(names, src, tgt), invertible);
  for (Dim i = 1; i <= truncation; ++i) {
    const auto sz = static_cast<CellId>(t.base.size(i));
    for (Dim j = 0; j < i; ++j)
      for (CellId u = 0; u < sz; ++u)
        for (CellId v = 0; v < sz; ++v) {
          if (i < level) t.comp_at(i, j, u, v) = 0;
          else if (j < level) t.comp_at(i, j, u, v) = static_cast<CellId>(m.mul(u, v));
          else if (u == v) t.comp_at(i, j, u, v) = u;
        }
    if (t.inv)
      for (Dim j = 0; j < i; ++j)
        for (CellId u = 0; u < sz; ++u)
          (*t.inv)[i][j][u] = i < level ? 0 : j < level ? static_cast<CellId>(*inverses[u]) : u;
  }
  for (Dim i = 0; i < truncation; ++i)
    for (CellId u = 0; u < t.base.size(i); ++u)
      t.unit[i][u] = i + 1 < level ? 0 : i + 1 == level ? static_cast<CellId>(m.identity) : u;
  return OmegaStructure(std::move(t));
}

/// One object, the group as 1-cells, unit cells above.
inline OmegaStructure delooping(const Magma& group, Dim truncation) {
  group.require_group();
  return concentrated(group, 1, truncation);
}

/// The abelian group concentrated in dimension `level` (any group when level is 1).
inline OmegaStructure suspension(const Magma& group, Dim level, Dim truncation) {
  group.require_group();
  if (level >= 2 && !group.is_commutative())
    fail(ErrorKind::NotAbelian, "a group concentrated in dimension >= 2 must be abelian");
  return concentrated(group, level, truncation);
}

/// The set S in every dimension with identity boundaries and only trivial
/// composites.
inline OmegaStructure discrete(const std::vector<std::string>& set, Dim truncation) {
  if (truncation < 0) fail(ErrorKind::DimOutOfRange, "negative truncation");
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(truncation) + 1, set);
  std::vector<CellId> ident(set.size());
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<CellId>> faces(names.size(), ident);
  faces[0].clear();
  auto t = OmegaTables::blank(GlobularSet(names, faces, faces), true);
  for (Dim i = 1; i <= truncation; ++i) {
    for (Dim j = 0; j < i; ++j) {
      for (CellId u = 0; u < set.size(); ++u) {
        t.comp_at(i, j, u, u) = u;
        (*t.inv)[i][j][u] = u;
      }
    }
  }
  for (Dim i = 0; i < truncation; ++i) t.unit[i] = ident;
  return OmegaStructure(std::move(t));
}

/// Componentwise product; cells are named "(a,b)". Inverse tables are kept
/// only when both factors carry them.
inline OmegaStructure product(const OmegaStructure& x, const OmegaStructure& y) {
  if (x.truncation() != y.truncation()) fail(ErrorKind::DimOutOfRange, "factors have different truncations");
  const Dim n = x.truncation();
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<CellId>> src(names.size()), tgt(names.size());
  auto pair = [&](Dim d, CellId a, CellId b) { return static_cast<CellId>(a * y.size(d) + b); };
  for (Dim d = 0; d <= n; ++d) {
    for (CellId a = 0; a < x.size(d); ++a)
      for (CellId b = 0; b < y.size(d); ++b) {
        names[d].push_back("(" + x.name(d, a) + "," + y.name(d, b) + ")");
        if (d >= 1) {
          src[d].push_back(pair(d - 1, x.base().src(d, a), y.base().src(d, b)));
          tgt[d].push_back(pair(d - 1, x.base().tgt(d, a), y.base().tgt(d, b)));
        }
      }
  }
  auto t = OmegaTables::blank(GlobularSet(names, src, tgt), x.has_inverses() && y.has_inverses());
  for (Dim i = 1; i <= n; ++i) {
    const CellId ny = static_cast<CellId>(y.size(i));
    const CellId sz = static_cast<CellId>(t.base.size(i));
    for (Dim j = 0; j < i; ++j) {
      for (CellId u = 0; u < sz; ++u)
        for (CellId v = 0; v < sz; ++v) {
          CellId a = x.try_compose(i, j, u / ny, v / ny);
          CellId b = y.try_compose(i, j, u % ny, v % ny);
          if (a != kNoCell && b != kNoCell) t.comp_at(i, j, u, v) = pair(i, a, b);
        }
      if (t.inv)
        for (CellId u = 0; u < sz; ++u) (*t.inv)[i][j][u] = pair(i, x.inverse(i, j, u / ny), y.inverse(i, j, u % ny));
    }
  }
  for (Dim i = 0; i < n; ++i) {
    const CellId ny = static_cast<CellId>(y.size(i));
    for (CellId u = 0; u < t.base.size(i); ++u) t.unit[i][u] = pair(i + 1, x.unit(i, u / ny), y.unit(i, u % ny));
  }
  return OmegaStructure(std::move(t));
}

}  // namespace fixtures
}  // namespace globk
