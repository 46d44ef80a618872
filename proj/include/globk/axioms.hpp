#pragma once

#include "globk/omega.hpp"
#include "globk/parallel.hpp"
#include "globk/report.hpp"

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace globk {

enum class Axiom { Ass, Exc, Lun, Run, Fun, LInv, RInv, FInv };

inline std::string_view to_string(Axiom a) {
  static constexpr std::array names{"Ass", "Exc", "Lun", "Run", "Fun", "LInv", "RInv", "FInv"};
  return names[static_cast<std::size_t>(a)];
}

inline Axiom parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::Ass, Axiom::Exc, Axiom::Lun, Axiom::Run, Axiom::Fun, Axiom::LInv, Axiom::RInv, Axiom::FInv})
    if (to_string(a) == name) return a;
  fail(ErrorKind::ParseError, "unknown axiom '" + std::string(name) + "'");
}

/// Subscripts of an axiom instance. `k` is the third index of Exc (i > j > k)
/// and the j' of FInv; unused otherwise.
struct AxiomIndex {
  Dim i = 0;
  Dim j = 0;
  Dim k = -1;

  std::string to_string() const {
    std::string s = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
    if (k >= 0) s += ",k=" + std::to_string(k);
    return s;
  }
  friend bool operator==(const AxiomIndex&, const AxiomIndex&) = default;
};

/// A counterexample: the axiom instance, the cells of the offending tuple and
/// a printable rendering.
struct Violation {
  Axiom axiom;
  AxiomIndex at;
  std::vector<CellId> cells;
  std::string witness;
};

/// Optional axioms on top of Ass and Exc, which are always checked:
/// l = Lun, r = Run, f = Fun, li = LInv, ri = RInv.
struct AxiomFlags {
  bool l = false, r = false, f = false, li = false, ri = false;

  static AxiomFlags all() { return {true, true, true, true, true}; }
  static AxiomFlags categorical() { return {true, true, true, false, false}; }

  /// Comma-separated, e.g. "l,r,f,li,ri"; the empty string selects nothing.
  static AxiomFlags parse(std::string_view text) {
    AxiomFlags flags;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok == "l") flags.l = true;
      else if (tok == "r") flags.r = true;
      else if (tok == "f") flags.f = true;
      else if (tok == "li") flags.li = true;
      else if (tok == "ri") flags.ri = true;
      else if (!tok.empty()) fail(ErrorKind::ParseError, "unknown axiom flag '" + std::string(tok) + "'");
      pos = end + 1;
    }
    return flags;
  }

  std::string to_string() const {
    std::string s;
    auto add = [&](bool on, const char* name) {
      if (!on) return;
      if (!s.empty()) s += ",";
      s += name;
    };
    add(l, "l");
    add(r, "r");
    add(f, "f");
    add(li, "li");
    add(ri, "ri");
    return s;
  }

  bool needs_inverses() const noexcept { return li || ri; }
  friend bool operator==(const AxiomFlags&, const AxiomFlags&) = default;
};

struct CheckOptions {
  /// Maximum counterexamples collected per check instance.
  std::size_t cap = 100;
};

namespace detail {

class Witness {
 public:
  explicit Witness(const OmegaStructure& x) : x_(x) {}

  std::string cell(Dim d, CellId u) const {
    if (u == kNoCell) return "<undefined>";
    return x_.name(d, u);
  }

  std::string tuple(Dim d, const std::vector<CellId>& cells) const {
    std::string s = "(";
    for (std::size_t k = 0; k < cells.size(); ++k) s += (k ? "," : "") + cell(d, cells[k]);
    return s + ")";
  }

 private:
  const OmegaStructure& x_;
};

/// targets[b] = cells v of X_i with t^i_j(v) = b, ascending.
inline std::vector<std::vector<CellId>> by_target(const OmegaStructure& x, Dim i, Dim j) {
  std::vector<std::vector<CellId>> out(x.size(j));
  for (CellId v = 0; v < x.size(i); ++v) out[x.base().tgt(i, j, v)].push_back(v);
  return out;
}

inline void require_inverses(const OmegaStructure& x, Axiom a) {
  if (!x.has_inverses())
    fail(ErrorKind::InversesAbsent, std::string(to_string(a)) + " needs inverse tables");
}

}  // namespace detail

/// Every counterexample (up to the cap) of one axiom instance, found by
/// enumerating the whole domain of the axiom. A composite that should exist
/// but is undefined counts as a counterexample.
inline std::vector<Violation> check_axiom(const OmegaStructure& x, Axiom axiom, AxiomIndex at,
                                          CheckOptions opts = {}) {
  const Dim n = x.truncation();
  const Dim i = at.i, j = at.j, k = at.k;
  const auto& b = x.base();
  auto out_of_range = [&] {
    fail(ErrorKind::DimOutOfRange, std::string(to_string(axiom)) + " at " + at.to_string() +
                                       " is outside truncation " + std::to_string(n));
  };
  if (!(i > j && j >= 0 && i <= n)) out_of_range();
  switch (axiom) {
    case Axiom::Exc:
      if (!(j > k && k >= 0)) out_of_range();
      break;
    case Axiom::Fun:
      if (i + 1 > n) out_of_range();
      break;
    case Axiom::FInv:
      if (!(k >= 0 && k < i)) out_of_range();
      detail::require_inverses(x, axiom);
      break;
    case Axiom::LInv:
    case Axiom::RInv:
      detail::require_inverses(x, axiom);
      break;
    default:
      break;
  }

  detail::Witness w(x);
  std::vector<Violation> found;
  auto c = [&](Dim d, Dim e, CellId u, CellId v) { return x.try_compose(d, e, u, v); };
  auto report = [&](std::vector<CellId> cells, Dim d, CellId lhs, CellId rhs) {
    std::string text = w.tuple(i, cells) + ": " + w.cell(d, lhs) + " != " + w.cell(d, rhs);
    found.push_back({axiom, at, std::move(cells), std::move(text)});
    return found.size() >= opts.cap;
  };
  auto differs = [](CellId lhs, CellId rhs) { return lhs == kNoCell || rhs == kNoCell || lhs != rhs; };
  auto winv = [&](Dim d, Dim e, CellId u) { return u == kNoCell ? kNoCell : (*x.tables().inv)[d][e][u]; };

  const auto tj = detail::by_target(x, i, j);
  switch (axiom) {
    case Axiom::Ass:
      for (CellId u = 0; u < x.size(i); ++u)
        for (CellId v : tj[b.src(i, j, u)])
          for (CellId z : tj[b.src(i, j, v)]) {
            CellId lhs = c(i, j, c(i, j, u, v), z), rhs = c(i, j, u, c(i, j, v, z));
            if (differs(lhs, rhs) && report({u, v, z}, i, lhs, rhs)) return found;
          }
      break;
    case Axiom::Exc: {
      const auto tk = detail::by_target(x, i, k);
      for (CellId u = 0; u < x.size(i); ++u)
        for (CellId u2 : tj[b.src(i, j, u)])
          for (CellId v : tk[b.src(i, k, u2)])
            for (CellId v2 : tj[b.src(i, j, v)]) {
              CellId lhs = c(i, k, c(i, j, u, u2), c(i, j, v, v2));
              CellId rhs = c(i, j, c(i, k, u, v), c(i, k, u2, v2));
              if (differs(lhs, rhs) && report({u, u2, v, v2}, i, lhs, rhs)) return found;
            }
      break;
    }
    case Axiom::Lun:
      for (CellId u = 0; u < x.size(i); ++u) {
        CellId lhs = c(i, j, x.iter_unit(j, i, b.tgt(i, j, u)), u);
        if (differs(lhs, u) && report({u}, i, lhs, u)) return found;
      }
      break;
    case Axiom::Run:
      for (CellId u = 0; u < x.size(i); ++u) {
        CellId lhs = c(i, j, u, x.iter_unit(j, i, b.src(i, j, u)));
        if (differs(lhs, u) && report({u}, i, lhs, u)) return found;
      }
      break;
    case Axiom::Fun:
      for (CellId u = 0; u < x.size(i); ++u)
        for (CellId v : tj[b.src(i, j, u)]) {
          CellId uv = c(i, j, u, v);
          CellId lhs = uv == kNoCell ? kNoCell : x.unit(i, uv);
          CellId rhs = c(i + 1, j, x.unit(i, u), x.unit(i, v));
          if (differs(lhs, rhs) && report({u, v}, i + 1, lhs, rhs)) return found;
        }
      break;
    case Axiom::LInv:
      for (CellId u = 0; u < x.size(i); ++u) {
        CellId lhs = c(i, j, winv(i, j, u), u), rhs = x.iter_unit(j, i, b.src(i, j, u));
        if (differs(lhs, rhs) && report({u}, i, lhs, rhs)) return found;
      }
      break;
    case Axiom::RInv:
      for (CellId u = 0; u < x.size(i); ++u) {
        CellId lhs = c(i, j, u, winv(i, j, u)), rhs = x.iter_unit(j, i, b.tgt(i, j, u));
        if (differs(lhs, rhs) && report({u}, i, lhs, rhs)) return found;
      }
      break;
    case Axiom::FInv:
      for (CellId u = 0; u < x.size(i); ++u)
        for (CellId v : tj[b.src(i, j, u)]) {
          CellId lhs = winv(i, k, c(i, j, u, v));
          CellId rhs = k == j ? c(i, j, winv(i, k, v), winv(i, k, u)) : c(i, j, winv(i, k, u), winv(i, k, v));
          if (differs(lhs, rhs) && report({u, v}, i, lhs, rhs)) return found;
        }
      break;
  }
  return found;
}

/// All meaningful subscripts of an axiom at the structure's truncation.
inline std::vector<AxiomIndex> axiom_instances(const OmegaStructure& x, Axiom axiom) {
  std::vector<AxiomIndex> out;
  const Dim n = x.truncation();
  for (Dim i = 1; i <= n; ++i)
    for (Dim j = 0; j < i; ++j) {
      switch (axiom) {
        case Axiom::Exc:
          for (Dim k = 0; k < j; ++k) out.push_back({i, j, k});
          break;
        case Axiom::Fun:
          if (i < n) out.push_back({i, j});
          break;
        case Axiom::FInv:
          for (Dim k = 0; k < i; ++k) out.push_back({i, j, k});
          break;
        default:
          out.push_back({i, j});
      }
    }
  return out;
}

inline std::vector<Axiom> selected_axioms(const AxiomFlags& flags) {
  std::vector<Axiom> out{Axiom::Ass, Axiom::Exc};
  if (flags.l) out.push_back(Axiom::Lun);
  if (flags.r) out.push_back(Axiom::Run);
  if (flags.f) out.push_back(Axiom::Fun);
  if (flags.li) out.push_back(Axiom::LInv);
  if (flags.ri) out.push_back(Axiom::RInv);
  return out;
}

/// Runs one axiom over all of its instances, one report line per instance.
inline Report check_axiom_all(const OmegaStructure& x, Axiom axiom, CheckOptions opts = {}) {
  const auto instances = axiom_instances(x, axiom);
  auto results = parallel_map(instances.size(), [&](std::size_t n) { return check_axiom(x, axiom, instances[n], opts); });
  Report report;
  for (std::size_t n = 0; n < instances.size(); ++n) {
    std::vector<std::string> witnesses;
    for (const auto& v : results[n]) witnesses.push_back(v.witness);
    report.record(std::string(to_string(axiom)), instances[n].to_string(), witnesses);
  }
  return report;
}

/// Ass and Exc plus the flagged axioms, at every meaningful subscript.
inline Report check_all(const OmegaStructure& x, const AxiomFlags& flags, CheckOptions opts = {}) {
  if (flags.needs_inverses() && !x.has_inverses())
    fail(ErrorKind::InversesAbsent, "flags '" + flags.to_string() + "' need inverse tables");
  Report report;
  for (Axiom a : selected_axioms(flags)) report.append(check_axiom_all(x, a, opts));
  return report;
}

/// The boundary laws every precategory (and pregroupoid, when inverse tables
/// are present) must satisfy: how s and t act on composites, on units and on
/// inverses.
inline Report check_structure(const OmegaStructure& x, CheckOptions opts = {}) {
  Report report;
  const auto& b = x.base();
  const Dim n = x.truncation();
  detail::Witness w(x);

  for (Dim i = 1; i <= n; ++i) {
    for (Dim j = 0; j < i; ++j) {
      const auto tj = detail::by_target(x, i, j);
      std::vector<std::string> bad_src, bad_tgt;
      for (CellId u = 0; u < x.size(i); ++u) {
        for (CellId v : tj[b.src(i, j, u)]) {
          CellId uv = x.try_compose(i, j, u, v);
          CellId s = b.src(i, uv), t = b.tgt(i, uv);
          CellId want_s = j == i - 1 ? b.src(i, v) : x.try_compose(i - 1, j, b.src(i, u), b.src(i, v));
          CellId want_t = j == i - 1 ? b.tgt(i, u) : x.try_compose(i - 1, j, b.tgt(i, u), b.tgt(i, v));
          auto text = [&](CellId got, CellId want) {
            return w.tuple(i, {u, v}) + ": " + w.cell(i - 1, got) + " != " + w.cell(i - 1, want);
          };
          if (s != want_s && bad_src.size() < opts.cap) bad_src.push_back(text(s, want_s));
          if (t != want_t && bad_tgt.size() < opts.cap) bad_tgt.push_back(text(t, want_t));
        }
      }
      const std::string scope = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
      report.record("ComposeSource", scope, bad_src);
      report.record("ComposeTarget", scope, bad_tgt);
    }
  }

  for (Dim i = 0; i < n; ++i) {
    std::vector<std::string> bad;
    for (CellId u = 0; u < x.size(i); ++u) {
      CellId k = x.unit(i, u);
      if ((b.src(i + 1, k) != u || b.tgt(i + 1, k) != u) && bad.size() < opts.cap)
        bad.push_back("(" + w.cell(i, u) + "): k(u)=" + w.cell(i + 1, k) + " has boundary " +
                      w.cell(i, b.src(i + 1, k)) + " -> " + w.cell(i, b.tgt(i + 1, k)));
    }
    report.record("UnitBoundary", "i=" + std::to_string(i), bad);
  }

  if (x.has_inverses()) {
    for (Dim i = 1; i <= n; ++i) {
      for (Dim j = 0; j < i; ++j) {
        std::vector<std::string> bad_src, bad_tgt;
        for (CellId u = 0; u < x.size(i); ++u) {
          CellId v = x.inverse(i, j, u);
          CellId want_s = j == i - 1 ? b.tgt(i, u) : x.inverse(i - 1, j, b.src(i, u));
          CellId want_t = j == i - 1 ? b.src(i, u) : x.inverse(i - 1, j, b.tgt(i, u));
          auto text = [&](CellId got, CellId want) {
            return "(" + w.cell(i, u) + "): " + w.cell(i - 1, got) + " != " + w.cell(i - 1, want);
          };
          if (b.src(i, v) != want_s && bad_src.size() < opts.cap) bad_src.push_back(text(b.src(i, v), want_s));
          if (b.tgt(i, v) != want_t && bad_tgt.size() < opts.cap) bad_tgt.push_back(text(b.tgt(i, v), want_t));
        }
        const std::string scope = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
        report.record("InverseSource", scope, bad_src);
        report.record("InverseTarget", scope, bad_tgt);
      }
    }
  }
  return report;
}

}  // namespace globk
