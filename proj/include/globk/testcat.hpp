#pragma once

#include "globk/delta.hpp"
#include "globk/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace globk {

inline constexpr std::size_t kNoArrow = std::numeric_limits<std::size_t>::max();

struct Arrow {
  std::string name;
  std::size_t dom = 0;
  std::size_t cod = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite category. Composition is stored only on composable pairs and the
/// constructor validates typing, unit laws and associativity exhaustively.
/// Whether the constructor scans all composable triples. Categories built
/// from composition of functions may skip it; the scan is cubic.
enum class Associativity { Check, ByConstruction };

class SmallCategory {
 public:
  /// `comp(g, f)` is asked for g o f on every pair with cod f = dom g and
  /// must return an arrow index, or kNoArrow when undefined (MissingCell).
  SmallCategory(std::vector<std::string> objects, std::vector<Arrow> arrows, std::vector<std::size_t> identities,
                const std::function<std::size_t(std::size_t, std::size_t)>& comp,
                Associativity assoc = Associativity::Check)
      : objects_(std::move(objects)), arrows_(std::move(arrows)), ids_(std::move(identities)) {
    const std::size_t n = objects_.size();
    if (ids_.size() != n) fail(ErrorKind::MissingCell, "one identity per object is required");
    into_.resize(n);
    out_of_.resize(n);
    pos_in_.resize(arrows_.size());
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      const auto& a = arrows_[f];
      if (a.dom >= n || a.cod >= n) fail(ErrorKind::MissingCell, "arrow '" + a.name + "' has an undeclared end");
      pos_in_[f] = into_[a.cod].size();
      into_[a.cod].push_back(f);
      out_of_[a.dom].push_back(f);
    }
    for (std::size_t o = 0; o < n; ++o) {
      if (ids_[o] >= arrows_.size() || arrows_[ids_[o]].dom != o || arrows_[ids_[o]].cod != o)
        fail(ErrorKind::InvalidStructure, "identity of '" + objects_[o] + "' is not an endomorphism of it");
    }
    comp_.resize(arrows_.size());
    for (std::size_t g = 0; g < arrows_.size(); ++g) {
      const auto& in = into_[arrows_[g].dom];
      comp_[g].resize(in.size());
      for (std::size_t p = 0; p < in.size(); ++p) {
        const std::size_t f = in[p];
        const std::size_t h = comp(g, f);
        if (h >= arrows_.size()) fail(ErrorKind::MissingCell, "composite " + pair_name(g, f) + " is undefined");
        if (arrows_[h].dom != arrows_[f].dom || arrows_[h].cod != arrows_[g].cod)
          fail(ErrorKind::InvalidStructure, "composite " + pair_name(g, f) + " = '" + arrows_[h].name +
                                                "' has the wrong ends");
        comp_[g][p] = h;
      }
    }
    validate_laws(assoc == Associativity::Check);
  }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t f) const { return arrows_.at(f); }
  std::size_t identity(std::size_t o) const { return ids_.at(o); }
  /// Arrows with codomain o, resp. domain o.
  const std::vector<std::size_t>& into(std::size_t o) const { return into_.at(o); }
  const std::vector<std::size_t>& out_of(std::size_t o) const { return out_of_.at(o); }

  std::vector<std::size_t> hom(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t f : out_of_.at(a))
      if (arrows_[f].cod == b) out.push_back(f);
    return out;
  }

  /// g o f.
  std::size_t compose(std::size_t g, std::size_t f) const {
    if (g >= arrows_.size() || f >= arrows_.size()) fail(ErrorKind::IndexOutOfRange, "arrow index");
    if (arrows_[f].cod != arrows_[g].dom) fail(ErrorKind::NotComposable, pair_name(g, f));
    return comp_[g][pos_in_[f]];
  }

  std::optional<std::size_t> find_object(const std::string& name) const {
    for (std::size_t o = 0; o < objects_.size(); ++o)
      if (objects_[o] == name) return o;
    return std::nullopt;
  }

 private:
  std::string pair_name(std::size_t g, std::size_t f) const {
    return "'" + arrows_[g].name + "' o '" + arrows_[f].name + "'";
  }

  void validate_laws(bool associativity) const {
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      if (compose(ids_[arrows_[f].cod], f) != f || compose(f, ids_[arrows_[f].dom]) != f)
        fail(ErrorKind::InvalidStructure, "unit law fails at '" + arrows_[f].name + "'");
    }
    if (!associativity) return;
    for (std::size_t g = 0; g < arrows_.size(); ++g)
      for (std::size_t f : into_[arrows_[g].dom])
        for (std::size_t e : into_[arrows_[f].dom])
          if (compose(compose(g, f), e) != compose(g, compose(f, e)))
            fail(ErrorKind::InvalidStructure, "associativity fails at ('" + arrows_[g].name + "','" +
                                                  arrows_[f].name + "','" + arrows_[e].name + "')");
  }

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> ids_;
  std::vector<std::vector<std::size_t>> into_, out_of_;
  std::vector<std::size_t> pos_in_;
  std::vector<std::vector<std::size_t>> comp_;  // comp_[g][pos_in_[f]] = g o f
};

using CategoryPtr = std::shared_ptr<const SmallCategory>;

/// Contravariant functor into finite sets: F(g): F(cod g) -> F(dom g).
class Presheaf {
 public:
  Presheaf(CategoryPtr base, std::vector<std::vector<std::string>> values, std::vector<std::vector<std::size_t>> action)
      : base_(std::move(base)), values_(std::move(values)), action_(std::move(action)) {
    const auto& c = *base_;
    if (values_.size() != c.object_count()) fail(ErrorKind::MissingCell, "one value set per object is required");
    if (action_.size() != c.arrow_count()) fail(ErrorKind::MissingCell, "one action table per arrow is required");
    for (std::size_t g = 0; g < c.arrow_count(); ++g) {
      const auto& a = c.arrow(g);
      if (action_[g].size() != values_[a.cod].size())
        fail(ErrorKind::MissingCell, "action of '" + a.name + "' is not total");
      for (std::size_t v : action_[g])
        if (v >= values_[a.dom].size()) fail(ErrorKind::MissingCell, "action of '" + a.name + "' leaves its target");
    }
    for (std::size_t o = 0; o < c.object_count(); ++o)
      for (std::size_t x = 0; x < values_[o].size(); ++x)
        if (act(c.identity(o), x) != x)
          fail(ErrorKind::InvalidStructure, "identity of '" + c.objects()[o] + "' acts non-trivially");
    for (std::size_t g = 0; g < c.arrow_count(); ++g)
      for (std::size_t f : c.into(c.arrow(g).dom))
        for (std::size_t x = 0; x < values_[c.arrow(g).cod].size(); ++x)
          if (act(c.compose(g, f), x) != act(f, act(g, x)))
            fail(ErrorKind::InvalidStructure, "functoriality fails at ('" + c.arrow(g).name + "','" +
                                                  c.arrow(f).name + "')");
  }

  const SmallCategory& base() const noexcept { return *base_; }
  const CategoryPtr& base_ptr() const noexcept { return base_; }
  const std::vector<std::string>& values(std::size_t o) const { return values_.at(o); }
  std::size_t act(std::size_t g, std::size_t x) const { return action_.at(g).at(x); }
  const std::vector<std::vector<std::size_t>>& action() const noexcept { return action_; }

 private:
  CategoryPtr base_;
  std::vector<std::vector<std::string>> values_;
  std::vector<std::vector<std::size_t>> action_;
};

/// Hom(-, a).
inline Presheaf representable(const CategoryPtr& c, std::size_t a) {
  std::vector<std::vector<std::string>> values(c->object_count());
  std::vector<std::vector<std::size_t>> pos(c->object_count());
  std::vector<std::size_t> where(c->arrow_count(), kNoArrow);
  for (std::size_t b = 0; b < c->object_count(); ++b)
    for (std::size_t h : c->hom(b, a)) {
      where[h] = values[b].size();
      values[b].push_back(c->arrow(h).name);
      pos[b].push_back(h);
    }
  std::vector<std::vector<std::size_t>> action(c->arrow_count());
  for (std::size_t g = 0; g < c->arrow_count(); ++g)
    for (std::size_t h : pos[c->arrow(g).cod]) action[g].push_back(where[c->compose(h, g)]);
  return {c, std::move(values), std::move(action)};
}

/// The constant one-point presheaf.
inline Presheaf terminal_presheaf(const CategoryPtr& c) {
  return {c, std::vector<std::vector<std::string>>(c->object_count(), {"*"}),
          std::vector<std::vector<std::size_t>>(c->arrow_count(), {0})};
}

inline Presheaf product_presheaf(const Presheaf& f, const Presheaf& g) {
  if (f.base_ptr() != g.base_ptr()) fail(ErrorKind::InvalidStructure, "presheaves live over different categories");
  const auto& c = f.base();
  std::vector<std::vector<std::string>> values(c.object_count());
  for (std::size_t o = 0; o < c.object_count(); ++o)
    for (const auto& x : f.values(o))
      for (const auto& y : g.values(o)) values[o].push_back("(" + x + "," + y + ")");
  std::vector<std::vector<std::size_t>> action(c.arrow_count());
  for (std::size_t h = 0; h < c.arrow_count(); ++h) {
    const auto& a = c.arrow(h);
    const std::size_t ng = g.values(a.cod).size(), ng_dom = g.values(a.dom).size();
    for (std::size_t p = 0; p < values[a.cod].size(); ++p)
      action[h].push_back(f.act(h, p / ng) * ng_dom + g.act(h, p % ng));
  }
  return {f.base_ptr(), std::move(values), std::move(action)};
}

/// A/F with its projection data: element objects are (a, x) and an arrow
/// (g, x') goes from (dom g, F(g)(x')) to (cod g, x').
struct Elements {
  CategoryPtr category;
  std::vector<std::pair<std::size_t, std::size_t>> objects;  // (a, x)
  std::vector<std::pair<std::size_t, std::size_t>> arrows;   // (g, x')
};

inline Elements category_of_elements(const Presheaf& f) {
  const auto& c = f.base();
  Elements el;
  std::vector<std::size_t> first_object(c.object_count());
  std::vector<std::string> names;
  for (std::size_t a = 0; a < c.object_count(); ++a) {
    first_object[a] = el.objects.size();
    for (std::size_t x = 0; x < f.values(a).size(); ++x) {
      el.objects.emplace_back(a, x);
      names.push_back("(" + c.objects()[a] + "," + f.values(a)[x] + ")");
    }
  }
  std::vector<std::size_t> first_arrow(c.arrow_count());
  std::vector<Arrow> arrows;
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    const auto& a = c.arrow(g);
    first_arrow[g] = arrows.size();
    for (std::size_t x = 0; x < f.values(a.cod).size(); ++x) {
      el.arrows.emplace_back(g, x);
      arrows.push_back({a.name + "@" + f.values(a.cod)[x], first_object[a.dom] + f.act(g, x), first_object[a.cod] + x});
    }
  }
  std::vector<std::size_t> ids;
  for (const auto& [a, x] : el.objects) ids.push_back(first_arrow[c.identity(a)] + x);
  auto arrows_meta = el.arrows;
  el.category = std::make_shared<const SmallCategory>(
      std::move(names), std::move(arrows), std::move(ids), [&](std::size_t h, std::size_t k) {
        // (h, x'') o (k, x') with x' = F(h)(x'') is (h o k, x'')
        return first_arrow[c.compose(arrows_meta[h].first, arrows_meta[k].first)] + arrows_meta[h].second;
      });
  return el;
}

/// The object receiving exactly one arrow from every object, if any.
inline std::optional<std::size_t> has_terminal(const SmallCategory& c) {
  for (std::size_t z = 0; z < c.object_count(); ++z) {
    std::vector<std::size_t> count(c.object_count(), 0);
    for (std::size_t f : c.into(z)) ++count[c.arrow(f).dom];
    bool ok = true;
    for (auto n : count) ok = ok && n == 1;
    if (ok) return z;
  }
  return std::nullopt;
}

struct NerveLevel {
  std::uint64_t total = 0;
  std::uint64_t nondegenerate = 0;
  friend bool operator==(const NerveLevel&, const NerveLevel&) = default;
};

/// Number of composable chains a_0 -> ... -> a_d for d <= k; nondegenerate
/// chains contain no identity.
inline std::vector<NerveLevel> nerve(const SmallCategory& c, int k) {
  if (k < 0) fail(ErrorKind::DimOutOfRange, "negative nerve dimension");
  std::vector<NerveLevel> out;
  // ending[o] = chains of the current length that end at o
  std::vector<std::uint64_t> all(c.object_count(), 1), nondeg(c.object_count(), 1);
  for (int d = 0; d <= k; ++d) {
    if (d > 0) {
      std::vector<std::uint64_t> all_next(c.object_count(), 0), nondeg_next(c.object_count(), 0);
      for (std::size_t f = 0; f < c.arrow_count(); ++f) {
        const auto& a = c.arrow(f);
        all_next[a.cod] += all[a.dom];
        if (c.identity(a.dom) != f) nondeg_next[a.cod] += nondeg[a.dom];
      }
      all = std::move(all_next);
      nondeg = std::move(nondeg_next);
    }
    NerveLevel level;
    for (std::size_t o = 0; o < c.object_count(); ++o) {
      level.total += all[o];
      level.nondegenerate += nondeg[o];
    }
    out.push_back(level);
  }
  return out;
}

/// A global point of a presheaf, given as one element per object.
using GlobalPoint = std::vector<std::size_t>;

inline void require_natural(const Presheaf& i, const GlobalPoint& p, const char* which) {
  const auto& c = i.base();
  if (p.size() != c.object_count()) fail(ErrorKind::NotNatural, std::string(which) + " needs one element per object");
  for (std::size_t o = 0; o < c.object_count(); ++o)
    if (p[o] >= i.values(o).size()) fail(ErrorKind::NotNatural, std::string(which) + " leaves I(" + c.objects()[o] + ")");
  for (std::size_t g = 0; g < c.arrow_count(); ++g) {
    const auto& a = c.arrow(g);
    if (i.act(g, p[a.cod]) != p[a.dom])
      fail(ErrorKind::NotNatural, std::string(which) + " is not natural along '" + a.name + "'");
  }
}

/// True iff the two points differ at every object, i.e. their equalizer is
/// the empty presheaf.
inline bool check_separating_interval(const Presheaf& i, const GlobalPoint& p0, const GlobalPoint& p1) {
  require_natural(i, p0, "first point");
  require_natural(i, p1, "second point");
  for (std::size_t o = 0; o < p0.size(); ++o)
    if (p0[o] == p1[o]) return false;
  return true;
}

/// The point of Hom(-, a) induced by e: z -> a with z terminal: b -> e o !_b.
inline GlobalPoint representable_point(const SmallCategory& c, std::size_t a, std::size_t e) {
  auto z = has_terminal(c);
  if (!z || c.arrow(e).dom != *z || c.arrow(e).cod != a)
    fail(ErrorKind::NotNatural, "points of a representable come from arrows out of a terminal object");
  GlobalPoint p;
  for (std::size_t b = 0; b < c.object_count(); ++b) {
    const auto bang = c.hom(b, *z).front();
    const auto homs = c.hom(b, a);
    p.push_back(static_cast<std::size_t>(std::find(homs.begin(), homs.end(), c.compose(e, bang)) - homs.begin()));
  }
  return p;
}

/// Objects [0..m] and every map between them.
inline CategoryPtr delta_truncated(int m) {
  if (m < 0) fail(ErrorKind::DimOutOfRange, "negative truncation");
  std::vector<std::string> objects;
  for (int k = 0; k <= m; ++k) objects.push_back("[" + std::to_string(k) + "]");
  std::vector<Arrow> arrows;
  std::vector<SimplexMap> maps;
  // first[a][b]: index of the first map [a] -> [b]; maps are in lexicographic order
  std::vector<std::vector<std::size_t>> first(m + 1, std::vector<std::size_t>(m + 1));
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= m; ++b) {
      first[a][b] = maps.size();
      for (auto& phi : all_simplex_maps(a, b)) {
        arrows.push_back({phi.to_string(), static_cast<std::size_t>(a), static_cast<std::size_t>(b)});
        maps.push_back(std::move(phi));
      }
    }
  auto index_of = [&](const SimplexMap& phi) {
    std::size_t offset = 0;
    for (int v : phi.table) offset = offset * static_cast<std::size_t>(phi.n + 1) + static_cast<std::size_t>(v);
    return first[phi.m][phi.n] + offset;
  };
  std::vector<std::size_t> ids;
  for (int a = 0; a <= m; ++a) ids.push_back(index_of(SimplexMap::identity(a)));
  return std::make_shared<const SmallCategory>(std::move(objects), std::move(arrows), std::move(ids),
                                               [&](std::size_t g, std::size_t f) {
                                                 return index_of(globk::compose(maps[g], maps[f]));
                                               },
                                               Associativity::ByConstruction);
}

/// Functor data between two finite categories.
struct Functor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<std::size_t> on_objects;
  std::vector<std::size_t> on_arrows;
};

/// Throws InvalidStructure unless F preserves ends, identities and composites.
inline void validate_functor(const Functor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.on_objects.size() != s.object_count() || f.on_arrows.size() != s.arrow_count())
    fail(ErrorKind::InvalidStructure, "functor is not total");
  for (std::size_t g = 0; g < s.arrow_count(); ++g) {
    const auto& a = s.arrow(g);
    const auto& b = t.arrow(f.on_arrows[g]);
    if (b.dom != f.on_objects[a.dom] || b.cod != f.on_objects[a.cod])
      fail(ErrorKind::InvalidStructure, "functor moves the ends of '" + a.name + "'");
  }
  for (std::size_t o = 0; o < s.object_count(); ++o)
    if (f.on_arrows[s.identity(o)] != t.identity(f.on_objects[o]))
      fail(ErrorKind::InvalidStructure, "functor does not preserve the identity of '" + s.objects()[o] + "'");
  for (std::size_t g = 0; g < s.arrow_count(); ++g)
    for (std::size_t h : s.into(s.arrow(g).dom))
      if (f.on_arrows[s.compose(g, h)] != t.compose(f.on_arrows[g], f.on_arrows[h]))
        fail(ErrorKind::InvalidStructure, "functor does not preserve '" + s.arrow(g).name + "' o '" +
                                              s.arrow(h).name + "'");
}

inline CategoryPtr product_category(const SmallCategory& a, const SmallCategory& b) {
  const std::size_t nb = b.object_count(), mb = b.arrow_count();
  std::vector<std::string> objects;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) objects.push_back("(" + x + "," + y + ")");
  std::vector<Arrow> arrows;
  for (const auto& f : a.arrows())
    for (const auto& g : b.arrows())
      arrows.push_back({"(" + f.name + "," + g.name + ")", f.dom * nb + g.dom, f.cod * nb + g.cod});
  std::vector<std::size_t> ids;
  for (std::size_t x = 0; x < a.object_count(); ++x)
    for (std::size_t y = 0; y < nb; ++y) ids.push_back(a.identity(x) * mb + b.identity(y));
  return std::make_shared<const SmallCategory>(std::move(objects), std::move(arrows), std::move(ids),
                                               [&](std::size_t g, std::size_t f) {
                                                 return a.compose(g / mb, f / mb) * mb + b.compose(g % mb, f % mb);
                                               });
}

struct ProductComparison {
  Elements of_product;  // A/(F x G)
  Elements of_first;    // A/F
  Elements of_second;   // A/G
  Functor functor;      // A/(F x G) -> A/F x A/G
};

/// The comparison A/(F x G) -> A/F x A/G, validated as a functor.
inline ProductComparison product_comparison(const Presheaf& f, const Presheaf& g) {
  ProductComparison out{category_of_elements(product_presheaf(f, g)), category_of_elements(f),
                        category_of_elements(g), {}};
  const auto& c = f.base();
  auto target = product_category(*out.of_first.category, *out.of_second.category);
  // element indices inside A/F and A/G
  auto object_index = [](const Elements& el, std::size_t a, std::size_t x) {
    for (std::size_t o = 0; o < el.objects.size(); ++o)
      if (el.objects[o] == std::pair{a, x}) return o;
    fail(ErrorKind::MissingCell, "element not found");
  };
  std::vector<std::size_t> first_arrow_f(c.arrow_count(), kNoArrow), first_arrow_g(c.arrow_count(), kNoArrow);
  for (std::size_t k = 0; k < out.of_first.arrows.size(); ++k)
    if (first_arrow_f[out.of_first.arrows[k].first] == kNoArrow) first_arrow_f[out.of_first.arrows[k].first] = k;
  for (std::size_t k = 0; k < out.of_second.arrows.size(); ++k)
    if (first_arrow_g[out.of_second.arrows[k].first] == kNoArrow) first_arrow_g[out.of_second.arrows[k].first] = k;

  const std::size_t n2 = out.of_second.category->object_count(), m2 = out.of_second.category->arrow_count();
  Functor fn{out.of_product.category, target, {}, {}};
  for (const auto& [a, p] : out.of_product.objects) {
    const std::size_t ng = g.values(a).size();
    fn.on_objects.push_back(object_index(out.of_first, a, p / ng) * n2 + object_index(out.of_second, a, p % ng));
  }
  for (const auto& [h, p] : out.of_product.arrows) {
    const std::size_t ng = g.values(c.arrow(h).cod).size();
    fn.on_arrows.push_back((first_arrow_f[h] + p / ng) * m2 + first_arrow_g[h] + p % ng);
  }
  validate_functor(fn);
  out.functor = std::move(fn);
  return out;
}

}  // namespace globk
