#pragma once

#include "globk/error.hpp"
#include "globk/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace globk {

/// Any map {0..m} -> {0..n}, monotone or not.
struct SimplexMap {
  int m = 0;
  int n = 0;
  std::vector<int> table;

  SimplexMap() = default;
  SimplexMap(int dom, int cod, std::vector<int> values) : m(dom), n(cod), table(std::move(values)) {
    if (m < 0 || n < 0 || table.size() != static_cast<std::size_t>(m) + 1)
      fail(ErrorKind::ShapeViolation, "a map [" + std::to_string(m) + "] -> [" + std::to_string(n) + "] needs " +
                                          std::to_string(m + 1) + " values");
    for (int v : table)
      if (v < 0 || v > n) fail(ErrorKind::IndexOutOfRange, "value " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
  }

  static SimplexMap identity(int n) {
    std::vector<int> t(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) t[k] = k;
    return {n, n, std::move(t)};
  }

  int operator()(int k) const { return table.at(static_cast<std::size_t>(k)); }

  /// "0>0,1>2" style rendering.
  std::string to_string() const {
    std::string s;
    for (int k = 0; k <= m; ++k) s += (k ? "," : "") + std::to_string(k) + ">" + std::to_string(table[k]);
    return "[" + std::to_string(m) + "]->[" + std::to_string(n) + "]:" + s;
  }

  friend bool operator==(const SimplexMap&, const SimplexMap&) = default;
};

/// after o before.
inline SimplexMap compose(const SimplexMap& after, const SimplexMap& before) {
  if (before.n != after.m)
    fail(ErrorKind::NotComposable, before.to_string() + " then " + after.to_string());
  std::vector<int> t(before.table.size());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = after.table[before.table[k]];
  return {before.m, after.n, std::move(t)};
}

/// All (n+1)^(m+1) maps [m] -> [n], in lexicographic order.
inline std::vector<SimplexMap> all_simplex_maps(int m, int n) {
  std::vector<SimplexMap> out;
  std::vector<int> t(static_cast<std::size_t>(m) + 1, 0);
  while (true) {
    out.emplace_back(m, n, t);
    int k = m;
    while (k >= 0 && t[k] == n) t[k--] = 0;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

/// D(phi)(k) = phi(k) for k <= m and D(phi)(m+1) = n+1.
inline SimplexMap delta_D(const SimplexMap& phi) {
  std::vector<int> t = phi.table;
  t.push_back(phi.n + 1);
  return {phi.m + 1, phi.n + 1, std::move(t)};
}

/// The inclusion [n] -> [n+1], k -> k.
inline SimplexMap delta_alpha(int n) {
  auto t = SimplexMap::identity(n).table;
  return {n, n + 1, std::move(t)};
}

/// [0] -> [n+1], 0 -> n+1.
inline SimplexMap delta_beta(int n) { return {0, n + 1, {n + 1}}; }

/// Candidate retraction [n+1] -> [n], k -> min(k, n).
inline SimplexMap delta_rho(int n) {
  std::vector<int> t(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n + 1; ++k) t[k] = std::min(k, n);
  return {n + 1, n, std::move(t)};
}

struct DeltaGenerators {
  SimplexMap nabla, kappa, omega;
  SimplexMap nabla_shifted, kappa_shifted, omega_shifted;
};

/// Comultiplication, counit and inverse maps on [1] together with their
/// shifted versions on [2].
inline DeltaGenerators delta_generators() {
  return {
      {1, 2, {0, 2}}, {1, 0, {0, 0}}, {1, 1, {1, 0}}, {2, 3, {0, 2, 3}}, {2, 1, {0, 0, 1}}, {2, 2, {1, 0, 2}},
  };
}

/// For all maps between [0..max_n]: D preserves identities and composites,
/// D(phi) alpha_m = alpha_n phi, D(phi) beta_m = beta_n, and rho_n alpha_n = id.
inline Report check_delta_decalage(int max_n, std::size_t cap = 100) {
  if (max_n < 1) fail(ErrorKind::DimOutOfRange, "max_n must be at least 1");
  const std::string scope = "max_n=" + std::to_string(max_n);
  std::vector<std::vector<std::vector<SimplexMap>>> hom(max_n + 1, std::vector<std::vector<SimplexMap>>(max_n + 1));
  std::vector<std::vector<std::vector<SimplexMap>>> shifted(hom.size(), std::vector<std::vector<SimplexMap>>(hom.size()));
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n) {
      hom[m][n] = all_simplex_maps(m, n);
      for (const auto& phi : hom[m][n]) shifted[m][n].push_back(delta_D(phi));
    }

  Report report;
  std::vector<std::string> bad;
  for (int n = 0; n <= max_n; ++n)
    if (delta_D(SimplexMap::identity(n)) != SimplexMap::identity(n + 1) && bad.size() < cap)
      bad.push_back("id on [" + std::to_string(n) + "]");
  report.record("DeltaIdentity", scope, bad);

  bad.clear();
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n)
      for (int p = 0; p <= max_n; ++p)
        for (std::size_t a = 0; a < hom[m][n].size() && bad.size() < cap; ++a)
          for (std::size_t b = 0; b < hom[n][p].size(); ++b) {
            const auto& phi = hom[m][n][a];
            const auto& psi = hom[n][p][b];
            const auto& dphi = shifted[m][n][a];
            const auto& dpsi = shifted[n][p][b];
            // D(psi o phi) pointwise against D(psi) o D(phi), without building either
            bool same = true;
            for (int k = 0; k <= m + 1 && same; ++k) {
              int lhs = k <= m ? psi.table[phi.table[k]] : p + 1;
              same = lhs == dpsi.table[dphi.table[k]];
            }
            if (!same && bad.size() < cap) bad.push_back(psi.to_string() + " after " + phi.to_string());
          }
  report.record("DeltaComposite", scope, bad);

  bad.clear();
  std::vector<std::string> bad_beta;
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n)
      for (std::size_t a = 0; a < hom[m][n].size(); ++a) {
        const auto& phi = hom[m][n][a];
        const auto& dphi = shifted[m][n][a];
        if (compose(dphi, delta_alpha(m)) != compose(delta_alpha(n), phi) && bad.size() < cap)
          bad.push_back(phi.to_string());
        if (compose(dphi, delta_beta(m)) != delta_beta(n) && bad_beta.size() < cap)
          bad_beta.push_back(phi.to_string());
      }
  report.record("DeltaAlpha", scope, bad);
  report.record("DeltaBeta", scope, bad_beta);

  bad.clear();
  for (int n = 0; n <= max_n; ++n)
    if (compose(delta_rho(n), delta_alpha(n)) != SimplexMap::identity(n) && bad.size() < cap)
      bad.push_back("[" + std::to_string(n) + "]");
  report.record("DeltaRetraction", scope, bad);
  return report;
}

}  // namespace globk
