#include "globk/delta.hpp"

#include <catch_amalgamated.hpp>

using namespace globk;

TEST_CASE("generator tables") {
  auto g = delta_generators();
  CHECK(g.nabla == SimplexMap(1, 2, {0, 2}));
  CHECK(g.kappa == SimplexMap(1, 0, {0, 0}));
  CHECK(g.omega == SimplexMap(1, 1, {1, 0}));
  CHECK(g.nabla_shifted == SimplexMap(2, 3, {0, 2, 3}));
  CHECK(g.kappa_shifted == SimplexMap(2, 1, {0, 0, 1}));
  CHECK(g.omega_shifted == SimplexMap(2, 2, {1, 0, 2}));
  CHECK(delta_D(g.nabla) == g.nabla_shifted);
  CHECK(delta_D(g.kappa) == g.kappa_shifted);
  CHECK(delta_D(g.omega) == g.omega_shifted);
}

TEST_CASE("alpha, beta and the retraction") {
  CHECK(delta_alpha(2) == SimplexMap(2, 3, {0, 1, 2}));
  CHECK(delta_beta(2) == SimplexMap(0, 3, {3}));
  CHECK(compose(delta_rho(1), delta_alpha(1)) == SimplexMap::identity(1));
  CHECK(delta_rho(2) == SimplexMap(3, 2, {0, 1, 2, 2}));
}

TEST_CASE("hom-set sizes") {
  CHECK(all_simplex_maps(0, 1).size() == 2);
  CHECK(all_simplex_maps(1, 1).size() == 4);
  CHECK(all_simplex_maps(2, 3).size() == 64);
  auto maps = all_simplex_maps(1, 2);
  CHECK(maps.front() == SimplexMap(1, 2, {0, 0}));
  CHECK(maps.back() == SimplexMap(1, 2, {2, 2}));
}

TEST_CASE("D is functorial and the squares commute") {
  CHECK(check_delta_decalage(1).clean());
  CHECK(check_delta_decalage(3).clean());
  auto r = check_delta_decalage(2);
  std::vector<std::string> names;
  for (const auto& e : r.entries()) names.push_back(e.check);
  CHECK(names == std::vector<std::string>{"DeltaIdentity", "DeltaComposite", "DeltaAlpha", "DeltaBeta", "DeltaRetraction"});
}

TEST_CASE("simplex map validation") {
  CHECK_THROWS_AS(SimplexMap(1, 1, {0}), Error);
  CHECK_THROWS_AS(SimplexMap(1, 1, {0, 2}), Error);
  CHECK_THROWS_AS(compose(SimplexMap(1, 1, {0, 1}), SimplexMap(0, 2, {2})), Error);
  CHECK_THROWS_AS(check_delta_decalage(0), Error);
  CHECK(SimplexMap(1, 2, {0, 2}).to_string() == "[1]->[2]:0>0,1>2");
}
