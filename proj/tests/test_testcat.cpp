#include "globk/testcat.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

using namespace globk;

namespace {

/// a -> b with identities.
CategoryPtr arrow_category() {
  return std::make_shared<const SmallCategory>(
      std::vector<std::string>{"a", "b"}, std::vector<Arrow>{{"1a", 0, 0}, {"1b", 1, 1}, {"f", 0, 1}},
      std::vector<std::size_t>{0, 1}, [](std::size_t g, std::size_t f) {
        if (g == 0 || g == 1) return f;
        return g;  // f o 1a
      });
}

/// One object, arrows the elements of Z/n.
CategoryPtr cyclic_category(std::size_t n) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < n; ++k) arrows.push_back({std::to_string(k), 0, 0});
  return std::make_shared<const SmallCategory>(std::vector<std::string>{"*"}, std::move(arrows),
                                               std::vector<std::size_t>{0},
                                               [n](std::size_t g, std::size_t f) { return (g + f) % n; });
}

CategoryPtr discrete_category(std::size_t n) {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::size_t> ids;
  for (std::size_t k = 0; k < n; ++k) {
    objects.push_back("o" + std::to_string(k));
    arrows.push_back({"1", k, k});
    ids.push_back(k);
  }
  return std::make_shared<const SmallCategory>(objects, arrows, ids, [](std::size_t g, std::size_t) { return g; });
}

}  // namespace

TEST_CASE("validation of categories") {
  CHECK_NOTHROW(SmallCategory({"*"}, {{"e", 0, 0}, {"a", 0, 0}}, {0},
                              [](std::size_t g, std::size_t f) { return g == 0 ? f : f == 0 ? g : 0; }));
  try {
    SmallCategory({"*"}, {{"e", 0, 0}, {"a", 0, 0}}, {0}, [](std::size_t, std::size_t) { return std::size_t{1}; });
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidStructure);
  }
}

TEST_CASE("associativity is checked unless waived") {
  const std::size_t table[3][3] = {{0, 1, 2}, {1, 1, 0}, {2, 0, 2}};
  auto comp = [&](std::size_t g, std::size_t f) { return table[g][f]; };
  std::vector<Arrow> arrows{{"e", 0, 0}, {"p", 0, 0}, {"q", 0, 0}};
  try {
    SmallCategory({"*"}, arrows, {0}, comp);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
  CHECK_NOTHROW(SmallCategory({"*"}, arrows, {0}, comp, Associativity::ByConstruction));
}

TEST_CASE("terminal objects") {
  CHECK(has_terminal(*cyclic_category(1)) == 0);
  CHECK_FALSE(has_terminal(*cyclic_category(2)).has_value());
  CHECK_FALSE(has_terminal(*discrete_category(2)).has_value());
  CHECK(has_terminal(*arrow_category()) == 1);
  for (int m = 0; m <= 4; ++m) CHECK(has_terminal(*delta_truncated(m)) == 0);
}

TEST_CASE("delta_truncated sizes") {
  CHECK(delta_truncated(0)->arrow_count() == 1);
  // [0]->[0], [0]->[1] (two), [1]->[0] (one), [1]->[1] (four)
  CHECK(delta_truncated(1)->arrow_count() == 8);
  std::size_t expect = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) expect += all_simplex_maps(m, n).size();
  CHECK(delta_truncated(2)->arrow_count() == expect);
}

TEST_CASE("nerve counts") {
  auto g = nerve(*cyclic_category(3), 4);
  for (int d = 0; d <= 4; ++d) CHECK(g[d].total == static_cast<std::uint64_t>(std::pow(3, d)));
  auto a = nerve(*arrow_category(), 3);
  CHECK(a[0].nondegenerate == 2);
  CHECK(a[1].nondegenerate == 1);
  CHECK(a[2].nondegenerate == 0);
  CHECK(a[3].nondegenerate == 0);
  // chain recurrence on delta_truncated(2): d-chains = (d-1)-chains extended by one arrow
  auto c = delta_truncated(2);
  auto n = nerve(*c, 3);
  std::vector<std::uint64_t> ending(c->object_count(), 1);
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::uint64_t> next(c->object_count(), 0);
    for (std::size_t x = 0; x < c->object_count(); ++x)
      for (std::size_t y = 0; y < c->object_count(); ++y) next[y] += ending[x] * c->hom(x, y).size();
    ending = next;
    std::uint64_t total = 0;
    for (auto v : ending) total += v;
    CHECK(n[d].total == total);
  }
}

TEST_CASE("categories of elements") {
  auto c = arrow_category();
  auto term = category_of_elements(terminal_presheaf(c));
  CHECK(term.category->object_count() == 2);
  CHECK(term.category->arrow_count() == 3);
  CHECK(has_terminal(*term.category).has_value());

  for (std::size_t a = 0; a < c->object_count(); ++a) {
    auto rep = representable(c, a);
    auto el = category_of_elements(rep);
    std::size_t expect = 0;
    for (std::size_t o = 0; o < c->object_count(); ++o) expect += rep.values(o).size();
    CHECK(el.category->object_count() == expect);
    CHECK(has_terminal(*el.category).has_value());
  }
  auto d = delta_truncated(2);
  for (std::size_t a = 0; a < d->object_count(); ++a) {
    auto el = category_of_elements(representable(d, a));
    auto z = has_terminal(*el.category);
    REQUIRE(z.has_value());
    // the terminal element is the identity of a
    CHECK(el.objects[*z].first == a);
  }
}

TEST_CASE("nerve of an element category of a representable is a cone") {
  auto d = delta_truncated(1);
  auto el = category_of_elements(representable(d, 1));
  auto n = nerve(*el.category, 2);
  // brute force: count chains directly
  const auto& c = *el.category;
  std::uint64_t two = 0;
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g = 0; g < c.arrow_count(); ++g) two += c.arrow(f).cod == c.arrow(g).dom;
  CHECK(n[2].total == two);
  CHECK(n[0].total == c.object_count());
}

TEST_CASE("separating interval on delta_truncated(3)") {
  auto d = delta_truncated(3);
  auto interval = representable(d, 1);
  auto homs = d->hom(0, 1);
  REQUIRE(homs.size() == 2);
  auto p0 = representable_point(*d, 1, homs[0]);
  auto p1 = representable_point(*d, 1, homs[1]);
  CHECK(check_separating_interval(interval, p0, p1));
  CHECK_FALSE(check_separating_interval(interval, p0, p0));
  GlobalPoint broken = p0;
  broken[2] = p1[2];
  try {
    check_separating_interval(interval, broken, p1);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNatural);
  }
}

TEST_CASE("separating interval over a single object") {
  auto c = cyclic_category(1);
  Presheaf two(c, {{"x", "y"}}, {{0, 1}});
  CHECK(check_separating_interval(two, {0}, {1}));
}

TEST_CASE("separation survives adding objects where the points differ") {
  for (int m = 1; m <= 3; ++m) {
    auto d = delta_truncated(m);
    auto homs = d->hom(0, 1);
    CHECK(check_separating_interval(representable(d, 1), representable_point(*d, 1, homs[0]),
                                    representable_point(*d, 1, homs[1])));
  }
}

TEST_CASE("product comparison") {
  auto c = arrow_category();
  auto f = representable(c, 1);
  auto g = representable(c, 1);
  auto cmp = product_comparison(f, g);
  CHECK(cmp.of_product.category->object_count() == 1 + 1);
  CHECK(cmp.of_first.category->object_count() * cmp.of_second.category->object_count() == 4);

  auto t = product_comparison(f, terminal_presheaf(c));
  // with a terminal factor the comparison is injective on objects and arrows
  std::set<std::size_t> objs(t.functor.on_objects.begin(), t.functor.on_objects.end());
  CHECK(objs.size() == t.functor.on_objects.size());

  Presheaf empty(c, {{}, {}}, {{}, {}, {}});
  auto e = product_comparison(empty, f);
  CHECK(e.of_product.category->object_count() == 0);
  CHECK(e.functor.target->object_count() == 0);
}

TEST_CASE("functor validation catches bad data") {
  auto c = arrow_category();
  Functor id{c, c, {0, 1}, {0, 1, 2}};
  CHECK_NOTHROW(validate_functor(id));
  Functor swapped{c, c, {1, 0}, {1, 0, 2}};
  CHECK_THROWS_AS(validate_functor(swapped), Error);
}

TEST_CASE("presheaf validation") {
  auto c = cyclic_category(2);
  CHECK_THROWS_AS(Presheaf(c, {{"x", "y"}}, {{1, 0}, {1, 0}}), Error);  // identity acts
  CHECK_NOTHROW(Presheaf(c, {{"x", "y"}}, {{0, 1}, {1, 0}}));
}
