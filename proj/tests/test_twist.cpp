#include "globk/axioms.hpp"
#include "globk/fixtures.hpp"
#include "globk/twist.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace globk;

namespace {

template <class F>
ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidStructure;
}

bool passes(const OmegaStructure& x, std::initializer_list<Axiom> axioms) {
  for (Axiom a : axioms)
    if (!check_axiom_all(x, a).clean()) return false;
  return true;
}

constexpr std::initializer_list<Axiom> kAll = {Axiom::Ass, Axiom::Exc, Axiom::Lun, Axiom::Run,
                                               Axiom::Fun, Axiom::LInv, Axiom::RInv};

}  // namespace

TEST_CASE("low twisted levels of delooping(Z/2)") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  auto l0 = twisted_cells(x, 0);
  REQUIRE(l0.size() == 2);
  CHECK(l0[0].entries == std::vector<CellId>{0});
  auto l1 = twisted_cells(x, 1);
  CHECK(l1.size() == 4);
  CHECK(kind_of([&] { twisted_cells(x, 2); }) == ErrorKind::DimOutOfRange);
  CHECK(render(x, l1[1]) == "(0|1)");
  CHECK(twisted_table(3).to_string() == "1 0 2 1 3 2 4");
  CHECK(segment_table(1, 3).to_string() == "2 1 3 2 4");
}

TEST_CASE("twisted cardinalities agree with the raw filter") {
  for (const auto& [name, x] : corpus::groupoidal()) {
    INFO(name);
    for (Dim i = 0; i + 1 <= x.truncation(); ++i) {
      CHECK(twisted_cells(x, i).size() == oracle::twisted_count(x.base(), i));
      CHECK(twisted_cells(x, i).size() == globular_product(x.base(), twisted_table(i)).size());
      for (Dim j = 0; j <= i; ++j) CHECK(segment_cells(x, j, i).size() == globular_product(x.base(), segment_table(j, i)).size());
    }
  }
}

TEST_CASE("lemma identities hold on every twisted cell") {
  for (const auto& [name, x] : corpus::groupoidal()) {
    const auto& b = x.base();
    for (Dim i = 1; i + 1 <= x.truncation(); ++i)
      for (const auto& c : twisted_cells(x, i))
        for (Dim l = 0; l <= i - 1; ++l) {
          CHECK(b.src(l + 2, l, c.at(l + 2)) == b.src(i + 1, l, c.at(i + 1)));
          CHECK(b.src(l + 1, c.at(l + 1)) == b.tgt(i + 1, l, c.at(i + 1)));
        }
  }
}

TEST_CASE("twisted source and target on delooping(Z/2)") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  for (CellId g = 0; g < 2; ++g)
    for (CellId h = 0; h < 2; ++h) {
      TwistedCell c{{g, h}};
      CHECK(t_tgt(x, c).entries == std::vector<CellId>{g});
      CHECK(t_src(x, c).entries == std::vector<CellId>{(g + h) % 2});
    }
  CHECK(kind_of([&] { t_src(x, TwistedCell{{0}}); }) == ErrorKind::DimOutOfRange);
}

TEST_CASE("twisted boundaries satisfy the globular relations") {
  for (const auto& [name, x] : corpus::groupoidal())
    for (Dim i = 2; i + 1 <= x.truncation(); ++i)
      for (const auto& c : twisted_cells(x, i)) {
        CHECK(t_src(x, t_src(x, c)) == t_src(x, t_tgt(x, c)));
        CHECK(t_tgt(x, t_src(x, c)) == t_tgt(x, t_tgt(x, c)));
        CHECK(is_twisted_cell(x, t_src(x, c)));
      }
}

TEST_CASE("invalid twisted cells are rejected") {
  auto d = fixtures::discrete({"a", "b"}, 3);
  CHECK(kind_of([&] { t_src(d, TwistedCell{{0, 1}}); }) == ErrorKind::GluingViolation);
  CHECK(kind_of([&] { t_src(d, TwistedCell{{0, 0, 0, 0}}); }) == ErrorKind::DimOutOfRange);
  CHECK_FALSE(is_twisted_cell(d, TwistedCell{{0, 1}}));
}

TEST_CASE("canonical isomorphism of width 1 is the identity") {
  auto x = fixtures::suspension(cyclic_group(3), 2, 4);
  for (Dim i = 0; i <= 3; ++i) {
    auto t = TableOfDimensions::disk(i);
    for (const auto& c : twisted_cells(x, i)) {
      auto m = canonical_iso_c(x, t, {c});
      CHECK(m.head == c);
      CHECK(m.tail.empty());
      CHECK(canonical_iso_c_inv(x, t, m) == TwistedTuple{c});
    }
  }
}

TEST_CASE("c inverse on '1 0 1' rebuilds the first entry of the second piece") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  auto t = parse_table("1 0 1");
  for (const auto& m : mixed_product(x, t)) {
    auto cells = canonical_iso_c_inv(x, t, m);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == m.head);
    CHECK(cells[1].at(1) == x.compose(1, 0, m.head.at(1), x.base().tgt(2, m.head.at(2))));
    CHECK(cells[1].at(2) == m.tail[0].at(2));
  }
  CHECK(mixed_product(x, t).size() == 8);
}

TEST_CASE("c and c inverse are mutually inverse bijections") {
  for (const auto& [name, x] : corpus::groupoidal()) {
    INFO(name);
    for (const auto& t : enumerate_tables(3, std::min<Dim>(3, x.truncation() - 1))) {
      auto twisted = twisted_product(x, t);
      auto mixed = mixed_product(x, t);
      CHECK(twisted.size() == mixed.size());
      std::set<MixedTuple> images;
      for (const auto& tuple : twisted) {
        auto m = canonical_iso_c(x, t, tuple);
        CHECK(canonical_iso_c_inv(x, t, m) == tuple);
        images.insert(m);
      }
      CHECK(images.size() == twisted.size());
      for (const auto& m : mixed) CHECK(canonical_iso_c(x, t, canonical_iso_c_inv(x, t, m)) == m);
    }
  }
}

TEST_CASE("c rejects unglued tuples and c inverse rejects unglued mixed tuples") {
  auto x = fixtures::discrete({"a", "b"}, 3);
  auto t = parse_table("1 0 1");
  try {
    canonical_iso_c(x, t, {TwistedCell{{0, 0}}, TwistedCell{{1, 1}}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GluingViolation);
    CHECK(std::string(e.what()).find("gluing condition 1") != std::string::npos);
  }
  MixedTuple m{TwistedCell{{0, 0}}, {TwistedSegment{1, {1}}}};
  CHECK(kind_of([&] { canonical_iso_c_inv(x, t, m); }) == ErrorKind::GluingViolation);
  CHECK(kind_of([&] { canonical_iso_c(x, t, {TwistedCell{{0, 0}}}); }) == ErrorKind::ShapeViolation);
}

TEST_CASE("twisted composition on delooping(Z/2) at level 1") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  auto cells = twisted_cells(x, 1);
  std::size_t composable = 0;
  for (const auto& u : cells)
    for (const auto& v : cells) {
      if (t_src(x, u, 0) != t_tgt(x, v, 0)) {
        CHECK(kind_of([&] { t_compose(x, 0, u, v); }) == ErrorKind::NotComposable);
        continue;
      }
      ++composable;
      auto w = t_compose(x, 0, u, v);
      CHECK(w.at(1) == u.at(1));
      CHECK(w.at(2) == x.compose(2, 0, u.at(2), v.at(2)));
      CHECK(t_tgt(x, w) == t_tgt(x, u));
    }
  CHECK(composable == 8);
}

TEST_CASE("twisted composition is associative on suspension(Z/3,2)") {
  auto x = fixtures::suspension(cyclic_group(3), 2, 4);
  for (Dim i = 1; i <= 3; ++i) {
    auto cells = twisted_cells(x, i);
    for (Dim j = 0; j < i; ++j)
      for (const auto& u : cells)
        for (const auto& v : cells) {
          if (t_src(x, u, j) != t_tgt(x, v, j)) continue;
          auto uv = t_compose(x, j, u, v);
          for (const auto& w : cells) {
            if (t_src(x, v, j) != t_tgt(x, w, j)) continue;
            CHECK(t_compose(x, j, uv, w) == t_compose(x, j, u, t_compose(x, j, v, w)));
          }
        }
  }
}

TEST_CASE("twisted units") {
  auto x = fixtures::delooping(cyclic_group(2), 3);
  for (Dim i = 0; i <= 1; ++i)
    for (const auto& c : twisted_cells(x, i)) {
      auto k = t_unit(x, c);
      CHECK(t_tgt(x, k) == c);
      CHECK(t_src(x, k) == c);
    }
  for (const auto& c : twisted_cells(x, 2)) CHECK(kind_of([&] { t_unit(x, c); }) == ErrorKind::DimOutOfRange);

  for (const auto& [name, y] : corpus::groupoidal())
    for (Dim j = 0; j + 1 <= y.truncation(); ++j)
      for (const auto& c : twisted_cells(y, j))
        for (Dim i = j; i + 1 <= y.truncation(); ++i) CHECK(t_iter_unit(y, c, i) == t_iter_unit_closed(y, c, i));
}

TEST_CASE("twisted inverses") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  for (const auto& c : twisted_cells(x, 1)) {
    auto w = t_inverse(x, 0, c);
    CHECK(w.at(1) == (c.at(1) + c.at(2)) % 2);
    CHECK(w.at(2) == c.at(2));
    CHECK(t_inverse(x, 0, w) == c);
  }
  for (const auto& [name, y] : corpus::groupoidal())
    for (Dim i = 1; i + 1 <= y.truncation(); ++i)
      for (const auto& c : twisted_cells(y, i)) {
        CHECK(t_src(y, t_inverse(y, i - 1, c)) == t_tgt(y, c));
        CHECK(t_tgt(y, t_inverse(y, i - 1, c)) == t_src(y, c));
      }
  auto m = fixtures::concentrated(corpus::max_monoid(), 1, 2);
  CHECK(kind_of([&] { t_inverse(m, 0, TwistedCell{{0, 0}}); }) == ErrorKind::InversesAbsent);
}

TEST_CASE("build_twisted on degenerate inputs") {
  auto one = fixtures::discrete({"a"}, 3);
  auto t = build_twisted(one);
  CHECK(t.truncation() == 2);
  for (Dim i = 0; i <= 2; ++i) CHECK(t.size(i) == 1);
  CHECK(t.name(2, 0) == "(a|a|a)");

  auto n1 = build_twisted(fixtures::delooping(cyclic_group(2), 1));
  CHECK(n1.truncation() == 0);
  CHECK(n1.size(0) == 2);
  CHECK(kind_of([] { build_twisted(fixtures::discrete({"a"}, 0)); }) == ErrorKind::DimOutOfRange);
}

TEST_CASE("twisted structures of groupoids are groupoids") {
  auto x = fixtures::delooping(cyclic_group(2), 3);
  auto t = build_twisted(x);
  CHECK(t.truncation() == 2);
  CHECK(check_structure(t).clean());
  CHECK(check_all(t, AxiomFlags::all()).clean());

  auto s = fixtures::suspension(cyclic_group(2), 1, 4);
  auto tt = build_twisted(build_twisted(s));
  CHECK(check_structure(tt).clean());
  CHECK(check_all(tt, AxiomFlags::all()).clean());
}

TEST_CASE("axioms transport to the twisted structure") {
  // The non-associative magma keeps Exc, Lun, Run, Fun, LInv and RInv but not Ass;
  // the max monoid has no inverses at all.
  std::vector<corpus::Named> inputs;
  inputs.push_back({"non-associative", fixtures::concentrated(corpus::non_associative(), 1, 3)});
  inputs.push_back({"non-associative level 2", fixtures::concentrated(corpus::non_associative(), 2, 3)});
  inputs.push_back({"max monoid", fixtures::concentrated(corpus::max_monoid(), 1, 3)});
  inputs.push_back({"max monoid level 2", fixtures::concentrated(corpus::max_monoid(), 2, 4)});
  for (auto& n : corpus::groupoidal()) inputs.push_back(std::move(n));
  for (const auto& [name, x] : inputs) {
    INFO(name);
    auto t = build_twisted(x);
    if (passes(x, {Axiom::Ass})) CHECK(passes(t, {Axiom::Ass}));
    if (passes(x, {Axiom::Exc})) CHECK(passes(t, {Axiom::Exc}));
    if (passes(x, {Axiom::Lun, Axiom::Run})) CHECK(passes(t, {Axiom::Lun, Axiom::Run}));
    if (passes(x, {Axiom::Fun})) CHECK(passes(t, {Axiom::Fun}));
    if (x.has_inverses() && passes(x, kAll)) CHECK(passes(t, {Axiom::LInv, Axiom::RInv}));
    if (passes(x, {Axiom::Ass, Axiom::Exc})) CHECK(check_structure(t).clean());
  }
}

TEST_CASE("build_twisted names round-trip through the cell index") {
  auto x = fixtures::product(fixtures::delooping(cyclic_group(2), 2), fixtures::discrete({"a", "b"}, 2));
  auto t = build_twisted(x);
  for (Dim i = 0; i <= t.truncation(); ++i)
    for (CellId u = 0; u < t.size(i); ++u) CHECK(t.base().find(i, t.name(i, u)) == u);
}
