#include "globk/axioms.hpp"
#include "globk/fixtures.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

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

std::size_t oracle_failures(const OmegaStructure& x, Axiom a, AxiomIndex at) {
  switch (a) {
    case Axiom::Ass: return oracle::ass_failures(x, at.i, at.j);
    case Axiom::Exc: return oracle::exc_failures(x, at.i, at.j, at.k);
    case Axiom::Lun: return oracle::lun_failures(x, at.i, at.j);
    case Axiom::Run: return oracle::run_failures(x, at.i, at.j);
    case Axiom::Fun: return oracle::fun_failures(x, at.i, at.j);
    case Axiom::LInv: return oracle::linv_failures(x, at.i, at.j);
    case Axiom::RInv: return oracle::rinv_failures(x, at.i, at.j);
    case Axiom::FInv: return oracle::finv_failures(x, at.i, at.j, at.k);
  }
  return 0;
}

OmegaStructure with_tables(const OmegaStructure& x, auto&& edit) {
  OmegaTables t = x.tables();
  edit(t);
  return OmegaStructure(std::move(t));
}

}  // namespace

TEST_CASE("composition in delooping(Z/2)") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  CHECK(x.compose(1, 0, 1, 1) == 0);
  CHECK(x.inverse(1, 0, 1) == 1);
  CHECK(x.iter_unit(0, 2, 0) == x.unit(1, x.unit(0, 0)));
  CHECK(x.iter_unit(1, 1, 1) == 1);
  CHECK(kind_of([&] { x.unit(2, 0); }) == ErrorKind::DimOutOfRange);
  CHECK(kind_of([&] { x.compose(1, 1, 0, 0); }) == ErrorKind::DimOutOfRange);
  CHECK(kind_of([&] { x.compose(2, 1, 0, 1); }) == ErrorKind::NotComposable);
}

TEST_CASE("suspension(Z/3,2): both top compositions are addition") {
  auto x = fixtures::suspension(cyclic_group(3), 2, 3);
  for (CellId a = 0; a < 3; ++a) {
    CHECK(x.inverse(2, 0, a) == (3 - a) % 3);
    for (CellId b = 0; b < 3; ++b) {
      CHECK(x.compose(2, 0, a, b) == (a + b) % 3);
      CHECK(x.compose(2, 1, a, b) == (a + b) % 3);
    }
  }
}

TEST_CASE("inverses are involutive on the groupoidal corpus") {
  for (const auto& [name, x] : corpus::groupoidal())
    for (Dim i = 1; i <= x.truncation(); ++i)
      for (Dim j = 0; j < i; ++j)
        for (CellId u = 0; u < x.size(i); ++u) CHECK(x.inverse(i, j, x.inverse(i, j, u)) == u);
}

TEST_CASE("checkers agree with the brute-force oracles") {
  std::vector<corpus::Named> all = corpus::groupoidal();
  all.push_back({"non-associative", fixtures::concentrated(corpus::non_associative(), 1, 3)});
  all.push_back({"non-associative level 2", fixtures::concentrated(corpus::non_associative(), 2, 3)});
  for (const auto& [name, x] : all) {
    INFO(name);
    for (Axiom a : {Axiom::Ass, Axiom::Exc, Axiom::Lun, Axiom::Run, Axiom::Fun, Axiom::LInv, Axiom::RInv, Axiom::FInv})
      for (const auto& at : axiom_instances(x, a)) {
        INFO(to_string(a) << " " << at.to_string());
        CHECK(check_axiom(x, a, at, {1u << 20}).size() == oracle_failures(x, a, at));
      }
  }
}

TEST_CASE("a non-associative magma yields Ass witnesses") {
  auto x = fixtures::concentrated(corpus::non_associative(), 1, 2);
  auto found = check_axiom(x, Axiom::Ass, {1, 0});
  REQUIRE_FALSE(found.empty());
  bool saw = false;
  for (const auto& v : found) saw = saw || v.cells == std::vector<CellId>{1, 1, 2};
  CHECK(saw);
  auto report = check_all(x, AxiomFlags::all());
  CHECK_FALSE(report.clean());
  for (const auto& e : report.entries())
    if (e.status == Status::Fail) CHECK(e.check == "Ass");
  CHECK(check_structure(x).clean());
}

TEST_CASE("violation cap bounds the witnesses") {
  auto x = fixtures::concentrated(corpus::non_associative(), 1, 2);
  CHECK(check_axiom(x, Axiom::Ass, {1, 0}, {1}).size() == 1);
  CHECK(check_axiom(x, Axiom::Ass, {1, 0}, {1000}).size() == oracle::ass_failures(x, 1, 0));
}

TEST_CASE("FInv on delooping(Z/2) in the reversing case") {
  auto x = fixtures::delooping(cyclic_group(2), 3);
  CHECK(check_axiom(x, Axiom::FInv, {1, 0, 0}).empty());
  CHECK(check_axiom(x, Axiom::FInv, {2, 1, 1}).empty());
  CHECK(check_axiom(x, Axiom::FInv, {2, 0, 1}).empty());
}

TEST_CASE("FInv reversal matters for a non-abelian group") {
  auto x = fixtures::delooping(symmetric_group_3(), 2);
  CHECK(check_axiom(x, Axiom::FInv, {1, 0, 0}).empty());
  // the same-order formula would fail: w(uv) != w(u)w(v) for some u,v
  std::size_t differ = 0;
  for (CellId u = 0; u < 6; ++u)
    for (CellId v = 0; v < 6; ++v)
      differ += x.inverse(1, 0, x.compose(1, 0, u, v)) != x.compose(1, 0, x.inverse(1, 0, u), x.inverse(1, 0, v));
  CHECK(differ > 0);
}

TEST_CASE("range and inverse errors") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  CHECK(kind_of([&] { check_axiom(x, Axiom::Fun, {2, 0}); }) == ErrorKind::DimOutOfRange);
  CHECK(kind_of([&] { check_axiom(x, Axiom::Ass, {3, 0}); }) == ErrorKind::DimOutOfRange);
  CHECK(kind_of([&] { check_axiom(x, Axiom::Exc, {2, 1, 1}); }) == ErrorKind::DimOutOfRange);
  auto m = fixtures::concentrated(corpus::max_monoid(), 1, 2);
  CHECK_FALSE(m.has_inverses());
  CHECK(kind_of([&] { check_axiom(m, Axiom::LInv, {1, 0}); }) == ErrorKind::InversesAbsent);
  CHECK(kind_of([&] { check_all(m, AxiomFlags::all()); }) == ErrorKind::InversesAbsent);
  CHECK(kind_of([&] { m.inverse(1, 0, 0); }) == ErrorKind::InversesAbsent);
  CHECK(check_all(m, AxiomFlags::categorical()).clean());
}

TEST_CASE("axiom flags parse and print") {
  auto f = AxiomFlags::parse("l,r,f,li,ri");
  CHECK(f == AxiomFlags::all());
  CHECK(f.to_string() == "l,r,f,li,ri");
  CHECK(AxiomFlags::parse("") == AxiomFlags{});
  CHECK(AxiomFlags::parse("r, li").to_string() == "r,li");
  CHECK(kind_of([] { AxiomFlags::parse("l,x"); }) == ErrorKind::ParseError);
  CHECK(parse_axiom("FInv") == Axiom::FInv);
  CHECK(kind_of([] { parse_axiom("Foo"); }) == ErrorKind::ParseError);
}

TEST_CASE("validation rejects composites outside the domain and missing composites") {
  auto x = fixtures::suspension(cyclic_group(2), 2, 3);
  CHECK(kind_of([&] { with_tables(x, [](OmegaTables& t) { t.comp_at(3, 2, 0, 1) = 0; }); }) == ErrorKind::InvalidStructure);
  CHECK(kind_of([&] { with_tables(x, [](OmegaTables& t) { t.comp_at(3, 2, 1, 1) = kNoCell; }); }) == ErrorKind::MissingCell);
  CHECK(kind_of([&] { with_tables(x, [](OmegaTables& t) { t.unit[0].clear(); }); }) == ErrorKind::MissingCell);
  CHECK(kind_of([&] { with_tables(x, [](OmegaTables& t) { (*t.inv)[1][0][0] = 7; }); }) == ErrorKind::MissingCell);
}

TEST_CASE("check_structure flags a corrupted unit row") {
  auto x = fixtures::delooping(cyclic_group(2), 2);
  CHECK(check_structure(x).clean());
  auto bad = with_tables(x, [](OmegaTables& t) { t.unit[1][0] = 1; });
  auto report = check_structure(bad);
  REQUIRE(report.failures() == 1);
  for (const auto& e : report.entries())
    if (e.status == Status::Fail) {
      CHECK(e.check == "UnitBoundary");
      CHECK(e.scope == "i=1");
    }
}

TEST_CASE("check_structure flags broken boundary laws of composition and inverses") {
  // two objects a,b and arrows f: a -> b, g: b -> a plus identities; composition
  // g*f lands on the wrong 1-cell
  std::vector<std::vector<std::string>> names{{"a", "b"}, {"1a", "1b", "f", "g"}};
  std::vector<std::vector<CellId>> src{{}, {0, 1, 0, 1}}, tgt{{}, {0, 1, 1, 0}};
  auto t = OmegaTables::blank(GlobularSet(names, src, tgt), true);
  // u *^1_0 v defined when s(u) = t(v)
  t.comp_at(1, 0, 0, 0) = 0;
  t.comp_at(1, 0, 0, 3) = 3;
  t.comp_at(1, 0, 2, 0) = 2;
  t.comp_at(1, 0, 2, 3) = 1;  // f*g : b -> b
  t.comp_at(1, 0, 1, 1) = 1;
  t.comp_at(1, 0, 1, 2) = 2;
  t.comp_at(1, 0, 3, 1) = 3;
  t.comp_at(1, 0, 3, 2) = 1;  // g*f should be 1a
  t.unit[0] = {0, 1};
  (*t.inv)[1][0] = {0, 1, 3, 2};
  (*t.inv)[1][0][2] = 2;  // w(f) = f has the wrong boundary
  OmegaStructure x(std::move(t));
  auto r = check_structure(x);
  std::size_t compose_fail = 0, inverse_fail = 0;
  for (const auto& e : r.entries()) {
    if (e.status != Status::Fail) continue;
    if (e.check.rfind("Compose", 0) == 0) ++compose_fail;
    if (e.check.rfind("Inverse", 0) == 0) ++inverse_fail;
  }
  CHECK(compose_fail == 2);
  CHECK(inverse_fail == 2);
}

TEST_CASE("derived FInv holds wherever Ass, Exc, Lun, Run and RInv hold") {
  // randomized unital magmas with inverses, concentrated in dimension 1 and 2
  std::mt19937 rng(20261017);
  std::size_t premise_held = 0, tried = 0;
  for (int round = 0; round < 400; ++round) {
    const std::size_t n = 2 + rng() % 3;
    Magma m;
    for (std::size_t a = 0; a < n; ++a) m.names.push_back("m" + std::to_string(a));
    m.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m.table[a][b] = a == 0 ? b : b == 0 ? a : rng() % n;
    bool invertible = true;
    for (std::size_t a = 0; a < n; ++a) invertible = invertible && m.inverse(a).has_value();
    if (!invertible) continue;
    for (Dim level : {1, 2}) {
      auto x = fixtures::concentrated(m, level, 3);
      ++tried;
      bool premise = true;
      for (Axiom a : {Axiom::Ass, Axiom::Exc, Axiom::Lun, Axiom::Run, Axiom::RInv})
        premise = premise && check_axiom_all(x, a).clean();
      if (!premise) continue;
      ++premise_held;
      CHECK(check_axiom_all(x, Axiom::FInv).clean());
    }
  }
  CHECK(tried > 20);
  CHECK(premise_held > 0);
}

TEST_CASE("exchange on a level-2 concentration is commutativity") {
  // S3 at level 2 without the abelian guard: Exc must fail exactly because S3 is not commutative
  auto x = fixtures::concentrated(symmetric_group_3(), 2, 2);
  CHECK_FALSE(check_axiom_all(x, Axiom::Exc).clean());
  auto y = fixtures::concentrated(cyclic_group(4), 2, 3);
  CHECK(check_axiom_all(y, Axiom::Exc).clean());
}

TEST_CASE("report lines render") {
  Report r;
  r.pass("Ass", "i=1,j=0");
  r.fail("Lun", "i=2,j=0", "(x): a != b");
  CHECK(r.to_text() == "CHECK Ass i=1,j=0 PASS\nCHECK Lun i=2,j=0 FAIL (x): a != b\n");
  CHECK(r.failures() == 1);
}
