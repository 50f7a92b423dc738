#include <doctest.h>

#include <string>

#include "support.hpp"
#include "vanish/factcheck.hpp"

using namespace vanish;
using testing::entry;
using testing::group;
using testing::perm;

namespace {

Factorisation inner_of_example() {
  const auto& f = entry("example-2.4").factorisations.at(0);
  const auto n = subgroup_generated(f.g, {perm("(1,2,3,4)", 6), perm("(1,2)", 6)});
  return make_factorisation(n, intersection(n, f.a).with_parent(n), intersection(n, f.b).with_parent(n));
}

}  // namespace

TEST_CASE("factorisation validation") {
  const auto s3 = group("s3");
  const auto c2 = subgroup_generated(s3, {perm("(1,2)", 3)});
  try {
    make_factorisation(s3, c2, c2);
    FAIL("accepted a non-factorisation");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("not a factorisation") != std::string::npos);
  }
  const auto t = trivial_factorisation(s3);
  CHECK(t.a == s3);
  CHECK(t.b == s3);
}

TEST_CASE("Sym(4) x C2 fixture factorisation") {
  const auto& f = entry("example-2.4").factorisations.at(0);
  CHECK(f.g.order() == 48);
  CHECK(f.a.order() == 8);
  CHECK(f.b.order() == 12);
  CHECK(intersection(f.a, f.b).order() == 2);
  CHECK(is_core_factorisation(f).holds);

  const auto w = chief_witness(f);
  REQUIRE(w.has_value());
  CHECK(std::string(w->labels.begin(), w->labels.end()) == "BABA");
  CHECK(w->series.factor_orders == std::vector<std::size_t>{2, 4, 3, 2});
  CHECK(w->series.terms.at(1).contains(perm("(5,6)", 6)));
  CHECK_FALSE(w->backtracked);
  CHECK(verify_witness(f, *w).ok());

  const auto n = subgroup_generated(f.g, {perm("(1,2,3,4)", 6), perm("(1,2)", 6)});
  CHECK(is_prefactorised(f, n));
  CHECK(intersection(n, f.a).order() == 4);
  CHECK(intersection(n, f.b).order() == 6);

  const auto inner = inner_of_example();
  const auto v = is_core_factorisation(inner);
  CHECK_FALSE(v.holds);
  REQUIRE(v.failing_k.has_value());
  CHECK(v.failing_k->order() == 1);
  CHECK_FALSE(chief_witness(inner).has_value());

  const auto p = permutability(f);
  CHECK_FALSE(p.mutual);
  CHECK_FALSE(p.tcc);
  CHECK_FALSE(p.total);
}

TEST_CASE("a Sylow 3-subgroup outside B is not prefactorised") {
  const auto& f = entry("example-2.4").factorisations.at(0);
  const auto s = subgroup_generated(f.g, {perm("(1,2,3)", 6)});
  CHECK_FALSE(f.b.contains_subgroup(s));
  CHECK_FALSE(is_prefactorised(f, s));
  CHECK(is_prefactorised(f, f.g));
}

TEST_CASE("permutability of small factorisations") {
  const auto p = permutability(entry("c6").factorisations.at(0));
  CHECK(p.total);
  CHECK(p.mutual);
  CHECK(p.tcc);
  const auto t = permutability(trivial_factorisation(group("s4")));
  CHECK(t.mutual);
  CHECK_FALSE(t.total);
  CHECK_THROWS_AS(permutability(trivial_factorisation(group("s5")), 100), CapExceeded);
}

TEST_CASE("subgroup lattices") {
  CHECK(all_subgroups(group("s3")).size() == 6);
  CHECK(all_subgroups(group("d8")).size() == 10);
  CHECK(all_subgroups(group("q8")).size() == 6);
  CHECK(all_subgroups(group("s4")).size() == 30);
  CHECK(all_subgroups(group("a5")).size() == 59);
  CHECK(all_subgroups(group("s5")).size() == 156);
  CHECK_THROWS_AS(all_subgroups(group("s5"), 64), CapExceeded);
}

TEST_CASE("non-core factorisations in the catalog") {
  CHECK(is_core_factorisation(entry("s4").factorisations.at(0)).holds);
  CHECK(is_core_factorisation(entry("s4").factorisations.at(1)).holds);
  CHECK_FALSE(is_core_factorisation(entry("s4").factorisations.at(2)).holds);
  CHECK(is_core_factorisation(entry("s5").factorisations.at(0)).holds);
  CHECK_FALSE(is_core_factorisation(entry("s5").factorisations.at(1)).holds);
  CHECK_FALSE(is_core_factorisation(entry("a5").factorisations.at(0)).holds);
}

TEST_CASE("quotient factorisations") {
  const auto& f = entry("example-2.4").factorisations.at(0);
  const auto z = subgroup_generated(f.g, {perm("(5,6)", 6)});
  const auto q = quotient_factorisation(f, z);
  CHECK(q.g.order() == 24);
  CHECK(q.a.order() == 8);
  CHECK(q.b.order() == 6);
}
