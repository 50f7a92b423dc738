#include <doctest.h>

#include "support.hpp"
#include "vanish/structure.hpp"

using namespace vanish;
using testing::group;
using testing::perm;

TEST_CASE("normal subgroups and chief series") {
  CHECK(all_normals(group("s4")).size() == 4);
  CHECK(all_normals(group("d8")).size() == 6);
  CHECK(all_normals(group("a5")).size() == 2);
  CHECK(minimal_normals(group("c2^3")).size() == 7);
  CHECK(chief_series(group("s4")).factor_orders == std::vector<std::size_t>{4, 3, 2});
  CHECK(chief_series(group("example-2.4")).factor_orders.size() == 4);
  CHECK(is_simple(group("a5")));
  CHECK(is_simple(group("psl(2,7)")));
  CHECK_FALSE(is_simple(group("s5")));
  const auto s4 = group("s4");
  CHECK(core(s4, subgroup_generated(s4, {perm("(1,2,3,4)", 4), perm("(1,3)", 4)})).order() == 4);
  CHECK(core(s4, subgroup_generated(s4, {perm("(1,2)", 4)})).order() == 1);
  CHECK(normal_closure(s4, {perm("(1,2)", 4)}).order() == 24);
}

TEST_CASE("characteristic subgroups") {
  const auto s4 = group("s4");
  CHECK(o_p(s4, 2).order() == 4);
  CHECK(o_p(s4, 3).order() == 1);
  CHECK(o_pprime(s4, 3).order() == 4);
  CHECK(fitting(s4).order() == 4);
  CHECK(fitting2(s4).order() == 12);
  CHECK(derived(s4).order() == 12);
  CHECK(center(group("q8")).order() == 2);
  CHECK(center(group("3^(1+2)")).order() == 3);
  CHECK(sylow(group("a5"), 2).order() == 4);
  CHECK(normalizer(group("a5"), sylow(group("a5"), 5)).order() == 10);
  CHECK(centralizer_of(s4, o_p(s4, 2)).order() == 4);
  CHECK(frattini_of_pgroup(group("d8"), 2).order() == 2);
  CHECK(frattini_of_pgroup(group("c2^3"), 2).order() == 1);
  CHECK(frattini_of_pgroup(group("3^(1+2)"), 3).order() == 3);
}

TEST_CASE("predicates on small groups") {
  CHECK(is_abelian(group("c6")));
  CHECK_FALSE(is_abelian(group("s3")));
  CHECK(is_nilpotent(group("q8")));
  CHECK_FALSE(is_nilpotent(group("s3")));
  CHECK(is_soluble(group("sl(2,3)")));
  CHECK_FALSE(is_soluble(group("s5")));
  CHECK(is_elementary_abelian(group("c2^3")));
  CHECK_FALSE(is_elementary_abelian(group("c4")));
  CHECK(is_p_group(group("q8"), 2));
  CHECK(has_normal_sylow(group("sl(2,3)"), 2));
  CHECK_FALSE(has_normal_sylow(group("sl(2,3)"), 3));
  CHECK(is_p_nilpotent(group("a4"), 3));
  CHECK_FALSE(is_p_nilpotent(group("s4"), 3));
  CHECK(is_supersoluble(chief_series(group("d12"))));
  CHECK_FALSE(is_supersoluble(chief_series(group("a4"))));
  CHECK(p_length(group("s4"), 2) == std::size_t{2});
  CHECK(p_length(group("s4"), 3) == std::size_t{1});
  CHECK_FALSE(p_length(group("a5"), 2).has_value());
}

TEST_CASE("normal Hall subgroups") {
  CHECK(normal_hall_nilpotent(group("a4"), {2}).holds);
  CHECK_FALSE(normal_hall_nilpotent(group("s4"), {2}).holds);
  CHECK(normal_hall_nilpotent(group("c7:c3"), {7}).holds);
  CHECK_FALSE(normal_hall_nilpotent(group("example-2.4"), {2, 3}).holds);
  CHECK(normal_hall_nilpotent(group("c6"), {2, 3}).holds);
  CHECK(sigma_elements(group("s3"), {3}).size() == 3);
}

TEST_CASE("C5:C4 fixture: O_2 trivial and a cyclic Sylow 2-subgroup") {
  const auto g = group("example-5.7");
  CHECK(g.order() == 20);
  CHECK(o_p(g, 2).order() == 1);
  const auto p = sylow(g, 2);
  CHECK(p.order() == 4);
  CHECK(is_abelian(p));
  CHECK_FALSE(is_elementary_abelian(p));
}

TEST_CASE("solubility hierarchy over the catalog") {
  for (const auto& e : testing::shipped()) {
    CAPTURE(e.name);
    const auto r = predicates(e.group);
    if (r.is_nilpotent) CHECK(r.is_supersoluble);
    if (r.is_supersoluble) CHECK(r.is_soluble);
    if (r.is_abelian) CHECK(r.is_nilpotent);
    CHECK(r.fitting2.contains_subgroup(r.fitting));
    for (const auto& p : r.primes) {
      if (p.is_p_nilpotent) CHECK(p.is_p_soluble);
      if (r.is_soluble) CHECK(p.is_p_soluble);
      CHECK(has_normal_sylow(e.group, p.p) == (p.o_p.order() == p.sylow.order()));
    }
  }
}
