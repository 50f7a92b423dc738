#include <doctest.h>

#include "support.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/structure.hpp"

using namespace vanish;

namespace {

std::vector<Factorisation> all_factorisations() {
  std::vector<Factorisation> out;
  for (const auto& e : testing::shipped()) {
    out.push_back(trivial_factorisation(e.group));
    for (const auto& f : e.factorisations) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("trivial factorisations are core-factorisations") {
  for (const auto& e : testing::shipped()) {
    CAPTURE(e.name);
    const auto f = trivial_factorisation(e.group);
    CHECK(is_core_factorisation(f).holds);
    const auto w = chief_witness(f);
    REQUIRE(w.has_value());
    for (auto label : w->labels) CHECK(label == 'A');
  }
}

TEST_CASE("core-factorisations of simple groups are trivial") {
  for (const auto& e : testing::shipped()) {
    if (!is_simple(e.group)) continue;
    for (const auto& f : e.factorisations) {
      CAPTURE(e.name);
      if (is_core_factorisation(f).holds) CHECK((f.a == f.g || f.b == f.g));
    }
  }
}

TEST_CASE("a core-factorisation has a minimal normal subgroup inside a factor") {
  for (const auto& f : all_factorisations()) {
    if (!is_core_factorisation(f).holds) continue;
    bool found = false;
    for (const auto& n : minimal_normals(f.g)) found = found || f.a.contains_subgroup(n) || f.b.contains_subgroup(n);
    CHECK(found);
  }
}

TEST_CASE("definition verdict agrees with witness existence") {
  std::size_t negatives = 0;
  for (const auto& f : all_factorisations()) {
    const auto holds = is_core_factorisation(f).holds;
    const auto w = chief_witness(f);
    CHECK(holds == w.has_value());
    if (!holds) ++negatives;
    if (w) {
      CHECK(verify_witness(f, *w).ok());
      CHECK_FALSE(w->backtracked);
    }
  }
  CHECK(negatives >= 3);
}

TEST_CASE("quotients of core-factorisations are core-factorisations") {
  for (const auto& f : all_factorisations()) {
    if (!is_core_factorisation(f).holds) continue;
    for (const auto& m : all_normals(f.g)) {
      if (m.order() == f.g.order()) continue;
      CHECK(is_core_factorisation(quotient_factorisation(f, m)).holds);
    }
  }
}

TEST_CASE("permutable factorisations are core-factorisations") {
  std::size_t permutable = 0;
  for (const auto& f : all_factorisations()) {
    if (f.a.order() > 200 || f.b.order() > 200) continue;
    const auto p = permutability(f);
    if (p.total) {
      CHECK(p.mutual);
      CHECK(p.tcc);
    }
    if (p.mutual || p.tcc) {
      ++permutable;
      CHECK(is_core_factorisation(f).holds);
    }
  }
  CHECK(permutable > 0);
}
