#include <doctest.h>

#include "support.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/kernels.hpp"

using namespace vanish;

TEST_CASE("parallel kernels match their serial twins") {
  for (const auto& e : testing::shipped()) {
    CAPTURE(e.name);
    const auto cls = conjugacy_classes(e.group);
    CHECK(class_coefficients(e.group, cls) == class_coefficients_serial(e.group, cls));
    CHECK(power_maps(e.group, cls) == power_maps_serial(e.group, cls));
    const auto a = class_normal_closures(e.group, cls);
    const auto b = class_normal_closures_serial(e.group, cls);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  }
}

TEST_CASE("parallel factorisation checks match their serial twins") {
  for (const auto& e : testing::shipped()) {
    auto facts = e.factorisations;
    facts.push_back(trivial_factorisation(e.group));
    for (std::size_t i = 0; i < facts.size(); ++i) {
      CAPTURE(e.name);
      CAPTURE(i);
      const auto p = is_core_factorisation(facts[i]);
      const auto s = is_core_factorisation_serial(facts[i]);
      CHECK(p.holds == s.holds);
      CHECK(p.failing_k.has_value() == s.failing_k.has_value());
      if (p.failing_k && s.failing_k) CHECK(*p.failing_k == *s.failing_k);
      if (facts[i].a.order() > 200 || facts[i].b.order() > 200) continue;
      const auto pp = permutability(facts[i]);
      const auto ps = permutability_serial(facts[i]);
      CHECK(pp.mutual == ps.mutual);
      CHECK(pp.total == ps.total);
      CHECK(pp.tcc == ps.tcc);
    }
  }
}

TEST_CASE("power maps") {
  const auto g = testing::group("s4");
  const auto cls = conjugacy_classes(g);
  const auto pm = power_maps(g, cls);
  for (std::size_t i = 0; i < cls.count(); ++i) {
    REQUIRE(pm[i].size() == cls.rep_orders[i]);
    CHECK(pm[i][0] == 0);
    if (cls.rep_orders[i] > 1) CHECK(pm[i][1] == i);
  }
}
