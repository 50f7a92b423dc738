#include "vanish/kernels.hpp"

#include "vanish/structure.hpp"

namespace vanish {

namespace {

void coefficients_for_class(const Group& g, const ClassData& classes, std::size_t k,
                            std::vector<std::uint32_t>& counts) {
  const auto r = classes.count();
  const auto& gk = classes.reps[k];
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto i = classes.class_of[x];
    const auto j = classes.class_of[g.at(g.element(x).inverse() * gk)];
    ++counts[(k * r + i) * r + j];
  }
}

std::vector<std::size_t> powers_of_rep(const Group& g, const ClassData& classes, std::size_t i) {
  const auto& x = classes.reps[i];
  std::vector<std::size_t> out;
  Perm y(g.degree());
  for (std::size_t l = 0; l < classes.rep_orders[i]; ++l) {
    out.push_back(classes.class_of[g.at(y)]);
    y = y * x;
  }
  return out;
}

}  // namespace

ClassCoefficients class_coefficients_serial(const Group& g, const ClassData& classes) {
  ClassCoefficients out;
  out.r = classes.count();
  out.counts.assign(out.r * out.r * out.r, 0);
  for (std::size_t k = 0; k < out.r; ++k) coefficients_for_class(g, classes, k, out.counts);
  return out;
}

ClassCoefficients class_coefficients(const Group& g, const ClassData& classes) {
  ClassCoefficients out;
  out.r = classes.count();
  out.counts.assign(out.r * out.r * out.r, 0);
  const auto r = static_cast<long long>(out.r);
  // each k owns the disjoint slice [k][*][*]
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < r; ++k) coefficients_for_class(g, classes, static_cast<std::size_t>(k), out.counts);
  return out;
}

std::vector<Group> class_normal_closures_serial(const Group& g, const ClassData& classes) {
  std::vector<Group> out;
  out.reserve(classes.count());
  for (const auto& x : classes.reps) out.push_back(normal_closure(g, {x}));
  return out;
}

std::vector<Group> class_normal_closures(const Group& g, const ClassData& classes) {
  std::vector<Group> out(classes.count());
  const auto r = static_cast<long long>(classes.count());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < r; ++i) out[i] = normal_closure(g, {classes.reps[i]});
  return out;
}

PowerMaps power_maps_serial(const Group& g, const ClassData& classes) {
  PowerMaps out;
  for (std::size_t i = 0; i < classes.count(); ++i) out.push_back(powers_of_rep(g, classes, i));
  return out;
}

PowerMaps power_maps(const Group& g, const ClassData& classes) {
  PowerMaps out(classes.count());
  const auto r = static_cast<long long>(classes.count());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < r; ++i) out[i] = powers_of_rep(g, classes, static_cast<std::size_t>(i));
  return out;
}

}  // namespace vanish
