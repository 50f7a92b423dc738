#include "vanish/factcheck.hpp"

#include <algorithm>
#include <set>

namespace vanish {

namespace {

using Index = std::uint32_t;
using IndexSet = std::vector<Index>;  // sorted element indices of G

/// Element arithmetic on indices of G; tabulated when G is small.
class ElementOps {
 public:
  explicit ElementOps(const Group& g) : g_(g), n_(g.order()) {
    inverse_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) inverse_[i] = static_cast<Index>(g.at(g.element(i).inverse()));
    if (n_ <= kTableLimit) {
      table_.resize(n_ * n_);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) table_[i * n_ + j] = static_cast<Index>(g.at(g.element(i) * g.element(j)));
    }
  }

  std::size_t size() const { return n_; }
  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[a * n_ + b];
    return static_cast<Index>(g_.at(g_.element(a) * g_.element(b)));
  }
  Index inv(Index a) const { return inverse_[a]; }
  Index conj(Index x, Index h) const { return mul(mul(inv(h), x), h); }

  IndexSet indices(const Group& h) const {
    IndexSet out;
    out.reserve(h.order());
    for (const auto& x : h.elements()) out.push_back(static_cast<Index>(g_.at(x)));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Closure of a generating set of indices.
  IndexSet closure(const IndexSet& gens) const {
    std::vector<char> seen(n_, 0);
    IndexSet out{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto s : gens) {
        const auto y = mul(out[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// XY = YX, compared as sets.
  bool permute(const IndexSet& x, const IndexSet& y, std::vector<char>& mark) const {
    std::fill(mark.begin(), mark.end(), 0);
    for (auto a : x)
      for (auto b : y) mark[mul(a, b)] = 1;
    for (auto b : y)
      for (auto a : x)
        if (!mark[mul(b, a)]) return false;
    return true;
  }

 private:
  static constexpr std::size_t kTableLimit = 2048;
  const Group& g_;
  std::size_t n_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;
};

Group set_product(const Group& g, const Group& x, const Group& y) {
  std::vector<char> mark(g.order(), 0);
  std::vector<Perm> elems;
  for (const auto& a : x.elements())
    for (const auto& b : y.elements()) {
      const auto i = g.at(a * b);
      if (!mark[i]) {
        mark[i] = 1;
        elems.push_back(g.element(i));
      }
    }
  return Group::from_elements(std::move(elems), g.degree()).with_parent(g);
}

/// Whether every element of n lies in the set x*k.
bool covered(const Group& g, const Group& n, const Group& x, const Group& k) {
  std::vector<char> mark(g.order(), 0);
  for (const auto& a : x.elements())
    for (const auto& b : k.elements()) mark[g.at(a * b)] = 1;
  for (const auto& y : n.elements())
    if (!mark[g.at(y)]) return false;
  return true;
}

bool covers_above(const Factorisation& f, const Group& k) {
  return core(f.g, set_product(f.g, f.a, k)).order() > k.order() ||
         core(f.g, set_product(f.g, f.b, k)).order() > k.order();
}

struct Stage {
  Group term;
  char label;
};

/// Depth-first ascent; the first branch tried is the greedy choice.
bool ascend(const Factorisation& f, const Group& n, std::vector<Stage>& path, CoreWitness& w, bool& first_branch) {
  if (n.order() == f.g.order()) return true;
  CosetAction action(f.g, n);
  const auto abar = action.image(f.a);
  const auto bbar = action.image(f.b);
  std::vector<Stage> options;
  for (const auto& m : minimal_normals(action.quotient())) {
    if (abar.contains_subgroup(m))
      options.push_back({action.preimage(m), 'A'});
    else if (bbar.contains_subgroup(m))
      options.push_back({action.preimage(m), 'B'});
  }
  w.alternatives.push_back(options.size());
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (i > 0 || !first_branch) w.backtracked = true;
    path.push_back(options[i]);
    if (ascend(f, options[i].term, path, w, first_branch)) return true;
    path.pop_back();
    first_branch = false;
  }
  w.alternatives.pop_back();
  first_branch = false;
  return false;
}

std::vector<IndexSet> subgroup_lattice(const ElementOps& ops, const Group& g, const Group& h) {
  const auto elems = ops.indices(h);
  std::set<IndexSet> seen;
  std::vector<IndexSet> list;
  std::vector<IndexSet> gens;
  std::vector<Index> cyclic_gens;
  for (auto x : elems) {
    auto c = ops.closure({x});
    if (seen.insert(c).second) {
      list.push_back(c);
      gens.push_back({x});
      cyclic_gens.push_back(x);
    }
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (auto x : cyclic_gens) {
      if (std::binary_search(list[i].begin(), list[i].end(), x)) continue;
      auto gs = gens[i];
      gs.push_back(x);
      auto c = ops.closure(gs);
      if (seen.insert(c).second) {
        list.push_back(std::move(c));
        gens.push_back(std::move(gs));
      }
    }
  }
  std::sort(list.begin(), list.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  (void)g;
  return list;
}

void check_cap(const Group& h, std::size_t cap) {
  if (h.order() > cap)
    throw CapExceeded("subgroup enumeration cap exceeded (order " + std::to_string(h.order()) + " > cap " +
                      std::to_string(cap) + ")");
}

IndexSet conjugate_set(const ElementOps& ops, const IndexSet& y, Index h) {
  IndexSet out;
  out.reserve(y.size());
  for (auto a : y) out.push_back(ops.conj(a, h));
  std::sort(out.begin(), out.end());
  return out;
}

/// Some g in <X, Y> with X permuting with Y^g.
bool tcc_pair(const ElementOps& ops, const IndexSet& x, const IndexSet& y, std::vector<char>& mark) {
  if (ops.permute(x, y, mark)) return true;
  IndexSet gens = x;
  gens.insert(gens.end(), y.begin(), y.end());
  for (auto h : ops.closure(gens))
    if (ops.permute(x, conjugate_set(ops, y, h), mark)) return true;
  return false;
}

struct Lattices {
  std::vector<IndexSet> sub_a;
  std::vector<IndexSet> sub_b;
  IndexSet a;
  IndexSet b;
};

Lattices lattices(const ElementOps& ops, const Factorisation& f, std::size_t cap) {
  check_cap(f.a, cap);
  check_cap(f.b, cap);
  return {subgroup_lattice(ops, f.g, f.a), subgroup_lattice(ops, f.g, f.b), ops.indices(f.a), ops.indices(f.b)};
}

/// Per-X verdicts over one row of the lattice product.
struct RowVerdict {
  bool x_with_b = true;
  bool total = true;
  bool tcc = true;
};

RowVerdict row_verdict(const ElementOps& ops, const Lattices& l, const IndexSet& x) {
  std::vector<char> mark(ops.size(), 0);
  RowVerdict v;
  v.x_with_b = ops.permute(x, l.b, mark);
  for (const auto& y : l.sub_b) {
    if (ops.permute(x, y, mark)) continue;
    v.total = false;
    if (!tcc_pair(ops, x, y, mark)) {
      v.tcc = false;
      break;
    }
  }
  return v;
}

Permutability combine(const ElementOps& ops, const Lattices& l, const std::vector<RowVerdict>& rows) {
  Permutability out;
  out.mutual = true;
  out.total = true;
  out.tcc = true;
  for (const auto& v : rows) {
    out.mutual = out.mutual && v.x_with_b;
    out.total = out.total && v.total;
    out.tcc = out.tcc && v.tcc;
  }
  std::vector<char> mark(ops.size(), 0);
  for (const auto& y : l.sub_b)
    if (!ops.permute(l.a, y, mark)) {
      out.mutual = false;
      break;
    }
  return out;
}

}  // namespace

Factorisation make_factorisation(const Group& g, const Group& a, const Group& b) {
  if (!g.contains_subgroup(a) || !g.contains_subgroup(b)) throw Error("factor is not a subgroup of G");
  const auto ab = intersection(a, b);
  if (a.order() * b.order() != g.order() * ab.order()) throw Error("not a factorisation");
  return {g, a.with_parent(g), b.with_parent(g)};
}

Factorisation trivial_factorisation(const Group& g) { return {g, g, g}; }

CoreVerdict is_core_factorisation_serial(const Factorisation& f) {
  for (const auto& k : all_normals(f.g)) {
    if (k.order() == f.g.order()) continue;
    if (!covers_above(f, k)) return {false, k};
  }
  return {};
}

CoreVerdict is_core_factorisation(const Factorisation& f) {
  const auto normals = all_normals(f.g);
  std::vector<char> ok(normals.size(), 1);
  const auto n = static_cast<long long>(normals.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i)
    if (normals[i].order() != f.g.order()) ok[i] = covers_above(f, normals[i]);
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (!ok[i]) return {false, normals[i]};
  return {};
}

std::optional<CoreWitness> chief_witness(const Factorisation& f) {
  CoreWitness w;
  std::vector<Stage> path;
  bool first_branch = true;
  const auto one = Group::trivial(f.g.degree()).with_parent(f.g);
  if (!ascend(f, one, path, w, first_branch)) return std::nullopt;
  w.series.terms.push_back(one);
  for (const auto& s : path) {
    w.series.factor_orders.push_back(s.term.order() / w.series.terms.back().order());
    w.series.terms.push_back(s.term);
    w.labels.push_back(s.label);
  }
  return w;
}

WitnessCheck verify_witness(const Factorisation& f, const CoreWitness& w) {
  WitnessCheck out;
  const auto& t = w.series.terms;
  out.chief = !t.empty() && t.front().is_trivial() && t.back().order() == f.g.order() &&
              w.labels.size() + 1 == t.size();
  out.cover = out.chief;
  out.prefactorised = true;
  out.inner_core = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.prefactorised = out.prefactorised && is_prefactorised(f, t[i]);
    if (i == 0) continue;
    if (!f.g.is_normal_subgroup(t[i]) || t[i].order() <= t[i - 1].order() || !t[i].contains_subgroup(t[i - 1])) {
      out.chief = false;
      continue;
    }
    CosetAction action(f.g, t[i - 1]);
    const auto image = action.image(t[i]);
    const auto mins = minimal_normals(action.quotient());
    if (std::find(mins.begin(), mins.end(), image) == mins.end()) out.chief = false;
    if (i - 1 < w.labels.size()) {
      const auto& x = w.labels[i - 1] == 'A' ? f.a : f.b;
      out.cover = out.cover && covered(f.g, t[i], x, t[i - 1]);
    }
  }
  if (!out.prefactorised) {
    out.inner_core = false;
    return out;
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    const auto inner = make_factorisation(t[i], intersection(t[i], f.a), intersection(t[i], f.b));
    out.inner_core = out.inner_core && is_core_factorisation(inner).holds;
  }
  return out;
}

bool is_prefactorised(const Factorisation& f, const Group& s) {
  if (!f.g.contains_subgroup(s)) throw Error("not a subgroup of G");
  const auto sa = intersection(s, f.a);
  const auto sb = intersection(s, f.b);
  return sa.order() * sb.order() == s.order() * intersection(sa, f.b).order();
}

Factorisation quotient_factorisation(const Factorisation& f, const Group& m) {
  CosetAction action(f.g, m);
  return make_factorisation(action.quotient(), action.image(f.a), action.image(f.b));
}

std::vector<Group> all_subgroups(const Group& h, std::size_t cap) {
  check_cap(h, cap);
  const ElementOps ops(h);
  std::vector<Group> out;
  for (const auto& s : subgroup_lattice(ops, h, h)) {
    std::vector<Perm> elems;
    for (auto i : s) elems.push_back(h.element(i));
    out.push_back(Group::from_elements(std::move(elems), h.degree()).with_parent(h));
  }
  return out;
}

Permutability permutability_serial(const Factorisation& f, std::size_t cap) {
  const ElementOps ops(f.g);
  const auto l = lattices(ops, f, cap);
  std::vector<RowVerdict> rows;
  for (const auto& x : l.sub_a) rows.push_back(row_verdict(ops, l, x));
  return combine(ops, l, rows);
}

Permutability permutability(const Factorisation& f, std::size_t cap) {
  const ElementOps ops(f.g);
  const auto l = lattices(ops, f, cap);
  std::vector<RowVerdict> rows(l.sub_a.size());
  const auto n = static_cast<long long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) rows[i] = row_verdict(ops, l, l.sub_a[i]);
  return combine(ops, l, rows);
}

}  // namespace vanish
