#include "vanish/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "vanish/numtheory.hpp"

namespace vanish {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw Error("permutation images are not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t Perm::order() const {
  std::vector<bool> seen(degree(), false);
  std::size_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::pow(long long k) const {
  const auto ord = static_cast<long long>(order());
  k %= ord;
  if (k < 0) k += ord;
  Perm r(degree());
  for (long long i = 0; i < k; ++i) r = compose(r, *this);
  return r;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.degree() != g.degree()) throw Error("compose: degree mismatch");
  std::vector<Point> img(f.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g[f[i]];
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

Perm commutator(const Perm& x, const Perm& y) { return x.inverse() * y.inverse() * x * y; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_perm(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535) throw ParseError("degree out of range");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  if (text == "()") return Perm(std::move(img));
  if (text.empty()) throw ParseError("empty permutation text");

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
    const auto body = text.substr(pos + 1, close - pos - 1);
    std::vector<std::size_t> cycle;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto token = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError("malformed token \"" + std::string(token) + "\" in \"" + std::string(text) + "\"");
      if (token.size() > 6) throw ParseError("point " + std::string(token) + " out of range 1.." + std::to_string(degree));
      const auto point = std::stoul(std::string(token));
      if (point < 1 || point > degree)
        throw ParseError("point " + std::string(token) + " out of range 1.." + std::to_string(degree));
      if (used[point - 1]) throw ParseError("repeated point " + std::string(token) + " in \"" + std::string(text) + "\"");
      used[point - 1] = true;
      cycle.push_back(point - 1);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    pos = close + 1;
  }
  return Perm(std::move(img));
}

// ---------------------------------------------------------------- Group

namespace detail {
struct GroupData {
  std::size_t degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
};
}  // namespace detail

namespace {

std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t degree, std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  Perm id(degree);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      auto y = out[head] * s;
      if (seen.insert(y).second) {
        if (out.size() >= cap) throw CapExceeded("order cap exceeded (cap " + std::to_string(cap) + ")");
        out.push_back(std::move(y));
      }
    }
  }
  return out;
}

std::shared_ptr<detail::GroupData> make_data(std::vector<Perm> gens, std::vector<Perm> elements, std::size_t degree) {
  auto d = std::make_shared<detail::GroupData>();
  d->degree = degree;
  std::sort(elements.begin(), elements.end());
  d->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) d->index.emplace(elements[i], i);
  d->elements = std::move(elements);
  d->gens = std::move(gens);
  return d;
}

}  // namespace

Group Group::generate(std::vector<Perm> gens, std::size_t degree, std::size_t cap) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("generate: generator degree mismatch");
  auto elements = closure(gens, degree, cap);
  return Group(make_data(std::move(gens), std::move(elements), degree));
}

Group Group::from_elements(std::vector<Perm> elements, std::size_t degree) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::unordered_set<Perm, PermHash> current{Perm(degree)};
  std::vector<Perm> gens;
  for (const auto& x : elements) {
    if (x.degree() != degree) throw Error("from_elements: degree mismatch");
    if (current.count(x)) continue;
    gens.push_back(x);
    auto c = closure(gens, degree, elements.size() + 1);
    current = std::unordered_set<Perm, PermHash>(c.begin(), c.end());
  }
  if (current.size() != elements.size()) throw Error("from_elements: element set is not a group");
  return Group(make_data(std::move(gens), std::move(elements), degree));
}

Group Group::trivial(std::size_t degree) { return generate({}, degree); }

Group::Group() : Group(trivial(1)) {}

std::size_t Group::degree() const { return data_->degree; }
std::size_t Group::order() const { return data_->elements.size(); }
std::span<const Perm> Group::generators() const { return data_->gens; }
std::span<const Perm> Group::elements() const { return data_->elements; }
const Perm& Group::element(std::size_t i) const { return data_->elements[i]; }

bool Group::contains(const Perm& x) const { return data_->index.count(x) != 0; }

std::optional<std::size_t> Group::index_of(const Perm& x) const {
  auto it = data_->index.find(x);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Group::at(const Perm& x) const {
  auto it = data_->index.find(x);
  if (it == data_->index.end()) throw Error("element " + x.to_cycles() + " is not in the group");
  return it->second;
}

bool Group::contains_subgroup(const Group& h) const {
  if (h.degree() != degree()) return false;
  for (const auto& s : h.generators())
    if (!contains(s)) return false;
  return true;
}

bool Group::is_normal_subgroup(const Group& h) const {
  if (!contains_subgroup(h)) return false;
  for (const auto& g : generators())
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, g))) return false;
  return true;
}

std::optional<Group> Group::parent() const {
  if (!parent_) return std::nullopt;
  return Group(parent_);
}

Group Group::with_parent(const Group& parent) const {
  if (!parent.contains_subgroup(*this)) throw Error("with_parent: not a subgroup of the given parent");
  return Group(data_, parent.data_);
}

bool operator==(const Group& a, const Group& b) {
  if (a.data_ == b.data_) return true;
  return a.degree() == b.degree() && a.order() == b.order() &&
         std::equal(a.elements().begin(), a.elements().end(), b.elements().begin());
}

bool canonical_less(const Group& a, const Group& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return std::lexicographical_compare(a.elements().begin(), a.elements().end(), b.elements().begin(),
                                      b.elements().end());
}

Group subgroup_generated(const Group& g, std::vector<Perm> gens) {
  for (const auto& s : gens)
    if (!g.contains(s)) throw Error("subgroup_generated: generator " + s.to_cycles() + " not in group");
  return Group::generate(std::move(gens), g.degree(), g.order() + 1).with_parent(g);
}

Group intersection(const Group& a, const Group& b) {
  const Group& small = a.order() <= b.order() ? a : b;
  const Group& big = a.order() <= b.order() ? b : a;
  std::vector<Perm> els;
  for (const auto& x : small.elements())
    if (big.contains(x)) els.push_back(x);
  return Group::from_elements(std::move(els), a.degree());
}

Group join(const Group& a, const Group& b) {
  std::vector<Perm> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Group::generate(std::move(gens), a.degree());
}

// ---------------------------------------------------------------- classes

ClassData conjugacy_classes(const Group& g) {
  ClassData cd;
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  cd.class_of.assign(g.order(), kUnset);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (cd.class_of[i] != kUnset) continue;
    const auto cls = cd.reps.size();
    std::vector<std::size_t> orbit{i};
    cd.class_of[i] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const auto& y = g.element(orbit[head]);
      for (const auto& s : g.generators()) {
        const auto j = g.at(conjugate(y, s));
        if (cd.class_of[j] == kUnset) {
          cd.class_of[j] = cls;
          orbit.push_back(j);
        }
      }
    }
    cd.reps.push_back(g.element(i));
    cd.sizes.push_back(orbit.size());
    cd.rep_orders.push_back(g.element(i).order());
    cd.exponent = std::lcm(cd.exponent, cd.rep_orders.back());
  }
  return cd;
}

Group centralizer(const Group& g, const Perm& x) {
  if (!g.contains(x)) throw Error("centralizer: " + x.to_cycles() + " is not in the group");
  std::vector<Perm> els;
  for (const auto& y : g.elements())
    if (y * x == x * y) els.push_back(y);
  return Group::from_elements(std::move(els), g.degree()).with_parent(g);
}

std::size_t index(const Group& g, const Perm& x) { return g.order() / centralizer(g, x).order(); }

ElementInfo classify_element(const Group& g, const Perm& x) {
  if (!g.contains(x)) throw Error("classify_element: " + x.to_cycles() + " is not in the group");
  ElementInfo info;
  info.order = x.order();
  info.primes = prime_divisors(info.order);
  info.is_prime_power_order = info.primes.size() == 1;
  return info;
}

// ---------------------------------------------------------------- quotients

CosetAction::CosetAction(const Group& g, const Group& n) : g_(g), n_(n) {
  if (!g.contains_subgroup(n)) throw Error("coset action: N is not a subgroup of G");
  if (!g.is_normal_subgroup(n)) throw Error("coset action: N is not normal in G");
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  coset_of_.assign(g.order(), kUnset);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of_[i] != kUnset) continue;
    const auto c = reps_.size();
    reps_.push_back(i);
    for (const auto& m : n.elements()) coset_of_[g.at(m * g.element(i))] = c;
  }
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) gens.push_back(project(s));
  quotient_ = Group::generate(std::move(gens), reps_.size(), reps_.size() + 1);
}

std::size_t CosetAction::coset_of(const Perm& x) const { return coset_of_[g_.at(x)]; }

Perm CosetAction::project(const Perm& x) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c)
    img[c] = static_cast<Point>(coset_of(g_.element(reps_[c]) * x));
  return Perm(std::move(img));
}

Group CosetAction::image(const Group& h) const {
  std::vector<Perm> gens;
  for (const auto& s : h.generators()) gens.push_back(project(s));
  return subgroup_generated(quotient_, std::move(gens));
}

Group CosetAction::preimage(const Group& hbar) const {
  std::vector<bool> good(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) good[c] = hbar.contains(project(g_.element(reps_[c])));
  std::vector<Perm> els;
  for (std::size_t i = 0; i < g_.order(); ++i)
    if (good[coset_of_[i]]) els.push_back(g_.element(i));
  return Group::from_elements(std::move(els), g_.degree()).with_parent(g_);
}

CosetAction coset_action_quotient(const Group& g, const Group& n) { return CosetAction(g, n); }

}  // namespace vanish
