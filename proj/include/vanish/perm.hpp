#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vanish/error.hpp"

namespace vanish {

using Point = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 20000;

/// A permutation of {0, ..., degree-1}. Externally points are 1-based
/// (cycle notation); internally the image array is 0-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Takes 0-based images; throws Error unless they form a bijection.
  explicit Perm(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::size_t order() const;
  Perm pow(long long k) const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Perm compose(const Perm& f, const Perm& g);

  std::vector<Point> images_;
};

/// Product under the left-to-right convention: x maps to g(f(x)).
Perm compose(const Perm& f, const Perm& g);
inline Perm operator*(const Perm& f, const Perm& g) { return compose(f, g); }

/// g^-1 x g.
Perm conjugate(const Perm& x, const Perm& g);
/// x^-1 y^-1 x y.
Perm commutator(const Perm& x, const Perm& y);

/// Parses "(1,2)(3,4)" style cycle notation; "()" is the identity.
Perm parse_perm(std::string_view text, std::size_t degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

namespace detail {
struct GroupData;
}

/// A finite permutation group with a fully enumerated, canonically sorted
/// element list. Immutable; copies share storage.
class Group {
 public:
  /// The trivial group on one point.
  Group();
  /// Breadth-first closure of the generators. Throws CapExceeded when the
  /// closure would exceed `cap` elements.
  static Group generate(std::vector<Perm> gens, std::size_t degree,
                        std::size_t cap = kDefaultOrderCap);
  /// Builds a group from an element set already known to be closed. A small
  /// generating set is chosen greedily in canonical order.
  static Group from_elements(std::vector<Perm> elements, std::size_t degree);
  static Group trivial(std::size_t degree);

  std::size_t degree() const;
  std::size_t order() const;
  std::span<const Perm> generators() const;
  std::span<const Perm> elements() const;
  const Perm& element(std::size_t i) const;
  const Perm& identity() const { return element(0); }

  bool contains(const Perm& x) const;
  std::optional<std::size_t> index_of(const Perm& x) const;
  /// Index of an element known to be in the group; throws otherwise.
  std::size_t at(const Perm& x) const;

  bool is_trivial() const { return order() == 1; }
  /// Every generator of `h` lies in this group.
  bool contains_subgroup(const Group& h) const;
  bool is_normal_subgroup(const Group& h) const;

  /// Optional ambient group (set for subgroups built by library routines).
  std::optional<Group> parent() const;
  Group with_parent(const Group& parent) const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  explicit Group(std::shared_ptr<const detail::GroupData> data,
                 std::shared_ptr<const detail::GroupData> parent = nullptr)
      : data_(std::move(data)), parent_(std::move(parent)) {}
  std::shared_ptr<const detail::GroupData> data_;
  std::shared_ptr<const detail::GroupData> parent_;
};

/// Canonical total order on groups: by order, then element lists.
bool canonical_less(const Group& a, const Group& b);

Group subgroup_generated(const Group& g, std::vector<Perm> gens);
Group intersection(const Group& a, const Group& b);
/// Subgroup generated by both arguments.
Group join(const Group& a, const Group& b);

struct ClassData {
  std::vector<Perm> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> rep_orders;
  /// class_of[i] is the class of element i of the group.
  std::vector<std::size_t> class_of;
  std::size_t exponent = 1;

  std::size_t count() const { return reps.size(); }
};

ClassData conjugacy_classes(const Group& g);

Group centralizer(const Group& g, const Perm& x);
std::size_t index(const Group& g, const Perm& x);

struct ElementInfo {
  std::size_t order = 1;
  bool is_prime_power_order = false;
  std::vector<std::size_t> primes;
  bool is_p_regular(std::size_t p) const { return order % p != 0; }
};

ElementInfo classify_element(const Group& g, const Perm& x);

/// G acting on the right cosets of a normal subgroup N.
class CosetAction {
 public:
  CosetAction(const Group& g, const Group& n);

  const Group& quotient() const { return quotient_; }
  const Group& group() const { return g_; }
  const Group& kernel() const { return n_; }
  std::size_t coset_of(const Perm& x) const;
  /// The natural epimorphism G -> G/N.
  Perm project(const Perm& x) const;
  Group image(const Group& h) const;
  /// Full preimage in G of a subgroup of the quotient.
  Group preimage(const Group& hbar) const;

 private:
  Group g_;
  Group n_;
  std::vector<std::size_t> coset_of_;
  std::vector<std::size_t> reps_;
  Group quotient_;
};

CosetAction coset_action_quotient(const Group& g, const Group& n);

}  // namespace vanish

template <>
struct std::hash<vanish::Perm> {
  std::size_t operator()(const vanish::Perm& p) const noexcept {
    return vanish::PermHash{}(p);
  }
};
