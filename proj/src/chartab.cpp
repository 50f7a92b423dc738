#include "vanish/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#include "vanish/kernels.hpp"
#include "vanish/numtheory.hpp"

namespace vanish {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct Field {
  u64 q;

  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % q); }
  u64 pow(u64 a, u64 n) const {
    u64 r = 1;
    a %= q;
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, q - 2); }
  u64 of(long long n) const {
    const auto m = static_cast<long long>(q);
    return static_cast<u64>(((n % m) + m) % m);
  }
};

/// Thrown inside one attempt when the chosen prime does not separate the
/// characters; the caller moves on to the next prime.
struct Degenerate {};

/// Row-reduces `rows` in place and returns the pivot column of each row.
std::vector<std::size_t> rref(const Field& f, Mat& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const auto cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const auto iv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto t = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(t, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis of {x : a x = 0} for a square matrix a.
Mat null_space(const Field& f, Mat a) {
  const auto n = a.size();
  const auto pivots = rref(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.sub(0, a[r][free]);
    out.push_back(std::move(x));
  }
  return out;
}

/// Characteristic polynomial (constant term first) via Hessenberg form.
Vec char_poly(const Field& f, Mat h) {
  const auto n = h.size();
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const auto iv = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const auto u = f.mul(h[k][j], iv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    Vec next(k + 2, 0);
    for (std::size_t d = 0; d <= k; ++d) {
      next[d + 1] = f.add(next[d + 1], p[k][d]);
      next[d] = f.sub(next[d], f.mul(h[k][k], p[k][d]));
    }
    u64 t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = f.mul(t, h[i + 1][i]);
      const auto c = f.mul(t, h[i][k]);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = f.sub(next[d], f.mul(c, p[i][d]));
    }
    p[k + 1] = std::move(next);
  }
  return p[n];
}

std::vector<u64> roots(const Field& f, const Vec& poly) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.q; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

u64 primitive_root(const Field& f) {
  const auto primes = prime_divisors(f.q - 1);
  for (u64 g = 2; g < f.q; ++g) {
    bool ok = true;
    for (auto p : primes)
      if (f.pow(g, (f.q - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q = 2
}

/// Splits F_q^r into the common eigenvectors of the class matrices.
Mat separate(const Field& f, const ClassCoefficients& coeff) {
  const auto r = coeff.r;
  Mat identity(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Mat> spaces{identity};
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Mat& s) { return s.size() == 1; })) break;
    Mat m(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) m[i][k] = coeff(i, j, k) % f.q;
    std::vector<Mat> next;
    for (auto& w : spaces) {
      if (w.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const auto pivots = rref(f, w);
      const auto dim = w.size();
      // restriction of m to w in the coordinates read off the pivot columns
      Mat res(dim, Vec(dim, 0));
      for (std::size_t t = 0; t < dim; ++t) {
        for (std::size_t s = 0; s < dim; ++s) {
          const auto row = pivots[s];
          u64 acc = 0;
          for (std::size_t k = 0; k < r; ++k)
            if (w[t][k] != 0 && m[row][k] != 0) acc = f.add(acc, f.mul(m[row][k], w[t][k]));
          res[s][t] = acc;
        }
      }
      std::size_t found = 0;
      for (auto lambda : roots(f, char_poly(f, res))) {
        Mat shifted = res;
        for (std::size_t s = 0; s < dim; ++s) shifted[s][s] = f.sub(shifted[s][s], lambda);
        Mat piece;
        for (const auto& c : null_space(f, shifted)) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < dim; ++t)
            if (c[t] != 0)
              for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(c[t], w[t][k]));
          piece.push_back(std::move(v));
        }
        found += piece.size();
        next.push_back(std::move(piece));
      }
      if (found != dim) throw Degenerate{};
    }
    spaces = std::move(next);
  }
  Mat out;
  for (auto& s : spaces) {
    if (s.size() != 1) throw Degenerate{};
    out.push_back(std::move(s[0]));
  }
  return out;
}

bool value_less(const Cyc& a, const Cyc& b) {
  if (a.conductor() != b.conductor()) return compare(a, b) < 0;
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) return true;
    if (y[i] < x[i]) return false;
  }
  return false;
}

std::optional<CharTable> attempt(const Group& g, const ClassData& classes, const ClassCoefficients& coeff,
                                 const PowerMaps& powers, u64 q) {
  const Field f{q};
  const auto r = classes.count();
  const auto order = g.order();
  const auto e = classes.exponent;
  Mat vectors;
  try {
    vectors = separate(f, coeff);
  } catch (const Degenerate&) {
    return std::nullopt;
  }
  const auto z = f.pow(primitive_root(f), (q - 1) / e);
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t i = 0; i < r; ++i) inverse_class[i] = powers[i][classes.rep_orders[i] - 1];

  CharTable table;
  table.group_order = order;
  table.classes = classes;
  table.exponent = e;
  table.prime = q;
  const auto max_degree = static_cast<u64>(std::sqrt(static_cast<double>(order))) + 1;
  for (auto& v : vectors) {
    if (v[0] == 0) return std::nullopt;
    const auto s0 = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, s0);
    u64 s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = f.add(s, f.mul(f.mul(v[i], v[inverse_class[i]]), f.inv(classes.sizes[i] % q)));
    if (s == 0) return std::nullopt;
    const auto d2 = f.mul(order % q, f.inv(s));
    u64 d = 0;
    for (u64 c = 1; c <= max_degree; ++c)
      if (c * c <= order && order % c == 0 && f.mul(c, c) == d2) {
        d = c;
        break;
      }
    if (d == 0) return std::nullopt;
    Vec chi(r);
    for (std::size_t i = 0; i < r; ++i) chi[i] = f.mul(f.mul(v[i], d), f.inv(classes.sizes[i] % q));

    std::vector<Cyc> row(r);
    for (std::size_t i = 0; i < r; ++i) {
      const auto o = classes.rep_orders[i];
      const auto zo = f.pow(z, e / o);
      const auto zo_inv = f.inv(zo);
      const auto o_inv = f.inv(o % q);
      std::vector<Rational> poly(e, Rational(0));
      u64 total = 0;
      for (std::size_t k = 0; k < o; ++k) {
        u64 acc = 0;
        const auto step = f.pow(zo_inv, k);
        u64 w = 1;
        for (std::size_t l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(chi[powers[i][l]], w));
          w = f.mul(w, step);
        }
        const auto mult = f.mul(acc, o_inv);
        if (mult > d) return std::nullopt;
        total += mult;
        if (mult) poly[k * (e / o)] = Rational(static_cast<unsigned long>(mult));
      }
      if (total != d) return std::nullopt;
      row[i] = Cyc::from_powers(e, poly);
    }
    table.values.push_back(std::move(row));
    table.degrees.push_back(static_cast<long long>(d));
  }
  std::uint64_t sum_squares = 0;
  for (auto d : table.degrees) sum_squares += static_cast<std::uint64_t>(d * d);
  if (sum_squares != order) return std::nullopt;

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return row_less(table.values[a], table.degrees[a], table.values[b], table.degrees[b]);
  });
  CharTable sorted = table;
  for (std::size_t i = 0; i < r; ++i) {
    sorted.values[i] = table.values[perm[i]];
    sorted.degrees[i] = table.degrees[perm[i]];
  }
  return sorted;
}

}  // namespace

bool row_less(const std::vector<Cyc>& a, long long da, const std::vector<Cyc>& b, long long db) {
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (value_less(a[i], b[i])) return true;
    if (value_less(b[i], a[i])) return false;
  }
  return false;
}

std::uint64_t dixon_prime(std::size_t order, std::size_t exponent, std::uint64_t floor) {
  const auto e = static_cast<u64>(exponent);
  for (u64 q = e + 1;; q += e) {
    if (q < floor || q * q <= 4 * static_cast<u64>(order)) continue;
    if (is_prime(q)) return q;
  }
}

CharTable character_table(const Group& g, const DixonOptions& options) {
  return character_table(g, conjugacy_classes(g), options);
}

CharTable character_table(const Group& g, const ClassData& classes, const DixonOptions& options) {
  const auto coeff = class_coefficients(g, classes);
  const auto powers = power_maps(g, classes);
  u64 floor = options.min_prime;
  for (std::size_t tries = 0; tries < options.max_attempts; ++tries) {
    const auto q = dixon_prime(g.order(), classes.exponent, floor);
    if (auto t = attempt(g, classes, coeff, powers, q)) return std::move(*t);
    floor = q + 1;
  }
  throw Error("character table: no prime separated the characters after " +
              std::to_string(options.max_attempts) + " attempts");
}

std::vector<std::size_t> VanishingProfile::vanishing_p_regular_ppo(std::size_t p) const {
  std::vector<std::size_t> out;
  for (auto x : vanishing_ppo)
    if (element_order[x] % p != 0) out.push_back(x);
  return out;
}

VanishingProfile vanishing_profile(const Group& g, const CharTable& table) {
  VanishingProfile out;
  const auto& cls = table.classes;
  out.witnesses.resize(cls.count());
  for (std::size_t k = 0; k < cls.count(); ++k)
    for (std::size_t i = 0; i < table.rows(); ++i)
      if (table(i, k).is_zero()) out.witnesses[k].push_back(i);
  out.is_vanishing.resize(g.order());
  out.element_index.resize(g.order());
  out.element_order.resize(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto k = cls.class_of[x];
    out.is_vanishing[x] = !out.witnesses[k].empty();
    out.element_index[x] = cls.sizes[k];
    out.element_order[x] = cls.rep_orders[k];
    if (!out.is_vanishing[x]) continue;
    out.vanishing_elements.push_back(x);
    if (is_prime_power(cls.rep_orders[k])) out.vanishing_ppo.push_back(x);
  }
  return out;
}

VanishingProfile vanishing_profile(const Group& g) { return vanishing_profile(g, character_table(g)); }

bool is_vanishing_in(const Group& h, const Perm& x) {
  const auto idx = h.at(x);
  const auto table = character_table(h);
  const auto k = table.classes.class_of[idx];
  for (std::size_t i = 0; i < table.rows(); ++i)
    if (table(i, k).is_zero()) return true;
  return false;
}

bool has_p_defect_zero(const CharTable& table, std::size_t p) {
  for (auto d : table.degrees)
    if ((table.group_order / static_cast<std::size_t>(d)) % p != 0) return true;
  return false;
}

bool has_p_defect_zero(const Group& g, std::size_t p) { return has_p_defect_zero(character_table(g), p); }

std::string render_table(const CharTable& table) {
  const auto r = table.classes.count();
  std::vector<std::vector<std::string>> cells(table.rows() + 3, std::vector<std::string>(r + 1));
  cells[0][0] = "class";
  cells[1][0] = "size";
  cells[2][0] = "order";
  for (std::size_t k = 0; k < r; ++k) {
    cells[0][k + 1] = table.classes.reps[k].to_cycles();
    cells[1][k + 1] = std::to_string(table.classes.sizes[k]);
    cells[2][k + 1] = std::to_string(table.classes.rep_orders[k]);
  }
  for (std::size_t i = 0; i < table.rows(); ++i) {
    cells[i + 3][0] = "X." + std::to_string(i + 1);
    for (std::size_t k = 0; k < r; ++k) cells[i + 3][k + 1] = table(i, k).reduced().to_string();
  }
  std::vector<std::size_t> width(r + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c <= r; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t c = 0; c <= r; ++c) {
      out << cells[i][c];
      if (c < r) out << std::string(width[c] - cells[i][c].size() + 2, ' ');
    }
    out << '\n';
    if (i == 2) out << std::string(std::accumulate(width.begin(), width.end(), 2 * r), '-') << '\n';
  }
  return out.str();
}

}  // namespace vanish
