#include "brute_chartab.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vanish/chartab.hpp"

namespace oracle {

using vanish::Perm;
using vanish::Rational;
using Matrix = std::vector<std::vector<Cyc>>;

namespace {

bool zero(const Cyc& c) { return c == Cyc(0); }

Cyc inverse_impl(const Cyc& c) {
  const auto r = c.reduced();
  if (auto q = r.as_rational()) return Cyc(Rational(1) / *q);
  const auto n = static_cast<long long>(r.conductor());
  Cyc others(1);
  for (long long k = 2; k < n; ++k)
    if (std::gcd(k, n) == 1) others *= r.galois(k);
  const auto norm = (r * others).as_rational();
  if (!norm || *norm == 0) throw std::logic_error("inverse: norm is not a nonzero rational");
  return others.scaled(Rational(1) / *norm);
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const auto cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const auto inv = inverse_impl(m[row][c]);
    for (auto& x : m[row]) x = (x * inv).reduced();
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || zero(m[r][c])) continue;
      const auto f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] - f * m[row][k]).reduced();
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis of {v : m v = 0}.
Matrix null_space(Matrix m, std::size_t cols) {
  const auto pivots = rref(m);
  Matrix out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<Cyc> v(cols, Cyc(0));
    v[f] = Cyc(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const auto n = a.size();
  const auto k = b.size();
  const auto m = b[0].size();
  Matrix out(n, std::vector<Cyc>(m, Cyc(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  for (auto& row : out)
    for (auto& x : row) x = x.reduced();
  return out;
}

/// Characteristic polynomial det(xI - a), constant term first.
std::vector<Cyc> char_poly(const Matrix& a) {
  const auto n = a.size();
  std::vector<Cyc> c(n + 1, Cyc(0));
  c[n] = Cyc(1);
  Matrix m(n, std::vector<Cyc>(n, Cyc(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    m = multiply(a, m);
    Cyc trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += m[i][i];
    c[n - k] = trace.scaled(Rational(-1, static_cast<long>(k))).reduced();
  }
  return c;
}

Cyc evaluate(const std::vector<Cyc>& poly, const Cyc& x) {
  Cyc acc(0);
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it).reduced();
  return acc;
}

/// Distinct sums of d roots of unity of order dividing o.
std::vector<Cyc> root_sums(std::size_t o, long long d) {
  std::vector<Cyc> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  while (true) {
    Cyc s(0);
    for (auto k : pick) s += vanish::root_of_unity(o, static_cast<long long>(k));
    s = s.reduced();
    if (std::none_of(out.begin(), out.end(), [&](const Cyc& t) { return t == s; })) out.push_back(s);
    // next non-decreasing sequence
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == o - 1) --i;
    if (i == 0) break;
    const auto v = pick[i - 1] + 1;
    for (std::size_t j = i - 1; j < pick.size(); ++j) pick[j] = v;
  }
  return out;
}

struct Block {
  Matrix basis;  // rows, in reduced row echelon form
  std::vector<std::size_t> pivots;
  long long degree = 1;
};

}  // namespace

Cyc inverse(const Cyc& c) { return inverse_impl(c); }

std::vector<std::size_t> brute_class_of(const Group& g) {
  const auto n = g.order();
  std::vector<std::size_t> cls(n, n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != n) continue;
    for (const auto& y : g.elements()) cls[g.at(vanish::conjugate(g.element(i), y))] = next;
    ++next;
  }
  return cls;
}

std::vector<long long> brute_coefficients(const Group& g, const ClassData& classes) {
  const auto r = classes.count();
  std::vector<long long> a(r * r * r, 0);
  std::vector<std::size_t> rep_index(r);
  for (std::size_t k = 0; k < r; ++k) rep_index[k] = g.at(classes.reps[k]);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const auto z = g.at(g.element(x) * g.element(y));
      const auto k = classes.class_of[z];
      if (z != rep_index[k]) continue;
      ++a[(classes.class_of[x] * r + classes.class_of[y]) * r + k];
    }
  return a;
}

BruteTable brute_character_table(const Group& g, const ClassData& classes) {
  const auto r = classes.count();
  const auto order = static_cast<long long>(g.order());
  const auto e = classes.exponent;
  const auto a = brute_coefficients(g, classes);
  auto coeff = [&](std::size_t i, std::size_t j, std::size_t k) { return a[(i * r + j) * r + k]; };

  // A_j[i][k] = a(j, i, k); the central characters are common right eigenvectors.
  std::vector<Matrix> mats(r, Matrix(r, std::vector<Cyc>(r, Cyc(0))));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) mats[j][i][k] = Cyc(coeff(j, i, k));

  std::vector<std::size_t> inv(r);
  for (std::size_t j = 0; j < r; ++j) inv[j] = classes.class_of[g.at(classes.reps[j].inverse())];

  // Casimir element: eigenvalue |G| / chi(1)^2 on the central character of chi.
  Matrix omega(r, std::vector<Cyc>(r, Cyc(0)));
  for (std::size_t j = 0; j < r; ++j) {
    const auto prod = multiply(mats[j], mats[inv[j]]);
    const Rational scale(1, static_cast<long>(classes.sizes[j]));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) omega[i][k] += prod[i][k].scaled(scale);
  }

  std::vector<Block> work;
  for (long long d = 1; d * d <= order; ++d) {
    if (order % d != 0) continue;
    auto shifted = omega;
    for (std::size_t i = 0; i < r; ++i) shifted[i][i] -= Cyc(Rational(static_cast<long>(order), static_cast<long>(d * d)));
    auto basis = null_space(shifted, r);
    if (basis.empty()) continue;
    Block b;
    b.pivots = rref(basis);
    b.basis = std::move(basis);
    b.degree = d;
    work.push_back(std::move(b));
  }

  std::vector<Block> done;
  while (!work.empty()) {
    auto block = std::move(work.back());
    work.pop_back();
    const auto m = block.basis.size();
    if (m == 1) {
      done.push_back(std::move(block));
      continue;
    }
    bool split = false;
    for (std::size_t j = 0; j < r && !split; ++j) {
      // R[l][i] = coordinate l of A_j b_i.
      Matrix restricted(m, std::vector<Cyc>(m, Cyc(0)));
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Cyc> image(r, Cyc(0));
        for (std::size_t row = 0; row < r; ++row) {
          for (std::size_t k = 0; k < r; ++k) image[row] += mats[j][row][k] * block.basis[i][k];
        }
        for (std::size_t l = 0; l < m; ++l) restricted[l][i] = image[block.pivots[l]].reduced();
      }
      const auto poly = char_poly(restricted);
      std::vector<Cyc> roots;
      const Rational scale(static_cast<long>(classes.sizes[j]), static_cast<long>(block.degree));
      for (const auto& s : root_sums(classes.rep_orders[j], block.degree)) {
        const auto lambda = s.scaled(scale);
        if (zero(evaluate(poly, lambda))) roots.push_back(lambda);
      }
      if (roots.size() < 2) continue;
      split = true;
      for (const auto& lambda : roots) {
        auto shifted = restricted;
        for (std::size_t i = 0; i < m; ++i) shifted[i][i] -= lambda;
        const auto coords = null_space(shifted, m);
        Matrix vectors;
        for (const auto& c : coords) {
          std::vector<Cyc> v(r, Cyc(0));
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < r; ++k) v[k] += c[i] * block.basis[i][k];
          for (auto& x : v) x = x.reduced();
          vectors.push_back(std::move(v));
        }
        Block part;
        part.pivots = rref(vectors);
        part.basis = std::move(vectors);
        part.degree = block.degree;
        work.push_back(std::move(part));
      }
    }
    if (!split) throw std::logic_error("brute_character_table: block does not split");
  }

  BruteTable out;
  std::vector<std::pair<std::vector<Cyc>, long long>> rows;
  for (const auto& block : done) {
    const auto& w = block.basis[0];
    const auto norm = inverse_impl(w[0]);
    std::vector<Cyc> row(r);
    for (std::size_t k = 0; k < r; ++k) {
      const Rational scale(static_cast<long>(block.degree), static_cast<long>(classes.sizes[k]));
      row[k] = (w[k] * norm).scaled(scale).reduced().lifted(e);
    }
    rows.emplace_back(std::move(row), block.degree);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& x, const auto& y) { return vanish::row_less(x.first, x.second, y.first, y.second); });
  for (auto& [row, d] : rows) {
    out.rows.push_back(std::move(row));
    out.degrees.push_back(d);
  }
  return out;
}

bool rows_orthogonal(const std::vector<std::vector<Cyc>>& rows, const ClassData& classes, std::size_t order) {
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) {
      Cyc s(0);
      for (std::size_t k = 0; k < classes.count(); ++k)
        s += (rows[a][k] * rows[b][k].conj()).scaled(Rational(static_cast<long>(classes.sizes[k])));
      if (!(s == Cyc(a == b ? static_cast<long long>(order) : 0))) return false;
    }
  return true;
}

bool columns_orthogonal(const std::vector<std::vector<Cyc>>& rows, const ClassData& classes, std::size_t order) {
  for (std::size_t k = 0; k < classes.count(); ++k)
    for (std::size_t l = 0; l < classes.count(); ++l) {
      Cyc s(0);
      for (const auto& row : rows) s += row[k] * row[l].conj();
      const auto expected = k == l ? static_cast<long long>(order / classes.sizes[k]) : 0;
      if (!(s == Cyc(expected))) return false;
    }
  return true;
}

}  // namespace oracle
