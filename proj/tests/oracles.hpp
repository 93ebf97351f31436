#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// library's algorithms; inputs are plain permutations, tables and structure constants.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

// (a*b)(i) = a(b(i))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm invert(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<std::set<Perm>> classes(const std::vector<Perm>& g) {
  std::vector<std::set<Perm>> out;
  std::set<Perm> seen;
  for (const auto& x : g) {
    if (seen.count(x)) continue;
    std::set<Perm> c;
    for (const auto& y : g) c.insert(compose(compose(y, x), invert(y)));
    seen.insert(c.begin(), c.end());
    out.push_back(c);
  }
  return out;
}

// c[i][j][k] = #{(x, y) in C_i x C_j : xy in C_k} / (|C_i| |C_j|)
inline std::vector<std::vector<std::vector<double>>> class_products(const std::vector<std::set<Perm>>& cl) {
  const std::size_t n = cl.size();
  std::vector<std::vector<std::vector<double>>> c(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& x : cl[i])
        for (const auto& y : cl[j]) {
          const Perm z = compose(x, y);
          for (std::size_t k = 0; k < n; ++k)
            if (cl[k].count(z)) c[i][j][k] += 1.0;
        }
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] /= static_cast<double>(cl[i].size() * cl[j].size());
    }
  return c;
}

// Closed form of the Haar weights: mu(x) is proportional to 1 / c[x][x#][e].
template <typename Tensor>
std::vector<double> haar_from_identity_coefficients(const Tensor& c, const std::vector<std::size_t>& inv, std::size_t e) {
  std::vector<double> w(inv.size());
  double total = 0.0;
  for (std::size_t i = 0; i < inv.size(); ++i) total += (w[i] = 1.0 / c(i, inv[i], e));
  for (auto& x : w) x /= total;
  return w;
}

// Characters of Z_n: chi_a(b) = exp(2 pi i a b / n)
inline cplx cyclic_character(std::size_t n, std::size_t a, std::size_t b) {
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(a * b % n) / static_cast<double>(n));
}

// All subsets of {0..n-1} containing e, closed under involution and supports of c.
template <typename Coeff>
std::vector<std::vector<std::size_t>> brute_force_subhypergroups(std::size_t n, std::size_t e, const std::vector<std::size_t>& inv,
                                                                 Coeff coeff, double tol = 1e-10) {
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (!(mask >> e & 1UL)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!(mask >> x & 1UL)) continue;
      if (!(mask >> inv[x] & 1UL)) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!(mask >> y & 1UL)) continue;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (coeff(x, y, k) > tol && !(mask >> k & 1UL)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1UL) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

// Subsets of a group (given by its table) that are subgroups containing h.
inline std::vector<std::vector<std::size_t>> brute_force_subgroups(const std::vector<std::vector<std::size_t>>& table,
                                                                    const std::vector<std::size_t>& h = {}) {
  const std::size_t n = table.size();
  std::vector<std::vector<std::size_t>> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    bool ok = std::all_of(h.begin(), h.end(), [&](std::size_t x) { return mask >> x & 1UL; });
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y)
        if ((mask >> x & 1UL) && (mask >> y & 1UL) && !(mask >> table[x][y] & 1UL)) ok = false;
    if (!ok) continue;
    std::vector<std::size_t> s;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1UL) s.push_back(x);
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
