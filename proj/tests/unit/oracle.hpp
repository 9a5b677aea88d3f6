#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works straight from the definitions on plain vectors and
// never calls into loopkit beyond the Element type.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "loopkit/report.hpp"

namespace oracle {

using loopkit::Element;
using Table = std::vector<Element>;  // row-major n x n

inline std::size_t order_of(const Table& t) {
  std::size_t n = 0;
  while (n * n < t.size()) ++n;
  return n;
}

inline Element mul(const Table& t, Element x, Element y) { return t[x * order_of(t) + y]; }

// Solves x * z == y by scanning the row.
inline Element ldiv(const Table& t, Element x, Element y) {
  const std::size_t n = order_of(t);
  for (Element z = 0; z < n; ++z) {
    if (t[x * n + z] == y) return z;
  }
  return static_cast<Element>(n);
}

inline Element rdiv(const Table& t, Element x, Element y) {
  const std::size_t n = order_of(t);
  for (Element z = 0; z < n; ++z) {
    if (t[z * n + y] == x) return z;
  }
  return static_cast<Element>(n);
}

inline Element inv(const Table& t, Element x) { return ldiv(t, x, 0); }

// The unique z with z*z == x, or n when there is none or several.
inline Element sqrt(const Table& t, Element x) {
  const std::size_t n = order_of(t);
  Element found = static_cast<Element>(n);
  for (Element z = 0; z < n; ++z) {
    if (t[z * n + z] == x) {
      if (found != n) return static_cast<Element>(n);
      found = z;
    }
  }
  return found;
}

inline Table from_op(std::size_t n, const std::function<Element(Element, Element)>& op) {
  Table t(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) t[x * n + y] = op(x, y);
  }
  return t;
}

// Heisenberg group over Z/p straight from 3x3 matrix multiplication, with
// [[1,a,c],[0,1,b],[0,0,1]] stored at (a * p + b) * p + c.
inline Table heisenberg(std::size_t p) {
  const std::size_t n = p * p * p;
  return from_op(n, [p](Element x, Element y) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
    return static_cast<Element>((ra * p + rb) * p + rc);
  });
}

inline Table cyclic(std::size_t n) {
  return from_op(n, [n](Element x, Element y) { return static_cast<Element>((x + y) % n); });
}

// x o y = x y sqrt(y^-1 x^-1 y x), every piece found by table scans.
inline Table gamma_of_group(const Table& g) {
  const std::size_t n = order_of(g);
  return from_op(n, [&](Element x, Element y) {
    const Element comm = mul(g, mul(g, mul(g, inv(g, y), inv(g, x)), y), x);
    return mul(g, mul(g, x, y), sqrt(g, comm));
  });
}

// x (+) y = sqrt(x y y x).
inline Table bruck_of_group(const Table& g) {
  const std::size_t n = order_of(g);
  return from_op(n, [&](Element x, Element y) {
    return sqrt(g, mul(g, mul(g, mul(g, x, y), y), x));
  });
}

inline bool associative(const Table& t) {
  const std::size_t n = order_of(t);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul(t, mul(t, x, y), z) != mul(t, x, mul(t, y, z))) return false;
  return true;
}

inline bool commutative(const Table& t) {
  const std::size_t n = order_of(t);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (mul(t, x, y) != mul(t, y, x)) return false;
  return true;
}

// x^k by repeated left multiplication; negative k uses the inverse.
inline Element power(const Table& t, Element x, long long k) {
  Element base = k < 0 ? inv(t, x) : x;
  Element acc = 0;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) acc = mul(t, base, acc);
  return acc;
}

// Tries every permutation fixing 0; only for small n.
inline bool isomorphic(const Table& a, const Table& b) {
  const std::size_t n = order_of(a);
  if (order_of(b) != n) return false;
  std::vector<Element> f(n);
  std::iota(f.begin(), f.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      for (Element y = 0; y < n && ok; ++y)
        ok = f[mul(a, x, y)] == mul(b, f[x], f[y]);
    if (ok) return true;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return false;
}

// All normalized Latin squares (first row and column fixed to 0..n-1),
// filled cell by cell with row/column occupancy tests.
inline std::vector<Table> all_loops(std::size_t n) {
  std::vector<Table> out;
  Table t(n * n, static_cast<Element>(n));
  for (Element i = 0; i < n; ++i) {
    t[i] = i;
    t[i * n] = i;
  }
  std::function<void(std::size_t)> fill = [&](std::size_t cell) {
    if (cell == n * n) {
      out.push_back(t);
      return;
    }
    const std::size_t x = cell / n, y = cell % n;
    if (x == 0 || y == 0) return fill(cell + 1);
    for (Element v = 0; v < n; ++v) {
      bool clash = false;
      for (std::size_t k = 0; k < y && !clash; ++k) clash = t[x * n + k] == v;
      for (std::size_t k = 0; k < x && !clash; ++k) clash = t[k * n + y] == v;
      if (clash) continue;
      t[cell] = v;
      fill(cell + 1);
      t[cell] = static_cast<Element>(n);
    }
  };
  fill(0);
  return out;
}

}  // namespace oracle
