#pragma once

// Brute-force reference implementations used only by the tests. None of
// these call the library's quotient, closure or enumeration code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "homlat/monoid.hpp"

namespace oracle {

using homlat::Elem;
using homlat::FinMonoid;
using homlat::MonoidHom;
using homlat::Subset;

using Relation = std::vector<std::vector<bool>>;

/// Smallest congruence of a commutative monoid containing k × {0}, by fixpoint.
inline Relation congruence(const FinMonoid& m, Subset k) {
  const std::size_t n = m.size();
  Relation r(n, std::vector<bool>(n, false));
  for (Elem i = 0; i < n; ++i) r[i][i] = true;
  for (Elem x : k.members()) r[x][0] = r[0][x] = true;
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](Elem a, Elem b) {
      if (!r[a][b]) r[a][b] = changed = true;
    };
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        set(b, a);
        for (Elem x = 0; x < n; ++x) set(m.op(a, x), m.op(b, x));
        for (Elem c = 0; c < n; ++c)
          if (r[b][c]) set(a, c);
      }
  }
  return r;
}

/// K is normal iff it is the class of 0 under the congruence it generates.
inline bool normal(const FinMonoid& m, Subset k) {
  if (!m.is_submonoid(k)) return false;
  const auto r = congruence(m, k);
  for (Elem x = 0; x < m.size(); ++x)
    if (r[x][0] != k.contains(x)) return false;
  return true;
}

inline std::vector<Subset> normal_subsets(const FinMonoid& m) {
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m.size()); bits += 2)
    if (normal(m, Subset(bits))) out.push_back(Subset(bits));
  return out;
}

/// Smallest normal submonoid containing s (intersection of all that do).
inline Subset join(const FinMonoid& m, Subset s) {
  Subset best = m.all();
  for (Subset k : normal_subsets(m))
    if ((k & s) == s && k.size() < best.size()) best = k;
  return best;
}

/// f normal iff its fibres are the classes of the congruence generated by
/// ker f and its image is a normal submonoid of the codomain.
inline bool normal_map(const MonoidHom& f) {
  const auto& d = *f.dom();
  Subset ker;
  for (Elem x = 0; x < d.size(); ++x)
    if (f(x) == 0) ker.insert(x);
  const auto r = congruence(d, ker);
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b)
      if (r[a][b] != (f(a) == f(b))) return false;
  return normal(*f.cod(), f.image());
}

// ---- lattice census ----

/// Order matrix of a lattice on {0..n-1} with 0 as bottom.
using Order = std::vector<std::vector<bool>>;

inline bool has_joins(const Order& o) {
  const std::size_t n = o.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::vector<Elem> ub;
      for (Elem c = 0; c < n; ++c)
        if (o[a][c] && o[b][c]) ub.push_back(c);
      bool least = false;
      for (Elem u : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](Elem v) { return o[u][v]; })) least = true;
      if (!least) return false;
    }
  return true;
}

inline std::vector<bool> encode(const Order& o, const std::vector<Elem>& p) {
  const std::size_t n = o.size();
  std::vector<bool> code(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) code[p[a] * n + p[b]] = o[a][b];
  return code;
}

inline std::vector<bool> canonical(const Order& o) {
  std::vector<Elem> p(o.size());
  std::iota(p.begin(), p.end(), 0);
  auto best = encode(o, p);
  while (std::next_permutation(p.begin() + 1, p.end())) best = std::min(best, encode(o, p));
  return best;
}

/// Every partial order on n labelled points with 0 as minimum that has all
/// binary joins, reduced to isomorphism classes.
inline std::set<std::vector<bool>> lattices(std::size_t n) {
  std::set<std::vector<bool>> classes;
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem a = 1; a < n; ++a)
    for (Elem b = 1; b < n; ++b)
      if (a != b) slots.emplace_back(a, b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Order o(n, std::vector<bool>(n, false));
    for (Elem a = 0; a < n; ++a) o[0][a] = o[a][a] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) o[slots[s].first][slots[s].second] = true;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) {
        if (a != b && o[a][b] && o[b][a]) ok = false;
        for (Elem c = 0; c < n && ok; ++c)
          if (o[a][b] && o[b][c] && !o[a][c]) ok = false;
      }
    if (ok && has_joins(o)) classes.insert(canonical(o));
  }
  return classes;
}

}  // namespace oracle
