#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlat/semilattice.hpp"

namespace homlat::fixtures {

/// Pentagon: 0 < C < B < A and 0 < D < A.
inline MonoidPtr n5() {
  // labels by original index: 0, A, B, C, D
  return semilattice_from_covers({5, {{0, 3}, {3, 2}, {2, 1}, {0, 4}, {4, 1}}, {"0", "A", "B", "C", "D"}}, "N5");
}

/// Diamond: three pairwise incomparable atoms a, b, c under 1.
inline MonoidPtr m3() {
  return semilattice_from_covers({5, {{0, 2}, {0, 3}, {0, 4}, {2, 1}, {3, 1}, {4, 1}}, {"0", "1", "a", "b", "c"}}, "M3");
}

/// Six-element example: A over B and C, B and C over D, C over E, D and E over 0.
inline MonoidPtr l6() {
  return semilattice_from_covers(
      {6, {{2, 1}, {3, 1}, {4, 2}, {4, 3}, {5, 3}, {0, 4}, {0, 5}}, {"0", "A", "B", "C", "D", "E"}}, "L6");
}

/// n-element chain 0 < 1 < ... < n-1.
inline MonoidPtr chain(std::size_t n) {
  CoverGraph g{n, {}, {}};
  for (Elem i = 0; i < n; ++i) g.labels.push_back(std::to_string(i));
  for (Elem i = 0; i + 1 < n; ++i) g.covers.emplace_back(i, i + 1);
  return semilattice_from_covers(g, "chain" + std::to_string(n));
}

/// 2×2 Boolean lattice.
inline MonoidPtr bool2() {
  return semilattice_from_covers({4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"}}, "bool2");
}

/// ℤ₂×ℤ₂ (the plane over F₂); g, h, k span the three lines G, H, K.
inline MonoidPtr v4() {
  return FinMonoid::make({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {"0", "g", "h", "k"}, "V4");
}

/// Cyclic group of order n.
inline MonoidPtr cyclic(std::size_t n) {
  FinMonoid::Table t(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FinMonoid::make(t, {}, "Z" + std::to_string(n));
}

/// Named fixture lookup: N5, M3, L6, V4, bool2, chain<n> / chain(n), Z<n>.
inline std::optional<MonoidPtr> by_name(const std::string& name) {
  if (name == "N5") return n5();
  if (name == "M3") return m3();
  if (name == "L6") return l6();
  if (name == "V4") return v4();
  if (name == "bool2") return bool2();
  auto numeric_suffix = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty() || rest.size() > 2 || rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const std::size_t n = std::stoul(rest);
    if (n == 0 || n > 32) return std::nullopt;
    return n;
  };
  if (auto n = numeric_suffix("chain")) return chain(*n);
  if (auto n = numeric_suffix("Z")) return cyclic(*n);
  return std::nullopt;
}

/// The commutative fixtures used by property sweeps.
inline std::vector<MonoidPtr> commutative_fixtures() {
  return {FinMonoid::trivial(), n5(), m3(), l6(), chain(2), chain(3), chain(4), bool2(), v4(), cyclic(2), cyclic(4)};
}

/// The monoidal-semilattice fixtures.
inline std::vector<MonoidPtr> semilattice_fixtures() { return {n5(), m3(), l6(), chain(1), chain(3), chain(4), bool2()}; }

}  // namespace homlat::fixtures
