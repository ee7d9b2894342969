#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlat/lattice.hpp"
#include "homlat/monoid.hpp"

namespace homlat {

/// A lattice given by its down-sets: bit j of down[i] is set iff j ≤ i.
/// Labels form a linear extension, so j ≤ i implies j ≤ i as integers.
struct LatticeShape {
  std::vector<std::uint64_t> down;

  std::size_t size() const { return down.size(); }
  bool leq(Elem a, Elem b) const { return (down[b] >> a) & 1u; }

  FiniteLattice lattice() const {
    std::vector<std::vector<bool>> o(size(), std::vector<bool>(size()));
    for (Elem a = 0; a < size(); ++a)
      for (Elem b = 0; b < size(); ++b) o[a][b] = leq(a, b);
    return FiniteLattice::from_order(o);
  }

  /// The join table as a commutative idempotent monoid with identity 0.
  MonoidPtr monoid(std::string name = {}) const {
    const auto l = lattice();
    std::vector<std::vector<Elem>> t(size(), std::vector<Elem>(size()));
    for (Elem a = 0; a < size(); ++a)
      for (Elem b = 0; b < size(); ++b) t[a][b] = l.join(a, b);
    return FinMonoid::make(std::move(t), {}, std::move(name));
  }

  std::vector<std::pair<Elem, Elem>> covers() const { return lattice().covers(); }
};

namespace detail {

/// True iff some relabeling along a linear extension gives a lexicographically
/// smaller down-set sequence.
inline bool has_smaller_relabeling(const std::vector<std::uint64_t>& down) {
  const std::size_t n = down.size();
  std::vector<Elem> perm;      // new label → old
  std::vector<Elem> inv(n, n);  // old → new
  perm.reserve(n);
  auto rec = [&](auto&& self) -> bool {
    const std::size_t p = perm.size();
    if (p == n) return false;
    for (Elem c = 0; c < n; ++c) {
      if (inv[c] != n) continue;
      bool ready = true;
      std::uint64_t mapped = 0;
      for (std::uint64_t b = down[c] & ~(std::uint64_t{1} << c); b; b &= b - 1) {
        const Elem j = static_cast<Elem>(std::countr_zero(b));
        if (inv[j] == n) {
          ready = false;
          break;
        }
        mapped |= std::uint64_t{1} << inv[j];
      }
      if (!ready) continue;
      mapped |= std::uint64_t{1} << p;
      if (mapped < down[p]) return true;
      if (mapped > down[p]) continue;
      perm.push_back(c);
      inv[c] = p;
      const bool found = self(self);
      inv[c] = n;
      perm.pop_back();
      if (found) return true;
    }
    return false;
  };
  return rec(rec);
}

}  // namespace detail

/// All lattices of the given size up to isomorphism, each in its
/// lexicographically least natural labeling. Grows naturally labeled
/// meet-semilattices by one maximal element at a time.
inline std::vector<LatticeShape> enumerate_lattices(std::size_t n) {
  if (n == 0 || n > 16) throw std::invalid_argument("lattice enumeration supports sizes 1..16");
  std::vector<LatticeShape> out;
  std::vector<std::uint64_t> down{1};
  auto rec = [&](auto&& self) -> void {
    const std::size_t k = down.size();
    if (k == n) {
      if (down.back() != (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1)) return;
      if (!detail::has_smaller_relabeling(down)) out.push_back({down});
      return;
    }
    // strict down-set of the new element: down-closed, contains 0
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (k - 1)); ++rest) {
      const std::uint64_t d = (rest << 1) | 1u;
      bool closed = true;
      for (std::uint64_t b = d; b && closed; b &= b - 1) {
        const auto j = std::countr_zero(b);
        closed = (down[j] & ~d) == 0;
      }
      if (!closed) continue;
      const std::uint64_t full = d | (std::uint64_t{1} << k);
      // every pair involving the new element needs a meet
      bool meets = true;
      for (Elem i = 0; i < k && meets; ++i) {
        const std::uint64_t common = down[i] & full;
        bool principal = false;
        for (Elem m = 0; m < k && !principal; ++m) principal = down[m] == common;
        meets = principal;
      }
      if (!meets) continue;
      down.push_back(full);
      self(self);
      down.pop_back();
    }
  };
  if (n == 1)
    out.push_back({down});
  else
    rec(rec);
  return out;
}

}  // namespace homlat
