#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace homlat {

using Elem = std::size_t;

/// Maximum number of elements a FinMonoid may have (one bit per element).
inline constexpr std::size_t kMaxElements = 64;

/// A set of element indices of a finite monoid, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<Elem> elems) {
    Subset s;
    for (Elem e : elems) s.insert(e);
    return s;
  }
  static Subset from(const std::vector<Elem>& elems) {
    Subset s;
    for (Elem e : elems) s.insert(e);
    return s;
  }
  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr bool contains(Elem e) const { return e < 64 && ((bits_ >> e) & 1u) != 0; }
  void insert(Elem e) {
    if (e >= kMaxElements) throw std::out_of_range("Subset: element index exceeds 63");
    bits_ |= std::uint64_t{1} << e;
  }
  void erase(Elem e) {
    if (e < kMaxElements) bits_ &= ~(std::uint64_t{1} << e);
  }

  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Elem>(std::countr_zero(b)));
    return out;
  }

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Orders by cardinality, then by bit pattern; used for canonical listings.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace homlat
