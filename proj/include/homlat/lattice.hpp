#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homlat/semilattice.hpp"

namespace homlat {

/// A finite lattice given by its order, with join and meet tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Builds join/meet from a partial order; throws if some pair lacks a sup or inf.
  static FiniteLattice from_order(const std::vector<std::vector<bool>>& leq) {
    FiniteLattice l;
    l.n_ = leq.size();
    l.leq_ = leq;
    l.join_.assign(l.n_, std::vector<Elem>(l.n_));
    l.meet_.assign(l.n_, std::vector<Elem>(l.n_));
    for (Elem a = 0; a < l.n_; ++a)
      for (Elem b = 0; b < l.n_; ++b) {
        auto sup = l.extremal_bound(a, b, true);
        auto inf = l.extremal_bound(a, b, false);
        if (!sup || !inf) throw std::invalid_argument("order is not a lattice");
        l.join_[a][b] = *sup;
        l.meet_[a][b] = *inf;
      }
    l.find_extremes();
    return l;
  }

  /// Takes join and meet tables as given (e.g. from categorical constructions)
  /// and checks that they realize suprema and infima of the order.
  static FiniteLattice from_tables(std::vector<std::vector<bool>> leq, std::vector<std::vector<Elem>> join,
                                   std::vector<std::vector<Elem>> meet) {
    FiniteLattice l;
    l.n_ = leq.size();
    l.leq_ = std::move(leq);
    l.join_ = std::move(join);
    l.meet_ = std::move(meet);
    for (Elem a = 0; a < l.n_; ++a)
      for (Elem b = 0; b < l.n_; ++b) {
        if (l.extremal_bound(a, b, true) != l.join_[a][b])
          throw std::logic_error("join table does not realize suprema at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
        if (l.extremal_bound(a, b, false) != l.meet_[a][b])
          throw std::logic_error("meet table does not realize infima at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
      }
    l.find_extremes();
    return l;
  }

  static FiniteLattice from_semilattice(const FinMonoid& m) {
    require_semilattice(m);
    std::vector<std::vector<bool>> leq(m.size(), std::vector<bool>(m.size()));
    for (Elem a = 0; a < m.size(); ++a)
      for (Elem b = 0; b < m.size(); ++b) leq[a][b] = sl_leq(m, a, b);
    return from_order(leq);
  }

  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return leq_[a][b]; }
  Elem join(Elem a, Elem b) const { return join_[a][b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a][b]; }
  Elem top() const { return top_; }
  Elem bottom() const { return bottom_; }
  const std::vector<std::vector<bool>>& order() const { return leq_; }

  std::vector<std::pair<Elem, Elem>> covers() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        if (a == b || !leq_[a][b]) continue;
        bool cover = true;
        for (Elem c = 0; c < n_ && cover; ++c)
          if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
        if (cover) out.emplace_back(a, b);
      }
    return out;
  }

  /// True iff the bijection `map` (this → other) preserves order, joins and meets.
  bool is_isomorphism(const FiniteLattice& other, const std::vector<Elem>& map) const {
    if (other.n_ != n_ || map.size() != n_) return false;
    std::vector<bool> hit(n_, false);
    for (Elem x : map) {
      if (x >= n_ || hit[x]) return false;
      hit[x] = true;
    }
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (leq_[a][b] != other.leq(map[a], map[b]) || map[join_[a][b]] != other.join(map[a], map[b]) ||
            map[meet_[a][b]] != other.meet(map[a], map[b]))
          return false;
    return true;
  }

 private:
  std::optional<Elem> extremal_bound(Elem a, Elem b, bool upper) const {
    auto bound = [&](Elem c) { return upper ? (leq_[a][c] && leq_[b][c]) : (leq_[c][a] && leq_[c][b]); };
    for (Elem c = 0; c < n_; ++c) {
      if (!bound(c)) continue;
      bool best = true;
      for (Elem d = 0; d < n_ && best; ++d)
        if (bound(d) && !(upper ? leq_[c][d] : leq_[d][c])) best = false;
      if (best) return c;
    }
    return std::nullopt;
  }
  void find_extremes() {
    top_ = bottom_ = 0;
    for (Elem a = 0; a < n_; ++a) {
      top_ = join_[top_][a];
      bottom_ = meet_[bottom_][a];
    }
  }

  std::size_t n_ = 0;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<Elem>> join_;
  std::vector<std::vector<Elem>> meet_;
  Elem top_ = 0;
  Elem bottom_ = 0;
};

/// Pentagon and diamond witnesses list (1, a, b, c, 0); for the pentagon b < a.
/// Law violations list (x, y, z).
struct LatticeWitness {
  enum class Kind { Pentagon, Diamond, LawViolation, IntervalMap };
  Kind kind;
  std::vector<Elem> elements;

  std::string describe(const std::vector<std::string>& names = {}) const {
    std::ostringstream os;
    switch (kind) {
      case Kind::Pentagon: os << "pentagon"; break;
      case Kind::Diamond: os << "diamond"; break;
      case Kind::LawViolation: os << "law-violation"; break;
      case Kind::IntervalMap: os << "interval-map"; break;
    }
    os << "(";
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (i) os << ",";
      if (elements[i] < names.size())
        os << names[elements[i]];
      else
        os << elements[i];
    }
    os << ")";
    return os.str();
  }
  friend bool operator==(const LatticeWitness&, const LatticeWitness&) = default;
};

struct LatticeVerdict {
  bool holds = true;
  std::optional<LatticeWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Raised when independent methods disagree; indicates a bug, never expected.
class InternalDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// First (x, y, z) with z ≤ x and x∧(y∨z) ≠ (x∧y)∨z.
inline std::optional<LatticeWitness> modular_law_violation(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem z = 0; z < l.size(); ++z) {
      if (!l.leq(z, x)) continue;
      for (Elem y = 0; y < l.size(); ++y)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), z))
          return LatticeWitness{LatticeWitness::Kind::LawViolation, {x, y, z}};
    }
  return std::nullopt;
}

/// First (x, y, z) with x∧(y∨z) ≠ (x∧y)∨(x∧z).
inline std::optional<LatticeWitness> distributive_law_violation(const FiniteLattice& l) {
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      for (Elem z = 0; z < l.size(); ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return LatticeWitness{LatticeWitness::Kind::LawViolation, {x, y, z}};
  return std::nullopt;
}

namespace detail {

/// Scans 5-element subsets closed under the ambient join and meet, and returns
/// the first whose induced shape is a pentagon (want_diamond = false) or a
/// diamond (want_diamond = true).
inline std::optional<LatticeWitness> find_five_element_sublattice(const FiniteLattice& l, bool want_diamond) {
  const std::size_t n = l.size();
  if (n < 5) return std::nullopt;
  std::vector<Elem> pick(5);
  auto closed = [&]() {
    for (Elem a : pick)
      for (Elem b : pick) {
        if (std::find(pick.begin(), pick.end(), l.join(a, b)) == pick.end()) return false;
        if (std::find(pick.begin(), pick.end(), l.meet(a, b)) == pick.end()) return false;
      }
    return true;
  };
  auto classify = [&]() -> std::optional<LatticeWitness> {
    Elem lo = pick[0], hi = pick[0];
    for (Elem a : pick) {
      lo = l.meet(lo, a);
      hi = l.join(hi, a);
    }
    std::vector<Elem> mid;
    for (Elem a : pick)
      if (a != lo && a != hi) mid.push_back(a);
    if (mid.size() != 3) return std::nullopt;
    int comparable = 0;
    std::pair<Elem, Elem> pair{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && l.leq(mid[i], mid[j])) {
          ++comparable;
          pair = {mid[j], mid[i]};  // (upper, lower)
        }
    if (want_diamond && comparable == 0)
      return LatticeWitness{LatticeWitness::Kind::Diamond, {hi, mid[0], mid[1], mid[2], lo}};
    if (!want_diamond && comparable == 1) {
      Elem c = 0;
      for (Elem m : mid)
        if (m != pair.first && m != pair.second) c = m;
      return LatticeWitness{LatticeWitness::Kind::Pentagon, {hi, pair.first, pair.second, c, lo}};
    }
    return std::nullopt;
  };
  auto rec = [&](auto&& self, std::size_t depth, Elem start) -> std::optional<LatticeWitness> {
    if (depth == 5) {
      if (!closed()) return std::nullopt;
      return classify();
    }
    for (Elem e = start; e < n; ++e) {
      pick[depth] = e;
      if (auto w = self(self, depth + 1, e + 1)) return w;
    }
    return std::nullopt;
  };
  return rec(rec, 0, 0);
}

}  // namespace detail

inline std::optional<LatticeWitness> find_pentagon(const FiniteLattice& l) {
  return detail::find_five_element_sublattice(l, false);
}
inline std::optional<LatticeWitness> find_diamond(const FiniteLattice& l) {
  return detail::find_five_element_sublattice(l, true);
}

/// First (x, y) for which t ↦ t∨y, [x∧y, x] → [y, x∨y], is not a bijection
/// with inverse u ↦ u∧x.
inline std::optional<LatticeWitness> interval_map_failure(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem lo = l.meet(x, y);
      const Elem hi = l.join(x, y);
      for (Elem t = 0; t < n; ++t) {
        if (l.leq(lo, t) && l.leq(t, x) && l.meet(l.join(t, y), x) != t)
          return LatticeWitness{LatticeWitness::Kind::IntervalMap, {x, y}};
        if (l.leq(y, t) && l.leq(t, hi) && l.join(l.meet(t, x), y) != t)
          return LatticeWitness{LatticeWitness::Kind::IntervalMap, {x, y}};
      }
    }
  return std::nullopt;
}

/// Modularity by law scan, pentagon search and interval isomorphism; the
/// three must agree. The witness is the pentagon when one exists.
inline LatticeVerdict is_modular(const FiniteLattice& l) {
  const auto law = modular_law_violation(l);
  const auto pentagon = find_pentagon(l);
  const auto interval = interval_map_failure(l);
  if (law.has_value() != pentagon.has_value() || law.has_value() != interval.has_value())
    throw InternalDisagreement("modularity methods disagree (law scan " + std::string(law ? "fails" : "passes") +
                               ", pentagon search " + (pentagon ? "finds one" : "finds none") + ", interval map " +
                               (interval ? "fails" : "passes") + ")");
  if (!law) return {};
  return {false, pentagon};
}

/// Distributivity by law scan, cross-checked against "modular and diamond-free".
inline LatticeVerdict is_distributive(const FiniteLattice& l) {
  const auto law = distributive_law_violation(l);
  const auto modular = is_modular(l);
  const auto diamond = find_diamond(l);
  const bool by_sublattices = modular.holds && !diamond;
  if (!law.has_value() != by_sublattices)
    throw InternalDisagreement("distributivity law scan disagrees with the forbidden-sublattice test");
  if (!law) return {};
  if (!modular.holds) return {false, modular.witness};
  return {false, diamond};
}

/// Order isomorphism a → b by backtracking, if any.
inline std::optional<std::vector<Elem>> find_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  auto below = [](const FiniteLattice& l, Elem x) {
    std::size_t c = 0;
    for (Elem y = 0; y < l.size(); ++y) c += l.leq(y, x);
    return c;
  };
  std::vector<Elem> map(n), used(n, 0);
  auto rec = [&](auto&& self, Elem x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || below(a, x) != below(b, y)) continue;
      bool ok = true;
      for (Elem p = 0; p < x && ok; ++p)
        ok = a.leq(p, x) == b.leq(map[p], y) && a.leq(x, p) == b.leq(y, map[p]);
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

}  // namespace homlat
