#pragma once

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homlat/monoid.hpp"
#include "homlat/monoid_ops.hpp"

namespace homlat {

/// Hasse diagram of a finite poset: (a, b) means a is covered by b.
struct CoverGraph {
  std::size_t size = 0;
  std::vector<std::pair<Elem, Elem>> covers;
  std::vector<std::string> labels;
};

struct SemilatticeError {
  enum class Kind { OutOfRange, Cycle, NoBottom, NotHasse, NoJoin };
  Kind kind;
  Elem a = 0;
  Elem b = 0;

  std::string message() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::OutOfRange: os << "OutOfRange(" << a << "," << b << ")"; break;
      case Kind::Cycle: os << "Cycle(" << a << "," << b << ")"; break;
      case Kind::NoBottom: os << "NoBottom"; break;
      case Kind::NotHasse: os << "NotHasse(" << a << "," << b << ")"; break;
      case Kind::NoJoin: os << "NoJoin(" << a << "," << b << ")"; break;
    }
    return os.str();
  }
};

class InvalidSemilattice : public std::invalid_argument {
 public:
  explicit InvalidSemilattice(SemilatticeError e) : std::invalid_argument(e.message()), error_(e) {}
  const SemilatticeError& error() const { return error_; }

 private:
  SemilatticeError error_;
};

namespace detail {

/// Kahn order from the bottom: FIFO queue, newly freed elements pushed in
/// increasing original index. Returns the linear extension.
inline std::vector<Elem> kahn_order(std::size_t n, const std::vector<std::vector<Elem>>& upper, Elem bottom) {
  std::vector<std::size_t> indeg(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b : upper[a]) ++indeg[b];
  std::vector<Elem> order;
  std::deque<Elem> queue{bottom};
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    order.push_back(x);
    std::vector<Elem> freed;
    for (Elem y : upper[x])
      if (--indeg[y] == 0) freed.push_back(y);
    std::sort(freed.begin(), freed.end());
    queue.insert(queue.end(), freed.begin(), freed.end());
  }
  return order;
}

}  // namespace detail

/// Join table of the poset described by the cover graph, renumbered along a
/// deterministic linear extension so that the bottom is the identity 0.
inline MonoidPtr semilattice_from_covers(const CoverGraph& g, std::string name = {}) {
  using K = SemilatticeError::Kind;
  const std::size_t n = g.size;
  if (n == 0 || n > kMaxElements) throw InvalidSemilattice({K::OutOfRange, n, 0});
  std::vector<std::vector<Elem>> upper(n);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (auto [a, b] : g.covers) {
    if (a >= n || b >= n) throw InvalidSemilattice({K::OutOfRange, a, b});
    if (a == b) throw InvalidSemilattice({K::Cycle, a, b});
    if (std::find(upper[a].begin(), upper[a].end(), b) != upper[a].end()) throw InvalidSemilattice({K::NotHasse, a, b});
    upper[a].push_back(b);
  }
  for (Elem a = 0; a < n; ++a) le[a][a] = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b : upper[a]) le[a][b] = true;
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (le[i][k])
        for (Elem j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (le[a][b] && le[b][a]) throw InvalidSemilattice({K::Cycle, a, b});

  std::vector<Elem> minimal;
  for (Elem x = 0; x < n; ++x) {
    bool is_min = true;
    for (Elem y = 0; y < n && is_min; ++y)
      if (y != x && le[y][x]) is_min = false;
    if (is_min) minimal.push_back(x);
  }
  if (minimal.size() != 1) throw InvalidSemilattice({K::NoBottom, 0, 0});

  // A cover a < b is redundant when some c sits strictly between them.
  for (auto [a, b] : g.covers)
    for (Elem c = 0; c < n; ++c)
      if (c != a && c != b && le[a][c] && le[c][b]) throw InvalidSemilattice({K::NotHasse, a, b});

  const auto order = detail::kahn_order(n, upper, minimal.front());
  std::vector<Elem> pos(n);
  for (Elem i = 0; i < n; ++i) pos[order[i]] = i;

  FinMonoid::Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> lub;
      for (Elem c = 0; c < n; ++c) {
        if (!le[a][c] || !le[b][c]) continue;
        bool least = true;
        for (Elem d = 0; d < n && least; ++d)
          if (le[a][d] && le[b][d] && !le[c][d]) least = false;
        if (least) {
          lub = c;
          break;
        }
      }
      if (!lub) throw InvalidSemilattice({K::NoJoin, std::min(a, b), std::max(a, b)});
      t[pos[a]][pos[b]] = pos[*lub];
    }
  std::vector<std::string> labels(n);
  for (Elem i = 0; i < n; ++i)
    labels[pos[i]] = i < g.labels.size() && !g.labels[i].empty() ? g.labels[i] : std::to_string(i);
  return FinMonoid::make(t, std::move(labels), std::move(name));
}

/// True iff M is commutative and idempotent (a join-semilattice with bottom 0).
inline bool is_monoidal_semilattice(const FinMonoid& m) { return m.commutative() && m.idempotent(); }

inline void require_semilattice(const FinMonoid& m) {
  if (!is_monoidal_semilattice(m)) throw std::invalid_argument(m.display_name() + " is not a monoidal semilattice");
}

/// a ≤ b in the join order.
inline bool sl_leq(const FinMonoid& l, Elem a, Elem b) { return l.op(a, b) == b; }

/// ↓a = {x : x ∨ a = a}
inline Subset principal_downset(const FinMonoid& l, Elem a) {
  require_semilattice(l);
  Subset s;
  for (Elem x = 0; x < l.size(); ++x)
    if (sl_leq(l, x, a)) s.insert(x);
  return s;
}

/// ↑k = {x : x ∨ k = x}
inline Subset principal_upset(const FinMonoid& l, Elem k) {
  require_semilattice(l);
  Subset s;
  for (Elem x = 0; x < l.size(); ++x)
    if (sl_leq(l, k, x)) s.insert(x);
  return s;
}

/// Cover relation of the join order, as (lower, upper) pairs in index order.
inline std::vector<std::pair<Elem, Elem>> semilattice_covers(const FinMonoid& l) {
  require_semilattice(l);
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !sl_leq(l, a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c)
        if (c != a && c != b && sl_leq(l, a, c) && sl_leq(l, c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

/// Meet as the join of all common lower bounds.
inline Elem sl_meet(const FinMonoid& l, Elem a, Elem b) {
  Elem m = 0;
  for (Elem x = 0; x < l.size(); ++x)
    if (sl_leq(l, x, a) && sl_leq(l, x, b)) m = l.op(m, x);
  return m;
}

inline Elem sl_top(const FinMonoid& l) {
  Elem t = 0;
  for (Elem x = 0; x < l.size(); ++x) t = l.op(t, x);
  return t;
}

/// Cokernel of ↓k ↪ L computed as ↑k with projection l ↦ l ∨ k. The
/// quotient's identity is k; other elements follow in index order.
inline Quotient quotient_by_downset(const MonoidPtr& l, Elem k) {
  const Subset up = principal_upset(*l, k);
  std::vector<Elem> members{k};
  for (Elem x : up.members())
    if (x != k) members.push_back(x);
  std::vector<Elem> index(l->size(), 0);
  for (Elem i = 0; i < members.size(); ++i) index[members[i]] = i;
  FinMonoid::Table t(members.size(), std::vector<Elem>(members.size()));
  std::vector<std::string> labels;
  for (Elem i = 0; i < members.size(); ++i) {
    labels.push_back(l->label(members[i]));
    for (Elem j = 0; j < members.size(); ++j) t[i][j] = index[l->op(members[i], members[j])];
  }
  auto q = FinMonoid::make(t, std::move(labels), l->display_name() + "/" + l->format(principal_downset(*l, k)));
  std::vector<Elem> proj(l->size());
  for (Elem x = 0; x < l->size(); ++x) proj[x] = index[l->op(x, k)];
  return Quotient{unchecked_hom(l, q, std::move(proj))};
}

/// The normal submonoids of a finite monoidal semilattice: exactly ↓a for each a.
inline std::vector<Subset> all_normal_subobjects_semilattice(const FinMonoid& l) {
  require_semilattice(l);
  std::vector<Subset> out;
  for (Elem a = 0; a < l.size(); ++a) out.push_back(principal_downset(l, a));
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace homlat
