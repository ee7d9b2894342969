#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homlat/subset.hpp"

namespace homlat {

/// One violated monoid axiom, with the indices that witness it.
struct MonoidError {
  enum class Kind { NotSquare, OutOfRange, IdentityViolation, NonAssociative, TooLarge };
  Kind kind;
  Elem i = 0;
  Elem j = 0;
  Elem k = 0;

  std::string message() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::NotSquare: os << "NotSquare(row " << i << ")"; break;
      case Kind::OutOfRange: os << "OutOfRange(" << i << "," << j << ")"; break;
      case Kind::IdentityViolation: os << "IdentityViolation(" << i << ")"; break;
      case Kind::NonAssociative: os << "NonAssociative(" << i << "," << j << "," << k << ")"; break;
      case Kind::TooLarge: os << "TooLarge(" << i << ")"; break;
    }
    return os.str();
  }
  friend bool operator==(const MonoidError&, const MonoidError&) = default;
};

class FinMonoid;
using MonoidPtr = std::shared_ptr<const FinMonoid>;

struct ValidationResult {
  MonoidPtr monoid;  // null iff errors is nonempty
  std::vector<MonoidError> errors;
  explicit operator bool() const { return monoid != nullptr; }
};

class InvalidMonoid : public std::invalid_argument {
 public:
  explicit InvalidMonoid(std::vector<MonoidError> errors)
      : std::invalid_argument(summarize(errors)), errors_(std::move(errors)) {}
  const std::vector<MonoidError>& errors() const { return errors_; }

 private:
  static std::string summarize(const std::vector<MonoidError>& errors) {
    std::string s = "invalid monoid:";
    for (std::size_t idx = 0; idx < errors.size() && idx < 8; ++idx) s += " " + errors[idx].message();
    if (errors.size() > 8) s += " ...";
    return s;
  }
  std::vector<MonoidError> errors_;
};

/// A finite monoid given by its operation table. Element 0 is the identity.
/// Instances are immutable and shared through MonoidPtr.
class FinMonoid {
 public:
  using Table = std::vector<std::vector<Elem>>;

  /// Checks every axiom and reports all violations (not just the first).
  static ValidationResult validate(const Table& table, std::vector<std::string> labels = {}, std::string name = {}) {
    ValidationResult result;
    const std::size_t n = table.size();
    if (n == 0) {
      result.errors.push_back({MonoidError::Kind::NotSquare, 0});
      return result;
    }
    if (n > kMaxElements) {
      result.errors.push_back({MonoidError::Kind::TooLarge, n});
      return result;
    }
    for (Elem i = 0; i < n; ++i)
      if (table[i].size() != n) result.errors.push_back({MonoidError::Kind::NotSquare, i});
    if (!result.errors.empty()) return result;
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j)
        if (table[i][j] >= n) result.errors.push_back({MonoidError::Kind::OutOfRange, i, j});
    if (!result.errors.empty()) return result;
    for (Elem i = 0; i < n; ++i)
      if (table[0][i] != i || table[i][0] != i) result.errors.push_back({MonoidError::Kind::IdentityViolation, i});
    for (Elem i = 0; i < n; ++i)
      for (Elem j = 0; j < n; ++j)
        for (Elem k = 0; k < n; ++k)
          if (table[table[i][j]][k] != table[i][table[j][k]])
            result.errors.push_back({MonoidError::Kind::NonAssociative, i, j, k});
    if (!result.errors.empty()) return result;
    result.monoid = std::make_shared<const FinMonoid>(Private{}, table, std::move(labels), std::move(name));
    return result;
  }

  /// Throwing variant of validate().
  static MonoidPtr make(const Table& table, std::vector<std::string> labels = {}, std::string name = {}) {
    auto r = validate(table, std::move(labels), std::move(name));
    if (!r) throw InvalidMonoid(std::move(r.errors));
    return r.monoid;
  }

  static MonoidPtr trivial() { return make({{0}}, {"0"}, "0"); }

  std::size_t size() const { return n_; }
  Elem op(Elem a, Elem b) const { return table_[a * n_ + b]; }
  bool commutative() const { return commutative_; }
  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  Table table() const {
    Table t(n_, std::vector<Elem>(n_));
    for (Elem i = 0; i < n_; ++i)
      for (Elem j = 0; j < n_; ++j) t[i][j] = op(i, j);
    return t;
  }

  /// Index of the element carrying the given label, if any.
  std::optional<Elem> find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Elem>(it - labels_.begin());
  }
  Elem at(const std::string& label) const {
    auto e = find(label);
    if (!e) throw std::out_of_range("no element labelled '" + label + "'");
    return *e;
  }

  bool idempotent() const {
    for (Elem i = 0; i < n_; ++i)
      if (op(i, i) != i) return false;
    return true;
  }

  Subset all() const { return Subset::full(n_); }

  bool is_submonoid(Subset s) const {
    if (!s.contains(0) || !s.is_subset_of(all())) return false;
    for (Elem a : s.members())
      for (Elem b : s.members())
        if (!s.contains(op(a, b))) return false;
    return true;
  }

  /// "{a,b,c}" using element labels, in index order.
  std::string format(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (Elem e : s.members()) {
      if (!first) out += ",";
      out += labels_[e];
      first = false;
    }
    return out + "}";
  }

  /// Name for reports; falls back to a size tag for anonymous monoids.
  std::string display_name() const { return name_.empty() ? "M" + std::to_string(n_) : name_; }

  /// Structural equality: same table and labels. The name is not compared.
  friend bool operator==(const FinMonoid& a, const FinMonoid& b) {
    return a.n_ == b.n_ && a.table_ == b.table_ && a.labels_ == b.labels_;
  }

  struct Private {};
  FinMonoid(Private, const Table& table, std::vector<std::string> labels, std::string name)
      : n_(table.size()), name_(std::move(name)) {
    table_.reserve(n_ * n_);
    for (const auto& row : table) table_.insert(table_.end(), row.begin(), row.end());
    labels.resize(n_);
    for (Elem i = 0; i < n_; ++i)
      if (labels[i].empty()) labels[i] = std::to_string(i);
    labels_ = std::move(labels);
    commutative_ = true;
    for (Elem i = 0; i < n_ && commutative_; ++i)
      for (Elem j = i + 1; j < n_; ++j)
        if (op(i, j) != op(j, i)) {
          commutative_ = false;
          break;
        }
  }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<std::string> labels_;
  std::string name_;
  bool commutative_ = true;
};

inline bool same_monoid(const MonoidPtr& a, const MonoidPtr& b) { return a == b || *a == *b; }

/// A total map between finite monoids preserving the operation and the identity.
class MonoidHom {
 public:
  MonoidHom() = default;

  /// Validating constructor.
  static std::optional<MonoidHom> make(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map) {
    if (map.size() != dom->size() || map[0] != 0) return std::nullopt;
    for (Elem x : map)
      if (x >= cod->size()) return std::nullopt;
    for (Elem i = 0; i < dom->size(); ++i)
      for (Elem j = 0; j < dom->size(); ++j)
        if (map[dom->op(i, j)] != cod->op(map[i], map[j])) return std::nullopt;
    return MonoidHom(std::move(dom), std::move(cod), std::move(map));
  }
  static MonoidHom checked(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map) {
    auto f = make(std::move(dom), std::move(cod), std::move(map));
    if (!f) throw std::invalid_argument("map is not a monoid homomorphism");
    return *f;
  }
  static MonoidHom identity(const MonoidPtr& m) {
    std::vector<Elem> map(m->size());
    for (Elem i = 0; i < map.size(); ++i) map[i] = i;
    return MonoidHom(m, m, std::move(map));
  }
  static MonoidHom zero(const MonoidPtr& dom, const MonoidPtr& cod) {
    return MonoidHom(dom, cod, std::vector<Elem>(dom->size(), 0));
  }

  const MonoidPtr& dom() const { return dom_; }
  const MonoidPtr& cod() const { return cod_; }
  const std::vector<Elem>& map() const { return *map_; }
  Elem operator()(Elem x) const { return (*map_)[x]; }

  Subset image() const {
    Subset s;
    for (Elem y : *map_) s.insert(y);
    return s;
  }
  Subset preimage(Subset target) const {
    Subset s;
    for (Elem x = 0; x < map_->size(); ++x)
      if (target.contains((*map_)[x])) s.insert(x);
    return s;
  }
  bool injective() const { return image().size() == map_->size(); }
  bool surjective() const { return image().size() == cod_->size(); }
  bool is_zero() const {
    return std::all_of(map_->begin(), map_->end(), [](Elem e) { return e == 0; });
  }

  friend bool operator==(const MonoidHom& a, const MonoidHom& b) {
    return (a.map_ == b.map_ || *a.map_ == *b.map_) && same_monoid(a.dom_, b.dom_) && same_monoid(a.cod_, b.cod_);
  }

 private:
  MonoidHom(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map)
      : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::make_shared<const std::vector<Elem>>(std::move(map))) {}
  friend MonoidHom compose(const MonoidHom& g, const MonoidHom& f);
  friend MonoidHom unchecked_hom(MonoidPtr, MonoidPtr, std::vector<Elem>);

  MonoidPtr dom_;
  MonoidPtr cod_;
  std::shared_ptr<const std::vector<Elem>> map_ = std::make_shared<const std::vector<Elem>>();
};

/// For maps already known to be homomorphisms by construction.
inline MonoidHom unchecked_hom(MonoidPtr dom, MonoidPtr cod, std::vector<Elem> map) {
  return MonoidHom(std::move(dom), std::move(cod), std::move(map));
}

/// g ∘ f
inline MonoidHom compose(const MonoidHom& g, const MonoidHom& f) {
  if (!same_monoid(f.cod(), g.dom())) throw std::invalid_argument("compose: codomain/domain mismatch");
  std::vector<Elem> map(f.map().size());
  for (Elem x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return MonoidHom(f.dom(), g.cod(), std::move(map));
}

/// Submonoid induced on a subset (must contain 0 and be closed); elements keep
/// their labels and are renumbered in increasing index order.
inline MonoidHom inclusion(const MonoidPtr& m, Subset s, std::string name = {}) {
  if (!m->is_submonoid(s)) throw std::invalid_argument("inclusion: subset " + m->format(s) + " is not a submonoid");
  const auto members = s.members();
  std::vector<Elem> index(m->size(), 0);
  for (Elem i = 0; i < members.size(); ++i) index[members[i]] = i;
  FinMonoid::Table t(members.size(), std::vector<Elem>(members.size()));
  std::vector<std::string> labels;
  for (Elem i = 0; i < members.size(); ++i) {
    labels.push_back(m->label(members[i]));
    for (Elem j = 0; j < members.size(); ++j) t[i][j] = index[m->op(members[i], members[j])];
  }
  if (name.empty()) name = m->display_name() + "|" + m->format(s);
  auto sub = FinMonoid::make(t, std::move(labels), std::move(name));
  return unchecked_hom(sub, m, members);
}

/// Every homomorphism dom → cod, by backtracking over generator images with
/// consistency pruning. Intended for desk-scale monoids.
inline std::vector<MonoidHom> all_homs(const MonoidPtr& dom, const MonoidPtr& cod) {
  const std::size_t n = dom->size();
  const std::size_t m = cod->size();
  std::vector<MonoidHom> out;
  std::vector<Elem> map(n, 0);
  std::vector<bool> assigned(n, false);
  assigned[0] = true;

  // Propagates all products of assigned elements; false on conflict.
  auto close = [&](std::vector<Elem>& mp, std::vector<bool>& as) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem i = 0; i < n; ++i) {
        if (!as[i]) continue;
        for (Elem j = 0; j < n; ++j) {
          if (!as[j]) continue;
          const Elem p = dom->op(i, j);
          const Elem v = cod->op(mp[i], mp[j]);
          if (as[p]) {
            if (mp[p] != v) return false;
          } else {
            as[p] = true;
            mp[p] = v;
            changed = true;
          }
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::vector<Elem> mp, std::vector<bool> as) -> void {
    if (!close(mp, as)) return;
    auto next = std::find(as.begin(), as.end(), false);
    if (next == as.end()) {
      out.push_back(unchecked_hom(dom, cod, mp));
      return;
    }
    const Elem x = static_cast<Elem>(next - as.begin());
    for (Elem y = 0; y < m; ++y) {
      auto mp2 = mp;
      auto as2 = as;
      mp2[x] = y;
      as2[x] = true;
      self(self, std::move(mp2), std::move(as2));
    }
  };
  rec(rec, map, assigned);
  return out;
}

/// Every isomorphism a → b (identity-preserving bijections respecting the
/// tables), found by backtracking with table-consistency pruning.
inline std::vector<MonoidHom> all_isomorphisms(const MonoidPtr& a, const MonoidPtr& b, bool first_only = false) {
  std::vector<MonoidHom> out;
  const std::size_t n = a->size();
  if (n != b->size() || a->commutative() != b->commutative() || a->idempotent() != b->idempotent()) return out;
  std::vector<Elem> map(n, 0);
  std::vector<bool> used(n, false);
  std::vector<bool> set(n, false);
  set[0] = true;
  used[0] = true;

  // Checks every product of assigned elements whose result is also assigned.
  auto consistent = [&]() {
    for (Elem p = 0; p < n; ++p) {
      if (!set[p]) continue;
      for (Elem q = 0; q < n; ++q) {
        if (!set[q]) continue;
        const Elem r = a->op(p, q);
        if (set[r] && map[r] != b->op(map[p], map[q])) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, Elem x) -> bool {
    if (x == n) {
      out.push_back(unchecked_hom(a, b, map));
      return first_only;
    }
    for (Elem y = 1; y < n; ++y) {
      if (used[y]) continue;
      map[x] = y;
      set[x] = true;
      used[y] = true;
      if (consistent() && self(self, x + 1)) return true;
      set[x] = false;
      used[y] = false;
    }
    return false;
  };
  if (n == 1) {
    out.push_back(unchecked_hom(a, b, {0}));
    return out;
  }
  rec(rec, 1);
  return out;
}

inline std::optional<MonoidHom> find_isomorphism(const MonoidPtr& a, const MonoidPtr& b) {
  auto isos = all_isomorphisms(a, b, true);
  if (isos.empty()) return std::nullopt;
  return isos.front();
}

inline bool isomorphic(const MonoidPtr& a, const MonoidPtr& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace homlat
