#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "homlat/monoid.hpp"

namespace homlat {

class NotASubmonoid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotCommutative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotNormalSubmonoid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violation of the normality condition: x·k·y and x·y disagree on membership
/// in K. In the commutative reading y is the identity and x+k ∈ K but x ∉ K.
struct NormalityWitness {
  Elem x;
  Elem k;
  Elem y;
  friend bool operator==(const NormalityWitness&, const NormalityWitness&) = default;
};

struct NormalityResult {
  bool normal = true;
  std::optional<NormalityWitness> witness;
  explicit operator bool() const { return normal; }
};

/// Normality of a submonoid K of M. For commutative M the test is
/// x+k ∈ K ⟹ x ∈ K; otherwise the two-sided condition xky ∈ K ⟺ xy ∈ K.
inline NormalityResult is_normal_submonoid(const FinMonoid& m, Subset k) {
  if (!m.is_submonoid(k)) throw NotASubmonoid(m.format(k) + " is not a submonoid of " + m.display_name());
  const auto ks = k.members();
  if (m.commutative()) {
    for (Elem kk : ks)
      for (Elem x = 0; x < m.size(); ++x)
        if (k.contains(m.op(x, kk)) && !k.contains(x)) return {false, NormalityWitness{x, kk, 0}};
    return {};
  }
  for (Elem kk : ks)
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem y = 0; y < m.size(); ++y)
        if (k.contains(m.op(m.op(x, kk), y)) != k.contains(m.op(x, y))) return {false, NormalityWitness{x, kk, y}};
  return {};
}

/// {x : f(x) = 0}
inline Subset kernel_of_hom(const MonoidHom& f) {
  Subset s;
  for (Elem x = 0; x < f.dom()->size(); ++x)
    if (f(x) == 0) s.insert(x);
  return s;
}

/// A quotient monoid together with its projection. Classes are numbered by
/// their minimal member, so the class of the identity is 0.
struct Quotient {
  MonoidHom projection;
  const MonoidPtr& monoid() const { return projection.cod(); }
  /// Members of the class with the given quotient index.
  Subset class_of(Elem q) const {
    Subset s;
    for (Elem x = 0; x < projection.map().size(); ++x)
      if (projection(x) == q) s.insert(x);
    return s;
  }
  std::vector<Subset> classes() const {
    std::vector<Subset> out;
    for (Elem q = 0; q < monoid()->size(); ++q) out.push_back(class_of(q));
    return out;
  }
};

namespace detail {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Elem{0}); }
  Elem find(Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

/// Builds M/~ from a class representative map that is already a congruence.
inline Quotient quotient_by_partition(const MonoidPtr& m, const std::vector<Elem>& rep, std::string name) {
  const std::size_t n = m->size();
  std::vector<Elem> index(n, n);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x)
    if (index[rep[x]] == n) {
      index[rep[x]] = reps.size();
      reps.push_back(rep[x]);
    }
  std::vector<Elem> proj(n);
  for (Elem x = 0; x < n; ++x) proj[x] = index[rep[x]];
  const std::size_t q = reps.size();
  FinMonoid::Table t(q, std::vector<Elem>(q));
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b) t[a][b] = proj[m->op(reps[a], reps[b])];
  std::vector<std::string> labels(q);
  for (Elem c = 0; c < q; ++c) {
    Subset members;
    for (Elem x = 0; x < n; ++x)
      if (proj[x] == c) members.insert(x);
    labels[c] = m->format(members);
  }
  auto qm = FinMonoid::make(t, std::move(labels), std::move(name));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (proj[m->op(a, b)] != qm->op(proj[a], proj[b]))
        throw std::logic_error("quotient_by_partition: relation is not a congruence");
  return Quotient{unchecked_hom(m, qm, std::move(proj))};
}

}  // namespace detail

/// Smallest congruence containing the given pairs, as a quotient.
inline Quotient quotient_by_generated_congruence(const MonoidPtr& m, const std::vector<std::pair<Elem, Elem>>& pairs,
                                                 std::string name) {
  const std::size_t n = m->size();
  detail::UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b) {
        if (uf.find(a) != uf.find(b)) continue;
        for (Elem c = 0; c < n; ++c) {
          changed |= uf.unite(m->op(a, c), m->op(b, c));
          changed |= uf.unite(m->op(c, a), m->op(c, b));
        }
      }
  }
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) rep[x] = uf.find(x);
  return detail::quotient_by_partition(m, rep, std::move(name));
}

/// Cokernel of the inclusion of a submonoid K of a commutative monoid:
/// m ~ n iff m+k = n+l for some k, l in K.
inline Quotient cokernel_by_submonoid(const MonoidPtr& m, Subset k) {
  if (!m->commutative()) throw NotCommutative(m->display_name() + " is not commutative");
  if (!m->is_submonoid(k)) throw NotASubmonoid(m->format(k) + " is not a submonoid of " + m->display_name());
  const std::size_t n = m->size();
  std::vector<Subset> shifted(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem kk : k.members()) shifted[x].insert(m->op(x, kk));
  detail::UnionFind uf(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (!(shifted[a] & shifted[b]).empty()) uf.unite(a, b);
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) rep[x] = uf.find(x);
  return detail::quotient_by_partition(m, rep, m->display_name() + "/" + m->format(k));
}

/// Quotient by the syntactic congruence of a normal submonoid K:
/// m ~ n iff for all x, y: xmy ∈ K ⟺ xny ∈ K. Works for any monoid.
inline Quotient syntactic_quotient(const MonoidPtr& m, Subset k) {
  if (!is_normal_submonoid(*m, k))
    throw NotNormalSubmonoid(m->format(k) + " is not a normal submonoid of " + m->display_name());
  const std::size_t n = m->size();
  // Context signature of each element: bit (x*n+y) set iff x·e·y ∈ K.
  std::vector<std::vector<bool>> sig(n, std::vector<bool>(n * n));
  for (Elem e = 0; e < n; ++e)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) sig[e][x * n + y] = k.contains(m->op(m->op(x, e), y));
  std::vector<Elem> rep(n);
  for (Elem e = 0; e < n; ++e) {
    rep[e] = e;
    for (Elem f = 0; f < e; ++f)
      if (sig[f] == sig[e]) {
        rep[e] = f;
        break;
      }
  }
  return detail::quotient_by_partition(m, rep, m->display_name() + "/" + m->format(k));
}

/// Smallest normal submonoid containing S, for commutative M. Alternates
/// closure under the operation with the rule (x+k ∈ N, k ∈ N) ⟹ x ∈ N.
inline Subset normal_closure(const FinMonoid& m, Subset s) {
  if (!m.commutative()) throw NotCommutative(m.display_name() + " is not commutative");
  Subset cur = s;
  cur.insert(0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (bool grew = true; grew;) {
      grew = false;
      for (Elem a : cur.members())
        for (Elem b : cur.members())
          if (!cur.contains(m.op(a, b))) {
            cur.insert(m.op(a, b));
            grew = changed = true;
          }
    }
    for (Elem kk : cur.members())
      for (Elem x = 0; x < m.size(); ++x)
        if (!cur.contains(x) && cur.contains(m.op(x, kk))) {
          cur.insert(x);
          changed = true;
        }
  }
  return cur;
}

/// Cokernel of an arbitrary hom in mon/cmon: the quotient of the codomain by
/// the congruence generated by image ~ 0.
inline Quotient cokernel_of_hom(const MonoidHom& f) {
  const auto& cod = f.cod();
  if (cod->commutative()) return cokernel_by_submonoid(cod, f.image());
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem y : f.image().members()) pairs.emplace_back(y, 0);
  return quotient_by_generated_congruence(cod, pairs, cod->display_name() + "/" + cod->format(f.image()));
}

/// Kernel of f as an inclusion hom.
inline MonoidHom kernel_inclusion(const MonoidHom& f) { return inclusion(f.dom(), kernel_of_hom(f)); }

inline bool is_normal_mono(const MonoidHom& f) {
  if (!f.injective()) return false;
  const Subset img = f.image();
  if (!is_normal_submonoid(*f.cod(), img)) return false;
  return kernel_of_hom(cokernel_of_hom(f).projection) == img;
}

inline bool is_normal_epi(const MonoidHom& f) {
  if (!f.surjective()) return false;
  const auto k = kernel_inclusion(f);
  const auto q = cokernel_of_hom(k).projection;
  // f and its cokernel-of-kernel must induce the same partition of the domain.
  for (Elem a = 0; a < f.dom()->size(); ++a)
    for (Elem b = a + 1; b < f.dom()->size(); ++b)
      if ((f(a) == f(b)) != (q(a) == q(b))) return false;
  return true;
}

/// Normal (epi, mono) factorization: f = mono ∘ epi with epi the cokernel of
/// the kernel of f.
struct NormalDecomposition {
  MonoidHom epi;
  MonoidHom mono;
};

/// Why the induced comparison map dom/Ker(f) → Ker(Coker(f)) fails to be an iso.
struct NotNormal {
  bool induced_injective = false;
  bool induced_surjective = false;
  std::string reason() const {
    if (!induced_injective && !induced_surjective) return "induced map neither injective nor surjective";
    if (!induced_injective) return "induced map not injective";
    return "induced map not surjective";
  }
};

using NormalMapResult = std::variant<NormalDecomposition, NotNormal>;

inline NormalMapResult is_normal_map(const MonoidHom& f) {
  const auto e = cokernel_of_hom(kernel_inclusion(f)).projection;
  const auto m = kernel_inclusion(cokernel_of_hom(f).projection);
  const auto& quot = e.cod();
  const auto& sub = m.dom();
  // Index of each codomain element inside Ker(Coker f).
  std::vector<Elem> pos(f.cod()->size(), f.cod()->size());
  for (Elem i = 0; i < sub->size(); ++i) pos[m(i)] = i;
  std::vector<Elem> u(quot->size(), sub->size());
  for (Elem x = 0; x < f.dom()->size(); ++x) u[e(x)] = pos[f(x)];
  const auto induced = unchecked_hom(quot, sub, u);
  const bool inj = induced.injective();
  const bool sur = induced.surjective();
  if (inj && sur) return NormalDecomposition{e, compose(m, induced)};
  return NotNormal{inj, sur};
}

}  // namespace homlat
