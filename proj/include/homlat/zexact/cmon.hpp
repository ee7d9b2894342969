#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlat/monoid.hpp"
#include "homlat/monoid_ops.hpp"
#include "homlat/zexact/context.hpp"

namespace homlat {

/// Exhaustive filter: every submonoid passing the normality test.
inline std::vector<Subset> normal_submonoids_exhaustive(const FinMonoid& m) {
  if (m.size() > 20) throw std::invalid_argument("exhaustive subset filter limited to 20 elements");
  std::vector<Subset> out;
  const std::uint64_t limit = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 1; bits < limit; bits += 2) {  // bit 0 (identity) always set
    const Subset s(bits);
    if (m.is_submonoid(s) && is_normal_submonoid(m, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Normal submonoids of a commutative monoid as joins of normal closures of
/// singletons. Below 13 elements the result is certified against the
/// exhaustive filter.
inline std::vector<Subset> normal_submonoids(const FinMonoid& m) {
  std::vector<Subset> found{normal_closure(m, Subset::of({0}))};
  for (Elem x = 1; x < m.size(); ++x) {
    const Subset c = normal_closure(m, Subset::of({x}));
    if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Subset c = normal_closure(m, found[i] | found[j]);
      if (std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
    }
  std::sort(found.begin(), found.end(), canonical_less);
  if (m.size() < 13 && found != normal_submonoids_exhaustive(m))
    throw ContextInvariantViolation("normal submonoid enumeration incomplete for " + m.display_name());
  return found;
}

/// The category of finite commutative monoids.
class CmonContext {
 public:
  using Object = MonoidPtr;
  using Hom = MonoidHom;
  static constexpr int depth = 0;

  Object dom(const Hom& f) const { return f.dom(); }
  Object cod(const Hom& f) const { return f.cod(); }
  Hom compose(const Hom& g, const Hom& f) const { return homlat::compose(g, f); }
  Hom identity(const Object& x) const { return MonoidHom::identity(x); }
  Object zero_object() const { return FinMonoid::trivial(); }
  Hom zero_hom(const Object& x, const Object& y) const { return MonoidHom::zero(x, y); }
  bool is_zero_object(const Object& x) const { return x->size() == 1; }

  // Memoized per thread on (monoid, subset); repeated calls return the same
  // object, so later identity checks are pointer compares.
  Hom kernel(const Hom& f) const {
    return memo(kernel_cache(), f.dom(), f.preimage(Subset::of({0})), [&] { return kernel_inclusion(f); });
  }
  Hom cokernel(const Hom& f) const {
    return memo(cokernel_cache(), f.cod(), f.image(), [&] { return cokernel_of_hom(f).projection; });
  }

  bool equal(const Hom& f, const Hom& g) const { return f == g; }
  bool same_object(const Object& x, const Object& y) const { return same_monoid(x, y); }

  std::optional<Hom> factor_through_mono(const Hom& f, const Hom& m) const {
    if (!same_monoid(f.cod(), m.cod()) || !m.injective()) return std::nullopt;
    std::vector<Elem> pos(m.cod()->size(), m.dom()->size());
    for (Elem i = 0; i < m.dom()->size(); ++i) pos[m(i)] = i;
    std::vector<Elem> u(f.dom()->size());
    for (Elem x = 0; x < u.size(); ++x) {
      if (pos[f(x)] == m.dom()->size()) return std::nullopt;
      u[x] = pos[f(x)];
    }
    return MonoidHom::make(f.dom(), m.dom(), std::move(u));
  }

  std::optional<Hom> factor_through_epi(const Hom& f, const Hom& e) const {
    if (!same_monoid(f.dom(), e.dom()) || !e.surjective()) return std::nullopt;
    const std::size_t q = e.cod()->size();
    std::vector<Elem> g(q, f.cod()->size());
    for (Elem x = 0; x < f.dom()->size(); ++x) {
      if (g[e(x)] == f.cod()->size())
        g[e(x)] = f(x);
      else if (g[e(x)] != f(x))
        return std::nullopt;
    }
    return MonoidHom::make(e.cod(), f.cod(), std::move(g));
  }

  bool is_iso(const Hom& f) const { return f.injective() && f.surjective(); }
  bool is_mono(const Hom& f) const { return f.injective(); }
  bool is_epi(const Hom& f) const { return f.surjective(); }

  std::vector<Hom> normal_subobjects(const Object& x) const {
    std::vector<Hom> out;
    for (Subset s : normal_submonoids(*x)) out.push_back(inclusion(x, s));
    return out;
  }

  std::string describe(const Object& x) const { return x->display_name(); }
  std::string encode(const Hom& m) const { return m.cod()->format(m.image()); }

 private:
  using Cache = std::map<std::pair<const FinMonoid*, std::uint64_t>, std::pair<MonoidPtr, Hom>>;
  static Cache& kernel_cache() {
    thread_local Cache c;
    return c;
  }
  static Cache& cokernel_cache() {
    thread_local Cache c;
    return c;
  }
  template <class F>
  static Hom memo(Cache& c, const MonoidPtr& m, Subset s, F compute) {
    const auto key = std::make_pair(m.get(), s.bits());
    if (auto it = c.find(key); it != c.end()) return it->second.second;
    if (c.size() > (1u << 16)) c.clear();
    Hom h = compute();
    c.emplace(key, std::make_pair(m, h));  // holding m pins the address
    return h;
  }
};

static_assert(ZContext<CmonContext>);

}  // namespace homlat
