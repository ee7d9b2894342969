#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homlat/lattice.hpp"
#include "homlat/zexact/algorithms.hpp"
#include "homlat/zexact/context.hpp"

namespace homlat {

/// The lattice of normal subobjects of one object. Elements are canonical
/// monos into the object; order, meet and join come from factorization,
/// pullback and kernel-of-cokernel respectively.
template <ZContext Ctx>
struct NSubLattice {
  typename Ctx::Object object;
  std::vector<typename Ctx::Hom> elements;
  std::vector<std::string> codes;
  FiniteLattice lattice;

  std::size_t size() const { return elements.size(); }
  const typename Ctx::Hom& operator[](std::size_t i) const { return elements[i]; }
  Elem top() const { return lattice.top(); }
  Elem bottom() const { return lattice.bottom(); }
  Elem join(Elem a, Elem b) const { return lattice.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice.meet(a, b); }
  bool leq(Elem a, Elem b) const { return lattice.leq(a, b); }

  std::optional<Elem> find(const std::string& code) const {
    for (Elem i = 0; i < codes.size(); ++i)
      if (codes[i] == code) return i;
    return std::nullopt;
  }
  Elem index_of(const Ctx& ctx, const typename Ctx::Hom& m) const {
    auto i = find(ctx.encode(m));
    if (!i) throw ContextInvariantViolation("not a listed normal subobject: " + ctx.encode(m));
    return *i;
  }
};

template <ZContext Ctx>
NSubLattice<Ctx> enumerate_nsub(const Ctx& ctx, const typename Ctx::Object& x) {
  NSubLattice<Ctx> out;
  out.object = x;
  out.elements = ctx.normal_subobjects(x);
  const std::size_t n = out.elements.size();
  for (const auto& m : out.elements) out.codes.push_back(ctx.encode(m));
  {
    std::vector<std::string> sorted = out.codes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ContextInvariantViolation("duplicate normal subobject in enumeration of " + ctx.describe(x));
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) leq[a][b] = a == b || subobject_leq(ctx, out.elements[a], out.elements[b]);
  std::vector<std::vector<Elem>> join(n, std::vector<Elem>(n)), meet(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      join[a][b] = join[b][a] = out.index_of(ctx, join_via_uniinter(ctx, out.elements[a], out.elements[b]));
      meet[a][b] = meet[b][a] = out.index_of(ctx, subobject_meet(ctx, out.elements[a], out.elements[b]));
    }
  out.lattice = FiniteLattice::from_tables(std::move(leq), std::move(join), std::move(meet));
  if (!ctx.is_zero_object(ctx.dom(out.elements[out.lattice.bottom()])) ||
      !ctx.is_iso(out.elements[out.lattice.top()]))
    throw ContextInvariantViolation("nsub extremes are not 0 and the whole object");
  return out;
}

/// For X' ↪ X normal and Y, Z ∈ nsub(X') with normal composites into X, the
/// join inside X' and the join of the composites inside X coincide.
template <ZContext Ctx>
bool join_agreement_check(const Ctx& ctx, const typename Ctx::Hom& xprime, const typename Ctx::Hom& y,
                          const typename Ctx::Hom& z) {
  const auto inner = ctx.compose(xprime, join_via_uniinter(ctx, y, z));
  const auto outer = join_via_uniinter(ctx, ctx.compose(xprime, y), ctx.compose(xprime, z));
  return same_subobject(ctx, inner, outer);
}

struct CokerSquareResult {
  bool cokernel_is_join_quotient = false;  // Coker(Y/W → Z/X) = Z/(X∨Y)
  bool kernel_is_meet = false;             // Ker(Y/W → Z/X) = (X/W)∧(Y/W) in Z/W
  bool ok() const { return cokernel_is_join_quotient && kernel_is_meet; }
};

/// Square of normal subobjects W ≤ X, W ≤ Y of Z (all given as monos into Z).
template <ZContext Ctx>
CokerSquareResult cokersquare_check(const Ctx& ctx, const typename Ctx::Hom& w, const typename Ctx::Hom& x,
                                    const typename Ctx::Hom& y) {
  CokerSquareResult r;
  const auto qx = ctx.cokernel(x);
  const auto qw = ctx.cokernel(w);
  const auto wy = subobject_comparison(ctx, w, y);
  const auto wx = subobject_comparison(ctx, w, x);
  const auto py = ctx.cokernel(wy);  // Y → Y/W
  const auto px = ctx.cokernel(wx);  // X → X/W
  const auto g = ctx.factor_through_epi(ctx.compose(qx, y), py);
  if (!g) throw ContextInvariantViolation("cokersquare: Y → Z/X does not kill W");
  const auto c = ctx.cokernel(*g);
  r.cokernel_is_join_quotient = same_subobject(ctx, ctx.kernel(ctx.compose(c, qx)), join_via_uniinter(ctx, x, y));

  const auto jy = ctx.factor_through_epi(ctx.compose(qw, y), py);  // Y/W → Z/W
  const auto jx = ctx.factor_through_epi(ctx.compose(qw, x), px);  // X/W → Z/W
  if (!jy || !jx) throw ContextInvariantViolation("cokersquare: quotient inclusions do not exist");
  const auto k = ctx.compose(*jy, ctx.kernel(*g));
  r.kernel_is_meet = same_subobject(ctx, k, subobject_meet(ctx, *jx, *jy));
  return r;
}

/// Outcome of comparing nsub(Y/X) with the normal subobjects of Y above X.
struct PhiPsiReport {
  std::size_t quotient_size = 0;  // |nsub(Y/X)|
  std::size_t above_size = 0;     // |nsub(Y | X)|
  bool phi_psi_identity = true;   // Φ∘Ψ = id
  bool psi_phi_identity = true;   // Ψ∘Φ = id
  bool galois = true;             // Ψ(U) ≤ T ⟺ U ≤ Φ(T)
  bool phi_preserves_meets = true;
  bool psi_preserves_joins = true;
  bool meet_formula = true;  // (U∧V)/X = U/X ∧ V/X
  bool join_formula = true;  // (U∨V)/X = U/X ∨ V/X
  std::vector<Elem> phi;     // index in nsub(Y) for each T
  std::vector<Elem> psi;     // index in nsub(Y/X) for each U above X
  bool ok() const {
    return phi_psi_identity && psi_phi_identity && galois && phi_preserves_meets && psi_preserves_joins &&
           meet_formula && join_formula && quotient_size == above_size;
  }
};

/// Φ(T) = pullback of T along Y ↠ Y/X; Ψ(U) = Ker(Y/X → Y/U).
template <ZContext Ctx>
PhiPsiReport phi_psi(const Ctx& ctx, const typename Ctx::Hom& x) {
  PhiPsiReport r;
  const auto y_lat = enumerate_nsub(ctx, ctx.cod(x));
  const auto q = ctx.cokernel(x);
  const auto t_lat = enumerate_nsub(ctx, ctx.cod(q));
  const Elem xi = y_lat.index_of(ctx, x);

  std::vector<Elem> above;
  for (Elem u = 0; u < y_lat.size(); ++u)
    if (y_lat.leq(xi, u)) above.push_back(u);
  r.quotient_size = t_lat.size();
  r.above_size = above.size();

  r.phi.resize(t_lat.size());
  for (Elem t = 0; t < t_lat.size(); ++t)
    r.phi[t] = y_lat.index_of(ctx, pullback_epi_along_mono(ctx, q, t_lat[t]).inclusion);
  std::map<Elem, Elem> psi;  // U index in y_lat → T index
  for (Elem u : above) psi[u] = t_lat.index_of(ctx, ctx.kernel(quotient_comparison(ctx, x, y_lat[u])));
  for (Elem u : above) r.psi.push_back(psi[u]);

  for (Elem u : above) r.phi_psi_identity &= r.phi[psi[u]] == u;
  for (Elem t = 0; t < t_lat.size(); ++t) {
    const auto it = psi.find(r.phi[t]);
    r.psi_phi_identity &= it != psi.end() && it->second == t;
  }
  for (Elem u : above)
    for (Elem t = 0; t < t_lat.size(); ++t) r.galois &= t_lat.leq(psi[u], t) == y_lat.leq(u, r.phi[t]);
  for (Elem s = 0; s < t_lat.size(); ++s)
    for (Elem t = 0; t < t_lat.size(); ++t)
      r.phi_preserves_meets &= r.phi[t_lat.meet(s, t)] == y_lat.meet(r.phi[s], r.phi[t]);
  for (Elem u : above)
    for (Elem v : above) {
      const Elem j = y_lat.join(u, v);
      const Elem m = y_lat.meet(u, v);
      r.psi_preserves_joins &= psi.count(j) && psi[j] == t_lat.join(psi[u], psi[v]);
      r.join_formula &= psi.count(j) && psi[j] == t_lat.join(psi[u], psi[v]);
      r.meet_formula &= psi.count(m) && psi[m] == t_lat.meet(psi[u], psi[v]);
    }
  return r;
}

/// Checks that X ↦ (V∧X, X) is a lattice isomorphism nsub(W) → nsub(V ↪ W)
/// for a ses object, given both lattices; returns false on any mismatch.
template <class SesCtx>
bool ses_nsub_matches_base(const SesCtx& sctx, const typename SesCtx::Object& s,
                           const NSubLattice<typename SesCtx::InnerContext>& base_lat, const NSubLattice<SesCtx>& ses_lat) {
  if (base_lat.size() != ses_lat.size()) return false;
  std::vector<Elem> map(base_lat.size());
  for (Elem i = 0; i < base_lat.size(); ++i) {
    const auto j = ses_lat.find(sctx.encode(sctx.subobject_over(s, base_lat[i])));
    if (!j) return false;
    map[i] = *j;
  }
  return base_lat.lattice.is_isomorphism(ses_lat.lattice, map);
}

template <class SesCtx>
bool ses_nsub_matches_base(const SesCtx& sctx, const typename SesCtx::Object& s) {
  return ses_nsub_matches_base(sctx, s, enumerate_nsub(sctx.inner(), sctx.base(s)), enumerate_nsub(sctx, s));
}

}  // namespace homlat
