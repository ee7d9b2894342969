#pragma once

#include <optional>
#include <string>

#include "homlat/zexact/context.hpp"

namespace homlat {

// Constructions that only use the ZContext interface, so they run unchanged
// in cmon and in every ses^n level.

/// f is a normal mono iff it factors through Ker(Coker f) by an isomorphism.
template <ZContext Ctx>
bool is_normal_mono(const Ctx& ctx, const typename Ctx::Hom& f) {
  const auto k = ctx.kernel(ctx.cokernel(f));
  const auto u = ctx.factor_through_mono(f, k);
  return u && ctx.is_iso(*u);
}

/// f is a normal epi iff it factors through Coker(Ker f) by an isomorphism.
template <ZContext Ctx>
bool is_normal_epi(const Ctx& ctx, const typename Ctx::Hom& f) {
  const auto q = ctx.cokernel(ctx.kernel(f));
  const auto u = ctx.factor_through_epi(f, q);
  return u && ctx.is_iso(*u);
}

/// Result of testing a map for a normal (epi, mono) factorization through the
/// canonical comparison Coker(Ker f) → Ker(Coker f).
template <ZContext Ctx>
struct NormalMapCheck {
  bool normal = false;
  bool comparison_mono = false;
  bool comparison_epi = false;
  std::optional<typename Ctx::Hom> epi;   // Coker(Ker f)
  std::optional<typename Ctx::Hom> mono;  // Ker(Coker f) ∘ comparison
  explicit operator bool() const { return normal; }
  std::string reason() const {
    if (normal) return "normal";
    if (!comparison_mono && !comparison_epi) return "comparison map neither mono nor epi";
    if (!comparison_mono) return "comparison map not mono";
    if (!comparison_epi) return "comparison map not epi";
    return "comparison map not an isomorphism";
  }
};

template <ZContext Ctx>
NormalMapCheck<Ctx> normal_map_check(const Ctx& ctx, const typename Ctx::Hom& f) {
  NormalMapCheck<Ctx> out;
  const auto e = ctx.cokernel(ctx.kernel(f));
  const auto m = ctx.kernel(ctx.cokernel(f));
  const auto through_e = ctx.factor_through_epi(f, e);
  if (!through_e) throw ContextInvariantViolation("map does not factor through the cokernel of its kernel");
  const auto u = ctx.factor_through_mono(*through_e, m);
  if (!u) throw ContextInvariantViolation("map does not factor through the kernel of its cokernel");
  out.comparison_mono = ctx.is_mono(*u);
  out.comparison_epi = ctx.is_epi(*u);
  out.normal = ctx.is_iso(*u);
  if (out.normal) {
    out.epi = e;
    out.mono = ctx.compose(m, *u);
  }
  return out;
}

template <ZContext Ctx>
bool is_normal_map(const Ctx& ctx, const typename Ctx::Hom& f) {
  return normal_map_check(ctx, f).normal;
}

/// k then q is short exact: k ≅ Ker q and q ≅ Coker k.
template <ZContext Ctx>
bool is_short_exact(const Ctx& ctx, const typename Ctx::Hom& k, const typename Ctx::Hom& q) {
  if (!ctx.same_object(ctx.cod(k), ctx.dom(q))) return false;
  const auto ku = ctx.factor_through_mono(k, ctx.kernel(q));
  if (!ku || !ctx.is_iso(*ku)) return false;
  const auto qu = ctx.factor_through_epi(q, ctx.cokernel(k));
  return qu && ctx.is_iso(*qu);
}

/// Subobject order: a ≤ b iff a factors through b.
template <ZContext Ctx>
bool subobject_leq(const Ctx& ctx, const typename Ctx::Hom& a, const typename Ctx::Hom& b) {
  return ctx.factor_through_mono(a, b).has_value();
}

template <ZContext Ctx>
bool same_subobject(const Ctx& ctx, const typename Ctx::Hom& a, const typename Ctx::Hom& b) {
  return subobject_leq(ctx, a, b) && subobject_leq(ctx, b, a);
}

/// Pullback of two monos m1: Y → X and m2: Z → X (m2 normal), computed as the
/// kernel of Y → X → X/Z.
template <ZContext Ctx>
struct MonoPullback {
  typename Ctx::Object corner;
  typename Ctx::Hom to_first;   // corner → Y
  typename Ctx::Hom to_second;  // corner → Z
  typename Ctx::Hom diagonal;   // corner → X
};

template <ZContext Ctx>
MonoPullback<Ctx> pullback_of_monos(const Ctx& ctx, const typename Ctx::Hom& m1, const typename Ctx::Hom& m2) {
  const auto w = ctx.kernel(ctx.compose(ctx.cokernel(m2), m1));
  const auto diag = ctx.compose(m1, w);
  const auto second = ctx.factor_through_mono(diag, m2);
  if (!second) throw ContextInvariantViolation("pullback corner does not factor through the second mono");
  return {ctx.dom(w), w, *second, diag};
}

/// Pullback of a normal epi e: Y → Q along a normal mono m: T → Q, as the
/// kernel of Y → Q → Q/T, with its projection onto T.
template <ZContext Ctx>
struct EpiPullback {
  typename Ctx::Object corner;
  typename Ctx::Hom inclusion;   // corner → Y
  typename Ctx::Hom projection;  // corner → T
};

template <ZContext Ctx>
EpiPullback<Ctx> pullback_epi_along_mono(const Ctx& ctx, const typename Ctx::Hom& e, const typename Ctx::Hom& m) {
  const auto p = ctx.kernel(ctx.compose(ctx.cokernel(m), e));
  const auto proj = ctx.factor_through_mono(ctx.compose(e, p), m);
  if (!proj) throw ContextInvariantViolation("pullback corner does not map into the mono's domain");
  return {ctx.dom(p), p, *proj};
}

/// Meet of normal subobjects: the diagonal of their pullback.
template <ZContext Ctx>
typename Ctx::Hom subobject_meet(const Ctx& ctx, const typename Ctx::Hom& y, const typename Ctx::Hom& z) {
  return pullback_of_monos(ctx, y, z).diagonal;
}

/// Join of normal subobjects y, z of X: the kernel of the cokernel of
/// Y → X/Z, composed back to X.
template <ZContext Ctx>
typename Ctx::Hom join_via_uniinter(const Ctx& ctx, const typename Ctx::Hom& y, const typename Ctx::Hom& z) {
  const auto pz = ctx.cokernel(z);
  const auto q = ctx.cokernel(ctx.compose(pz, y));
  return ctx.kernel(ctx.compose(q, pz));
}

/// For normal subobjects a ≤ b of X, the induced map X/a → X/b.
template <ZContext Ctx>
typename Ctx::Hom quotient_comparison(const Ctx& ctx, const typename Ctx::Hom& a, const typename Ctx::Hom& b) {
  const auto g = ctx.factor_through_epi(ctx.cokernel(b), ctx.cokernel(a));
  if (!g) throw ContextInvariantViolation("quotient comparison requires a ≤ b");
  return *g;
}

/// For normal subobjects a ≤ b of X, the mono a → b.
template <ZContext Ctx>
typename Ctx::Hom subobject_comparison(const Ctx& ctx, const typename Ctx::Hom& a, const typename Ctx::Hom& b) {
  const auto u = ctx.factor_through_mono(a, b);
  if (!u) throw ContextInvariantViolation("subobject comparison requires a ≤ b");
  return *u;
}

/// The antinormal composite Y → X → X/Z.
template <ZContext Ctx>
typename Ctx::Hom antinormal_map(const Ctx& ctx, const typename Ctx::Hom& y, const typename Ctx::Hom& z) {
  return ctx.compose(ctx.cokernel(z), y);
}

}  // namespace homlat
