#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlat/zexact/algorithms.hpp"
#include "homlat/zexact/context.hpp"

namespace homlat {

/// A short exact sequence sub ↪ base ↠ quo of an inner context. quo is always
/// the cokernel of sub; sub must be a normal mono.
template <ZContext Inner>
struct SesObject {
  typename Inner::Hom sub;
  typename Inner::Hom quo;
};

/// A morphism of short exact sequences: beta on bases, alpha on subs, gamma on
/// quotients, with both squares commuting.
template <ZContext Inner>
struct SesHom {
  SesObject<Inner> src;
  SesObject<Inner> dst;
  typename Inner::Hom alpha;
  typename Inner::Hom beta;
  typename Inner::Hom gamma;
};

/// Which clauses of the normal-mono criterion for ses maps hold: alpha and
/// beta normal monos and the left square a pullback.
struct SesMonoDiagnosis {
  bool alpha_normal_mono = false;
  bool beta_normal_mono = false;
  bool left_square_pullback = false;
  bool ok() const { return alpha_normal_mono && beta_normal_mono && left_square_pullback; }
};

/// Epi analogue: beta and gamma normal epis and the right square a pushout.
struct SesEpiDiagnosis {
  bool beta_normal_epi = false;
  bool gamma_normal_epi = false;
  bool right_square_pushout = false;
  bool ok() const { return beta_normal_epi && gamma_normal_epi && right_square_pushout; }
};

/// The category of short exact sequences of Inner. It is again a ZContext,
/// so it can be iterated.
template <ZContext Inner>
class SesContext {
 public:
  using InnerContext = Inner;
  using Object = SesObject<Inner>;
  using Hom = SesHom<Inner>;
  using InnerObject = typename Inner::Object;
  using InnerHom = typename Inner::Hom;
  static constexpr int depth = Inner::depth + 1;

  SesContext() = default;
  explicit SesContext(Inner inner) : inner_(std::move(inner)) {}
  const Inner& inner() const { return inner_; }

  /// The sequence sub ↪ cod(sub) ↠ cod(sub)/sub. Throws if sub is not a
  /// normal mono.
  Object make_object(const InnerHom& sub) const {
    if (!homlat::is_normal_mono(inner_, sub))
      throw ContextInvariantViolation("ses object: " + inner_.encode(sub) + " is not a normal mono");
    return Object{sub, inner_.cokernel(sub)};
  }
  /// For subs that are inner kernels, hence normal by construction.
  Object object_from_kernel(const InnerHom& sub) const { return Object{sub, inner_.cokernel(sub)}; }

  InnerObject base(const Object& s) const { return inner_.cod(s.sub); }

  /// The unique ses map with the given base component, if the base map
  /// carries src.sub into dst.sub.
  std::optional<Hom> lift(const Object& src, const Object& dst, const InnerHom& beta) const {
    const auto alpha = inner_.factor_through_mono(inner_.compose(beta, src.sub), dst.sub);
    if (!alpha) return std::nullopt;
    const auto gamma = inner_.factor_through_epi(inner_.compose(dst.quo, beta), src.quo);
    if (!gamma) return std::nullopt;
    return Hom{src, dst, *alpha, beta, *gamma};
  }

  Object dom(const Hom& f) const { return f.src; }
  Object cod(const Hom& f) const { return f.dst; }

  Hom compose(const Hom& g, const Hom& f) const {
    if (!same_object(f.dst, g.src)) throw std::invalid_argument("ses compose: codomain/domain mismatch");
    return Hom{f.src, g.dst, inner_.compose(g.alpha, f.alpha), inner_.compose(g.beta, f.beta),
               inner_.compose(g.gamma, f.gamma)};
  }

  Hom identity(const Object& s) const {
    return Hom{s, s, inner_.identity(inner_.dom(s.sub)), inner_.identity(base(s)), inner_.identity(inner_.cod(s.quo))};
  }

  Object zero_object() const { return make_object(inner_.identity(inner_.zero_object())); }

  Hom zero_hom(const Object& s, const Object& t) const {
    auto f = lift(s, t, inner_.zero_hom(base(s), base(t)));
    if (!f) throw ContextInvariantViolation("zero map does not lift");
    return *f;
  }

  bool is_zero_object(const Object& s) const { return inner_.is_zero_object(base(s)); }

  /// Kernel of (alpha, beta, gamma): A = Ker alpha, B = Ker beta, C = Coker(A → B).
  Hom kernel(const Hom& f) const {
    const auto a = inner_.kernel(f.alpha);
    const auto b = inner_.kernel(f.beta);
    const auto i = inner_.factor_through_mono(inner_.compose(f.src.sub, a), b);
    if (!i) throw ContextInvariantViolation("ses kernel: Ker(alpha) does not land in Ker(beta)");
    const Object k = make_object(*i);
    auto out = lift(k, f.src, b);
    if (!out) throw ContextInvariantViolation("ses kernel: inclusion does not lift");
    return *out;
  }

  /// Cokernel of (alpha, beta, gamma): B' = Coker beta, C' = Coker gamma,
  /// A' = Ker(B' → C').
  Hom cokernel(const Hom& f) const {
    const auto p = inner_.cokernel(f.beta);
    const auto r = inner_.cokernel(f.gamma);
    const auto s = inner_.factor_through_epi(inner_.compose(r, f.dst.quo), p);
    if (!s) throw ContextInvariantViolation("ses cokernel: Coker(beta) does not map to Coker(gamma)");
    const Object c = object_from_kernel(inner_.kernel(*s));
    auto out = lift(f.dst, c, p);
    if (!out) throw ContextInvariantViolation("ses cokernel: projection does not lift");
    return *out;
  }

  bool equal(const Hom& f, const Hom& g) const {
    return same_object(f.src, g.src) && same_object(f.dst, g.dst) && inner_.equal(f.alpha, g.alpha) &&
           inner_.equal(f.beta, g.beta) && inner_.equal(f.gamma, g.gamma);
  }

  bool same_object(const Object& s, const Object& t) const {
    return inner_.equal(s.sub, t.sub) && inner_.equal(s.quo, t.quo);
  }

  std::optional<Hom> factor_through_mono(const Hom& f, const Hom& m) const {
    if (!same_object(f.dst, m.dst)) return std::nullopt;
    const auto beta = inner_.factor_through_mono(f.beta, m.beta);
    if (!beta) return std::nullopt;
    auto u = lift(f.src, m.src, *beta);
    if (!u || !equal(compose(m, *u), f)) return std::nullopt;
    return u;
  }

  std::optional<Hom> factor_through_epi(const Hom& f, const Hom& e) const {
    if (!same_object(f.src, e.src)) return std::nullopt;
    const auto beta = inner_.factor_through_epi(f.beta, e.beta);
    if (!beta) return std::nullopt;
    auto g = lift(e.dst, f.dst, *beta);
    if (!g || !equal(compose(*g, e), f)) return std::nullopt;
    return g;
  }

  bool is_iso(const Hom& f) const { return inner_.is_iso(f.alpha) && inner_.is_iso(f.beta) && inner_.is_iso(f.gamma); }
  /// Componentwise test.
  bool is_mono(const Hom& f) const {
    return inner_.is_mono(f.alpha) && inner_.is_mono(f.beta) && inner_.is_mono(f.gamma);
  }
  /// Componentwise test.
  bool is_epi(const Hom& f) const { return inner_.is_epi(f.alpha) && inner_.is_epi(f.beta) && inner_.is_epi(f.gamma); }

  /// The ses subobject determined by a normal subobject x of the base:
  /// (V ∧ X ↪ X ↠ X/(V ∧ X)) mapping into (V ↪ W ↠ W/V).
  Hom subobject_over(const Object& s, const InnerHom& x) const {
    const auto a = inner_.kernel(inner_.compose(s.quo, x));
    const Object t = object_from_kernel(a);
    auto m = lift(t, s, x);
    if (!m) throw ContextInvariantViolation("ses subobject does not lift");
    return *m;
  }

  /// Normal subobjects via the bijection with normal subobjects of the base;
  /// each candidate is re-verified as a normal mono.
  std::vector<Hom> normal_subobjects(const Object& s) const {
    std::vector<Hom> out;
    for (const auto& x : inner_.normal_subobjects(base(s))) {
      auto m = subobject_over(s, x);
      if (!homlat::is_normal_mono(*this, m))
        throw ContextInvariantViolation("ses subobject over " + inner_.encode(x) + " is not a normal mono");
      out.push_back(std::move(m));
    }
    return out;
  }

  std::string describe(const Object& s) const { return "(" + inner_.describe(base(s)) + "," + inner_.encode(s.sub) + ")"; }

  /// "(base image, sub image)" with both parts encoded as subobjects of the
  /// target's base.
  std::string encode(const Hom& m) const {
    return "(" + inner_.encode(m.beta) + "," + inner_.encode(inner_.compose(m.dst.sub, m.alpha)) + ")";
  }

  /// Clause-by-clause normal-mono criterion for ses maps.
  SesMonoDiagnosis diagnose_mono(const Hom& f) const {
    SesMonoDiagnosis d;
    d.alpha_normal_mono = homlat::is_normal_mono(inner_, f.alpha);
    d.beta_normal_mono = homlat::is_normal_mono(inner_, f.beta);
    // Pullback of dst.sub along beta is Ker(dst.quo ∘ beta); the square is a
    // pullback iff src.sub is that subobject of the source base.
    const auto pb = inner_.kernel(inner_.compose(f.dst.quo, f.beta));
    d.left_square_pullback = same_subobject(inner_, f.src.sub, pb);
    return d;
  }

  /// Clause-by-clause normal-epi criterion for ses maps.
  SesEpiDiagnosis diagnose_epi(const Hom& f) const {
    SesEpiDiagnosis d;
    d.beta_normal_epi = homlat::is_normal_epi(inner_, f.beta);
    d.gamma_normal_epi = homlat::is_normal_epi(inner_, f.gamma);
    // Pushout of src.quo along beta is Coker(beta ∘ src.sub); the square is a
    // pushout iff dst.quo is that quotient of the target base.
    const auto po = inner_.cokernel(inner_.compose(f.beta, f.src.sub));
    const auto there = inner_.factor_through_epi(f.dst.quo, po);
    const auto back = inner_.factor_through_epi(po, f.dst.quo);
    d.right_square_pushout = there && back && inner_.is_iso(*there);
    return d;
  }

 private:
  Inner inner_;
};

/// ses^n(Inner).
template <ZContext Inner, int N>
struct SesPower {
  using type = SesContext<typename SesPower<Inner, N - 1>::type>;
};
template <ZContext Inner>
struct SesPower<Inner, 0> {
  using type = Inner;
};

template <ZContext Inner>
bool ses_is_normal_mono(const SesContext<Inner>& ctx, const SesHom<Inner>& f) {
  return ctx.diagnose_mono(f).ok();
}

template <ZContext Inner>
bool ses_is_normal_epi(const SesContext<Inner>& ctx, const SesHom<Inner>& f) {
  return ctx.diagnose_epi(f).ok();
}

}  // namespace homlat
