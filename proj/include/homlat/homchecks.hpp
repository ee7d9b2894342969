#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homlat/lattice.hpp"
#include "homlat/nsub.hpp"
#include "homlat/zexact/algorithms.hpp"
#include "homlat/zexact/cmon.hpp"
#include "homlat/zexact/ses.hpp"

namespace homlat {

enum class Property { hsd, secondiso, dpn, diexact, modular, distributive, stability };

inline const char* property_name(Property p) {
  switch (p) {
    case Property::hsd: return "hsd";
    case Property::secondiso: return "secondiso";
    case Property::dpn: return "dpn";
    case Property::diexact: return "diexact";
    case Property::modular: return "modular";
    case Property::distributive: return "distributive";
    case Property::stability: return "stability";
  }
  return "?";
}

inline std::optional<Property> parse_property(const std::string& s) {
  for (Property p : {Property::hsd, Property::secondiso, Property::dpn, Property::diexact, Property::modular,
                     Property::distributive, Property::stability})
    if (s == property_name(p)) return p;
  return std::nullopt;
}

/// A failing case: indices into nsub of the checked object plus their codes.
struct Witness {
  std::vector<Elem> indices;
  std::vector<std::string> parts;
  std::string condition;
  std::string encode() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ";" : "") + parts[i];
    return s + ")";
  }
};

struct CheckReport {
  CheckReport() = default;
  CheckReport(Property p, std::string obj, int d) : property(p), object(std::move(obj)), depth(d) {}

  Property property{};
  std::string object;
  int depth = 0;
  bool pass = true;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, std::size_t> stats;

  void record(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

/// The three readings of the second isomorphism property disagree on a pair.
class FormulationDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Direct di-exactness disagrees with third-iso plus second-iso on an object.
class DecompositionDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

template <class Ctx>
std::string mono_diagnosis(const Ctx& ctx, const typename Ctx::Hom& g) {
  if constexpr (requires { ctx.diagnose_mono(g); }) {
    const auto d = ctx.diagnose_mono(g);
    return std::string(" [alpha normal mono: ") + (d.alpha_normal_mono ? "yes" : "no") +
           ", beta normal mono: " + (d.beta_normal_mono ? "yes" : "no") +
           ", left square pullback: " + (d.left_square_pullback ? "yes" : "no") + "]";
  } else {
    return "";
  }
}

}  // namespace detail

enum class CaseStatus { pass, fail, skipped };

template <class Ctx>
struct CaseResult {
  CaseStatus status = CaseStatus::pass;
  std::string condition;
};

// ---- third isomorphism (HSD) ----

/// For X ≤ Y in nsub(Z) with X → Y normal: Y/X → Z/X must be a normal mono.
template <ZContext Ctx>
CaseResult<Ctx> third_iso_case(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem xi, Elem yi) {
  const auto& x = l[xi];
  const auto& y = l[yi];
  const auto u = subobject_comparison(ctx, x, y);
  if (!is_normal_mono(ctx, u)) return {CaseStatus::skipped, "X → Y not normal"};
  const auto g = ctx.factor_through_epi(ctx.compose(ctx.cokernel(x), y), ctx.cokernel(u));
  if (!g) throw ContextInvariantViolation("third iso: Y → Z/X does not kill X");
  if (is_normal_mono(ctx, *g)) return {};
  return {CaseStatus::fail, "Y/X → Z/X is not a normal mono" + detail::mono_diagnosis(ctx, *g)};
}

template <ZContext Ctx>
CheckReport third_iso_check(const Ctx& ctx, const typename Ctx::Object& z) {
  CheckReport r{Property::hsd, ctx.describe(z), Ctx::depth};
  const auto l = enumerate_nsub(ctx, z);
  for (Elem i = 0; i < l.size(); ++i)
    for (Elem j = 0; j < l.size(); ++j) {
      if (!l.leq(i, j)) continue;
      const auto c = third_iso_case(ctx, l, i, j);
      if (c.status == CaseStatus::skipped) {
        ++r.skipped;
        continue;
      }
      ++r.cases;
      if (c.status == CaseStatus::fail) r.record({{i, j}, {l.codes[i], l.codes[j], ctx.describe(z)}, c.condition});
    }
  return r;
}

// ---- second isomorphism ----

struct SecondIsoVerdicts {
  bool canonical_iso = false;  // Y/(Y∧Z) → (Y∨Z)/Z is an isomorphism
  bool normal = false;         // Y ↪ Y∨Z ↠ (Y∨Z)/Z is normal
  bool normal_epi = false;     // ... and is a normal epi
  bool dual_applicable = false;
  bool dual_normal = false;
  bool dual_normal_mono = false;
  bool dual_canonical_iso = false;
};

template <ZContext Ctx>
SecondIsoVerdicts second_iso_verdicts(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem yi, Elem zi) {
  SecondIsoVerdicts v;
  const auto& y = l[yi];
  const auto& z = l[zi];
  const auto& j = l[l.join(yi, zi)];
  const auto& m = l[l.meet(yi, zi)];
  const auto yj = subobject_comparison(ctx, y, j);
  const auto zj = subobject_comparison(ctx, z, j);
  const auto f = ctx.compose(ctx.cokernel(zj), yj);
  v.normal = is_normal_map(ctx, f);
  v.normal_epi = is_normal_epi(ctx, f);
  const auto my = subobject_comparison(ctx, m, y);
  const auto u = ctx.factor_through_epi(f, ctx.cokernel(my));
  if (!u) throw ContextInvariantViolation("second iso: Y → (Y∨Z)/Z does not kill Y∧Z");
  v.canonical_iso = ctx.is_iso(*u);

  // Dual: Ker(X/(Y∧Z) → X/Z) ↪ X/(Y∧Z) ↠ X/Y against Ker(X/Y → X/(Y∨Z)).
  const auto k = ctx.kernel(quotient_comparison(ctx, m, z));
  const auto g = ctx.compose(quotient_comparison(ctx, m, y), k);
  v.dual_applicable = ctx.is_zero_object(ctx.dom(ctx.kernel(g)));
  v.dual_normal = is_normal_map(ctx, g);
  v.dual_normal_mono = is_normal_mono(ctx, g);
  const auto k2 = ctx.kernel(quotient_comparison(ctx, y, j));
  const auto w = ctx.factor_through_mono(g, k2);
  v.dual_canonical_iso = w && ctx.is_iso(*w);
  return v;
}

template <ZContext Ctx>
CaseResult<Ctx> second_iso_judge(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem yi, Elem zi,
                                 const SecondIsoVerdicts& v) {
  if (v.canonical_iso != v.normal || v.normal != v.normal_epi)
    throw FormulationDisagreement("second iso formulations disagree on (" + l.codes[yi] + ";" + l.codes[zi] +
                                  ") in " + ctx.describe(l.object));
  if (v.dual_applicable && v.dual_normal != v.dual_normal_mono)
    throw FormulationDisagreement("dual second iso formulations disagree on (" + l.codes[yi] + ";" + l.codes[zi] +
                                  ") in " + ctx.describe(l.object));
  if (v.canonical_iso) return {};
  return {CaseStatus::fail, "Y/(Y∧Z) → (Y∨Z)/Z is not an isomorphism"};
}

template <ZContext Ctx>
CaseResult<Ctx> second_iso_case(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem yi, Elem zi) {
  return second_iso_judge(ctx, l, yi, zi, second_iso_verdicts(ctx, l, yi, zi));
}

template <ZContext Ctx>
CheckReport second_iso_check(const Ctx& ctx, const typename Ctx::Object& x) {
  CheckReport r{Property::secondiso, ctx.describe(x), Ctx::depth};
  const auto l = enumerate_nsub(ctx, x);
  r.stats["dual_applicable"] = 0;
  r.stats["dual_canonical_iso_agrees"] = 0;
  for (Elem i = 0; i < l.size(); ++i)
    for (Elem j = 0; j < l.size(); ++j) {
      ++r.cases;
      const auto v = second_iso_verdicts(ctx, l, i, j);
      const auto c = second_iso_judge(ctx, l, i, j, v);
      if (v.dual_applicable) {
        ++r.stats["dual_applicable"];
        r.stats["dual_canonical_iso_agrees"] += v.dual_canonical_iso == v.dual_normal;
      }
      if (c.status == CaseStatus::fail) r.record({{i, j}, {l.codes[i], l.codes[j]}, c.condition});
    }
  return r;
}

// ---- DPN ----

/// α = Y ↪ X ↠ X/Z and its dinverse β = Z ↪ X ↠ X/Y must be normal together.
/// A failing pair fails in both orders; the case for (Y,Z) reports only the
/// order in which α is the non-normal side.
template <ZContext Ctx>
CaseResult<Ctx> dpn_case(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem yi, Elem zi) {
  const bool a = is_normal_map(ctx, antinormal_map(ctx, l[yi], l[zi]));
  if (a) return {};
  const bool b = is_normal_map(ctx, antinormal_map(ctx, l[zi], l[yi]));
  if (!b) return {};
  return {CaseStatus::fail, "alpha not normal, dinverse beta normal"};
}

template <ZContext Ctx>
CheckReport dpn_check(const Ctx& ctx, const typename Ctx::Object& x) {
  CheckReport r{Property::dpn, ctx.describe(x), Ctx::depth};
  const auto l = enumerate_nsub(ctx, x);
  for (Elem i = 0; i < l.size(); ++i)
    for (Elem j = 0; j < l.size(); ++j) {
      ++r.cases;
      const auto c = dpn_case(ctx, l, i, j);
      if (c.status == CaseStatus::fail) r.record({{i, j}, {l.codes[i], l.codes[j]}, c.condition});
    }
  return r;
}

// ---- di-exactness ----

template <ZContext Ctx>
CaseResult<Ctx> diexact_case(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem yi, Elem zi) {
  const auto check = normal_map_check(ctx, antinormal_map(ctx, l[yi], l[zi]));
  if (check.normal) return {};
  return {CaseStatus::fail, "Y ↪ X ↠ X/Z not normal: " + check.reason()};
}

/// Direct sweep, cross-checked against third iso plus second iso.
template <ZContext Ctx>
CheckReport diexact_check(const Ctx& ctx, const typename Ctx::Object& x) {
  CheckReport r{Property::diexact, ctx.describe(x), Ctx::depth};
  const auto l = enumerate_nsub(ctx, x);
  for (Elem i = 0; i < l.size(); ++i)
    for (Elem j = 0; j < l.size(); ++j) {
      ++r.cases;
      const auto c = diexact_case(ctx, l, i, j);
      if (c.status == CaseStatus::fail)
        r.record({{i, j}, {l.codes[i], l.codes[j], ctx.describe(x)}, c.condition});
    }
  const bool third = third_iso_check(ctx, x).pass;
  const bool second = second_iso_check(ctx, x).pass;
  r.stats["third_iso_pass"] = third;
  r.stats["second_iso_pass"] = second;
  if (r.pass != (third && second))
    throw DecompositionDisagreement("di-exactness of " + ctx.describe(x) + " is " + (r.pass ? "true" : "false") +
                                    " but third iso " + (third ? "passes" : "fails") + " and second iso " +
                                    (second ? "passes" : "fails"));
  return r;
}

// ---- 3×3 grid ----

/// Row-major grid
///   W    → Z   → Z/W
///   Y    → X   → X/Y
///   Y/W  → X/Z → X/(Y∨Z)
/// with W = Y∧Z. Columns run top to bottom.
template <ZContext Ctx>
struct DiExtensionGrid {
  std::array<typename Ctx::Object, 9> objects;
  std::array<std::array<typename Ctx::Hom, 2>, 3> rows;
  std::array<std::array<typename Ctx::Hom, 2>, 3> cols;
  std::array<bool, 3> row_exact{};
  std::array<bool, 3> col_exact{};
  bool commutes = false;
  bool is_diextension() const {
    return commutes && row_exact[0] && row_exact[1] && row_exact[2] && col_exact[0] && col_exact[1] && col_exact[2];
  }
};

template <ZContext Ctx>
DiExtensionGrid<Ctx> build_diextension(const Ctx& ctx, const typename Ctx::Hom& y, const typename Ctx::Hom& z) {
  const auto w = subobject_meet(ctx, y, z);
  const auto j = join_via_uniinter(ctx, y, z);
  const auto wz = subobject_comparison(ctx, w, z);
  const auto wy = subobject_comparison(ctx, w, y);
  const auto qwz = ctx.cokernel(wz);  // Z → Z/W
  const auto qwy = ctx.cokernel(wy);  // Y → Y/W
  const auto qy = ctx.cokernel(y);
  const auto qz = ctx.cokernel(z);
  const auto alpha = ctx.factor_through_epi(ctx.compose(qz, y), qwy);  // Y/W → X/Z
  const auto beta = ctx.factor_through_epi(ctx.compose(qy, z), qwz);   // Z/W → X/Y
  if (!alpha || !beta) throw ContextInvariantViolation("grid: antinormal maps do not kill Y∧Z");
  const auto pz = quotient_comparison(ctx, z, j);  // X/Z → X/(Y∨Z)
  const auto py = quotient_comparison(ctx, y, j);  // X/Y → X/(Y∨Z)

  DiExtensionGrid<Ctx> g{
      {ctx.dom(w), ctx.dom(z), ctx.cod(qwz), ctx.dom(y), ctx.cod(y), ctx.cod(qy), ctx.cod(qwy), ctx.cod(qz),
       ctx.cod(pz)},
      {{{wz, qwz}, {y, qy}, {*alpha, pz}}},
      {{{wy, qwy}, {z, qz}, {*beta, py}}},
  };
  for (int k = 0; k < 3; ++k) {
    g.row_exact[k] = is_short_exact(ctx, g.rows[k][0], g.rows[k][1]);
    g.col_exact[k] = is_short_exact(ctx, g.cols[k][0], g.cols[k][1]);
  }
  // Four squares; each compares the path right-then-down with down-then-right.
  g.commutes = ctx.equal(ctx.compose(z, wz), ctx.compose(y, wy)) &&
               ctx.equal(ctx.compose(*beta, qwz), ctx.compose(qy, z)) &&
               ctx.equal(ctx.compose(*alpha, qwy), ctx.compose(qz, y)) &&
               ctx.equal(ctx.compose(py, qy), ctx.compose(pz, qz));
  return g;
}

// ---- pullback stability ----

template <ZContext Ctx>
CaseResult<Ctx> stability_case(const Ctx& ctx, const NSubLattice<Ctx>& l, Elem ki, const typename Ctx::Hom& t) {
  const auto e = ctx.cokernel(l[ki]);
  const auto pb = pullback_epi_along_mono(ctx, e, t);
  if (is_normal_epi(ctx, pb.projection)) return {};
  return {CaseStatus::fail, "pulled-back projection is not a normal epi"};
}

/// Every normal epi out of X pulled back along every normal mono into its
/// codomain stays a normal epi.
template <ZContext Ctx>
CheckReport pullback_stability_check(const Ctx& ctx, const typename Ctx::Object& x) {
  CheckReport r{Property::stability, ctx.describe(x), Ctx::depth};
  const auto l = enumerate_nsub(ctx, x);
  for (Elem k = 0; k < l.size(); ++k) {
    const auto q = enumerate_nsub(ctx, ctx.cod(ctx.cokernel(l[k])));
    for (Elem t = 0; t < q.size(); ++t) {
      ++r.cases;
      const auto c = stability_case(ctx, l, k, q[t]);
      if (c.status == CaseStatus::fail) r.record({{k, t}, {l.codes[k], q.codes[t]}, c.condition});
    }
  }
  return r;
}

// ---- lattice properties of nsub ----

template <ZContext Ctx>
CheckReport lattice_property_check(const Ctx& ctx, const typename Ctx::Object& x, Property p) {
  CheckReport r{p, ctx.describe(x), Ctx::depth};
  const auto l = enumerate_nsub(ctx, x);
  r.cases = l.size() * l.size() * l.size();
  const auto v = p == Property::modular ? is_modular(l.lattice) : is_distributive(l.lattice);
  if (!v.holds) {
    Witness w;
    if (v.witness) {
      w.indices = v.witness->elements;
      for (Elem e : w.indices) w.parts.push_back(l.codes[e]);
      w.condition = v.witness->describe(l.codes);
    }
    r.record(std::move(w));
  }
  return r;
}

template <ZContext Ctx>
CheckReport run_check(const Ctx& ctx, const typename Ctx::Object& x, Property p) {
  switch (p) {
    case Property::hsd: return third_iso_check(ctx, x);
    case Property::secondiso: return second_iso_check(ctx, x);
    case Property::dpn: return dpn_check(ctx, x);
    case Property::diexact: return diexact_check(ctx, x);
    case Property::stability: return pullback_stability_check(ctx, x);
    case Property::modular:
    case Property::distributive: return lattice_property_check(ctx, x, p);
  }
  throw std::invalid_argument("unknown property");
}

/// Re-evaluates a witness in isolation; true iff the failure reproduces.
template <ZContext Ctx>
bool replay(const Ctx& ctx, const typename Ctx::Object& x, Property p, const Witness& w) {
  const auto l = enumerate_nsub(ctx, x);
  auto fails = [](const auto& c) { return c.status == CaseStatus::fail; };
  switch (p) {
    case Property::hsd: return fails(third_iso_case(ctx, l, w.indices.at(0), w.indices.at(1)));
    case Property::secondiso: return fails(second_iso_case(ctx, l, w.indices.at(0), w.indices.at(1)));
    case Property::dpn: return fails(dpn_case(ctx, l, w.indices.at(0), w.indices.at(1)));
    case Property::diexact: return fails(diexact_case(ctx, l, w.indices.at(0), w.indices.at(1)));
    case Property::stability: {
      const auto q = enumerate_nsub(ctx, ctx.cod(ctx.cokernel(l[w.indices.at(0)])));
      return fails(stability_case(ctx, l, w.indices.at(0), q[w.indices.at(1)]));
    }
    case Property::modular:
    case Property::distributive: return !lattice_property_check(ctx, x, p).pass;
  }
  return false;
}

// ---- ses objects over a base ----

/// All ses^k objects whose innermost base is x: depth 0 is {x}; depth k+1
/// takes every normal subobject of every depth-k object.
template <int K>
std::vector<typename SesPower<CmonContext, K>::type::Object> ses_objects(const MonoidPtr& x) {
  if constexpr (K == 0) {
    return {x};
  } else {
    using Prev = typename SesPower<CmonContext, K - 1>::type;
    using Cur = typename SesPower<CmonContext, K>::type;
    const Prev prev{};
    const Cur cur{};
    std::vector<typename Cur::Object> out;
    for (const auto& s : ses_objects<K - 1>(x))
      for (const auto& m : prev.normal_subobjects(s)) out.push_back(cur.make_object(m));
    return out;
  }
}

/// Closure of {x} under normal subobjects and quotients, one representative
/// per isomorphism class, in discovery order.
inline std::vector<MonoidPtr> subquotient_closure(const MonoidPtr& x) {
  const CmonContext ctx;
  std::vector<MonoidPtr> out{x};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto cur = out[i];
    for (const auto& m : ctx.normal_subobjects(cur))
      for (const MonoidPtr& cand : {ctx.dom(m), ctx.cod(ctx.cokernel(m))}) {
        bool seen = false;
        for (const auto& o : out)
          if (isomorphic(o, cand)) {
            seen = true;
            break;
          }
        if (!seen) out.push_back(cand);
      }
  }
  return out;
}

}  // namespace homlat
