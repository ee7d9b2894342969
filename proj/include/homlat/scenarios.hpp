#pragma once

#include <string>
#include <vector>

#include "homlat/fixtures.hpp"
#include "homlat/homchecks.hpp"
#include "homlat/nsub.hpp"
#include "homlat/semilattice.hpp"

namespace homlat {

struct ScenarioOptions {
  bool corrupt_pentagon = false;  // replace N5 by the chain 0 < D < C < B < A
  int ses_depth = 1;              // 0 disables the ses scenarios; > 1 adds transfer checks
};

struct ScenarioStep {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ScenarioOutcome {
  enum class Status { reproduced, mismatch, skipped };
  explicit ScenarioOutcome(std::string n) : name(std::move(n)) {}
  std::string name;
  Status status = Status::reproduced;
  std::vector<ScenarioStep> steps;

  void step(std::string step_name, bool ok, std::string detail) {
    if (status == Status::mismatch) return;  // stop at the first divergent step
    steps.push_back({std::move(step_name), ok, std::move(detail)});
    if (!ok) status = Status::mismatch;
  }
  const ScenarioStep* divergent() const {
    for (const auto& s : steps)
      if (!s.ok) return &s;
    return nullptr;
  }
};

inline const char* status_name(ScenarioOutcome::Status s) {
  switch (s) {
    case ScenarioOutcome::Status::reproduced: return "reproduced";
    case ScenarioOutcome::Status::mismatch: return "mismatch";
    case ScenarioOutcome::Status::skipped: return "skipped";
  }
  return "?";
}

namespace detail {

inline MonoidPtr pentagon_or_chain(bool corrupt) {
  if (!corrupt) return fixtures::n5();
  return semilattice_from_covers({5, {{0, 4}, {4, 3}, {3, 2}, {2, 1}}, {"0", "A", "B", "C", "D"}}, "N5");
}

inline Elem by_label(const MonoidPtr& m, const std::string& l) {
  auto e = m->find(l);
  if (!e) throw std::invalid_argument("no element labelled " + l + " in " + m->display_name());
  return *e;
}

inline MonoidHom down(const MonoidPtr& m, const std::string& l) {
  return inclusion(m, principal_downset(*m, by_label(m, l)));
}

inline bool has_witness(const CheckReport& r, const std::vector<std::string>& parts) {
  for (const auto& w : r.witnesses)
    if (w.parts.size() >= parts.size() && std::equal(parts.begin(), parts.end(), w.parts.begin())) return true;
  return false;
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

inline ScenarioOutcome pentagon_dpn(const ScenarioOptions& opt) {
  ScenarioOutcome out{"pentagon-dpn"};
  const CmonContext c;
  const auto x = pentagon_or_chain(opt.corrupt_pentagon);
  const auto b = down(x, "B"), d = down(x, "D");

  const auto r = dpn_check(c, x);
  out.step("dpn", !r.pass && has_witness(r, {c.encode(b), c.encode(d)}),
           std::string("dpn ") + (r.pass ? "passes" : "fails") + ", witness (↓B,↓D) " +
               (has_witness(r, {c.encode(b), c.encode(d)}) ? "present" : "absent"));

  const auto beta = antinormal_map(c, d, b);  // ↓D → ↑B
  out.step("dinverse-iso", c.is_iso(beta), "↓D → X/↓B is an isomorphism: " + yes(c.is_iso(beta)));

  const auto alpha = antinormal_map(c, b, d);  // ↓B → ↑D
  const auto up = quotient_by_downset(x, by_label(x, "D"));
  const auto& pi = up.projection;
  auto label_of = [&](const char* l) { return pi.cod()->label(pi(by_label(x, l))); };
  const bool table = label_of("0") == "D" && label_of("C") == "A" && label_of("B") == "A";
  const auto q = c.cokernel(d);
  bool same = alpha.dom()->size() == 3;  // ↓B = {0, C, B}
  for (Elem i = 0; i < alpha.dom()->size(); ++i)
    same &= alpha(i) == q(by_label(x, x->label(b(i)) == "0" ? "D" : "A"));
  bool agrees = true;  // the fast quotient and the congruence cokernel give the same partition
  for (Elem u = 0; u < x->size(); ++u)
    for (Elem v = 0; v < x->size(); ++v) agrees &= (pi(u) == pi(v)) == (q(u) == q(v));
  const bool not_normal = !is_normal_map(c, alpha);
  out.step("image-table", table && same && agrees && not_normal,
           "0↦" + label_of("0") + ", C↦" + label_of("C") + ", B↦" + label_of("B") +
               "; quotients agree: " + yes(agrees) + "; ↓B → X/↓D normal: " + yes(!not_normal));
  return out;
}

inline ScenarioOutcome l6_quotient() {
  ScenarioOutcome out{"l6-quotient"};
  const auto l = fixtures::l6();
  const auto e = by_label(l, "E");
  const auto q = cokernel_by_submonoid(l, principal_downset(*l, e));
  std::vector<std::string> classes;
  for (Subset s : q.classes()) classes.push_back(l->format(s));
  std::sort(classes.begin(), classes.end());
  std::vector<std::string> want{l->format(Subset::of({by_label(l, "A"), by_label(l, "B")})),
                                l->format(Subset::of({by_label(l, "C"), by_label(l, "D")})),
                                l->format(Subset::of({0, e}))};
  std::sort(want.begin(), want.end());
  std::string listed;
  for (const auto& s : classes) listed += s;
  out.step("classes", classes == want, "classes " + listed);

  const auto fast = quotient_by_downset(l, e);
  const auto& up = *fast.projection.cod();
  auto at = [&](const char* s) { return *up.find(s); };
  const bool chain = up.size() == 3 && sl_leq(up, at("E"), at("C")) && sl_leq(up, at("C"), at("A")) &&
                     at("E") != at("C") && at("C") != at("A");
  out.step("order", chain, "quotient order A > C > E: " + yes(chain));
  return out;
}

inline ScenarioOutcome pentagon_ses_hsd(const ScenarioOptions& opt) {
  ScenarioOutcome out{"pentagon-ses-hsd"};
  if (opt.ses_depth < 1) {
    out.status = ScenarioOutcome::Status::skipped;
    return out;
  }
  const CmonContext c;
  const SesContext<CmonContext> s;
  const auto x = pentagon_or_chain(opt.corrupt_pentagon);
  const auto top = s.make_object(down(x, "D"));  // (A, D)
  const auto mc = s.subobject_over(top, down(x, "C"));
  const auto mb = s.subobject_over(top, down(x, "B"));
  const bool zero_subs = c.is_zero_object(c.dom(mc.src.sub)) && c.is_zero_object(c.dom(mb.src.sub));
  out.step("objects", zero_subs, "(C,0) and (B,0) have zero sub parts: " + yes(zero_subs));

  out.step("normal-mono", ses_is_normal_mono(s, mc), "(C,0) → (A,D) normal mono: " + yes(ses_is_normal_mono(s, mc)));

  const auto q_top = s.cokernel(mc);
  const auto a_over_c = c.cod(c.cokernel(down(x, "C")));
  const bool top_ok = c.same_object(s.base(q_top.dst), a_over_c) && c.is_iso(q_top.dst.sub);
  out.step("cokernel-top", top_ok, "(A,D)/(C,0) = (A/C, A/C): " + yes(top_ok));

  const auto i = s.factor_through_mono(mc, mb);
  if (!i) {
    out.step("cokernel-mid", false, "(C,0) does not factor through (B,0)");
    return out;
  }
  const auto q_mid = s.cokernel(*i);
  const auto b_over_c = c.cod(c.cokernel(subobject_comparison(c, down(x, "C"), down(x, "B"))));
  const bool mid_ok = c.same_object(s.base(q_mid.dst), b_over_c) && c.is_zero_object(c.dom(q_mid.dst.sub));
  out.step("cokernel-mid", mid_ok, "(B,0)/(C,0) = (B/C, 0): " + yes(mid_ok));

  const auto r = third_iso_check(s, top);
  const bool found = has_witness(r, {s.encode(mc), s.encode(mb)});
  out.step("third-iso", !r.pass && found,
           std::string("third iso on (A,D) ") + (r.pass ? "passes" : "fails") + ", triple " + (found ? "present" : "absent"));

  const auto g = s.factor_through_epi(s.compose(s.cokernel(mc), mb), q_mid);
  const auto diag = g ? s.diagnose_mono(*g) : SesMonoDiagnosis{};
  const bool localized = g && diag.alpha_normal_mono && diag.beta_normal_mono && !diag.left_square_pullback;
  out.step("localization", localized,
           "gamma comparison: alpha normal mono " + yes(diag.alpha_normal_mono) + ", beta normal mono " +
               yes(diag.beta_normal_mono) + ", left square pullback " + yes(diag.left_square_pullback));
  return out;
}

template <int K>
bool transfer_holds(const MonoidPtr& x) {
  const typename SesPower<CmonContext, K>::type ctx;
  for (const auto& o : ses_objects<K>(x))
    if (!ses_nsub_matches_base(ctx, o)) return false;
  return true;
}

inline ScenarioOutcome plane_diexact(const ScenarioOptions& opt) {
  ScenarioOutcome out{"plane-diexact"};
  if (opt.ses_depth < 1) {
    out.status = ScenarioOutcome::Status::skipped;
    return out;
  }
  const CmonContext c;
  const SesContext<CmonContext> s;
  const auto v = fixtures::v4();
  auto line = [&](const char* l) { return inclusion(v, Subset::of({0, by_label(v, l)})); };

  const auto base = diexact_check(c, v);
  out.step("depth0", base.pass, std::string("di-exact at depth 0: ") + yes(base.pass));

  const auto lat = enumerate_nsub(c, v);
  const auto mod = is_modular(lat.lattice);
  const auto dist = is_distributive(lat.lattice);
  const bool diamond = lat.size() == 5 && mod.holds && !dist.holds && dist.witness &&
                       dist.witness->kind == LatticeWitness::Kind::Diamond;
  out.step("diamond", diamond, "nsub(V4) modular " + yes(mod.holds) + ", distributive " + yes(dist.holds));

  const auto obj = s.make_object(line("g"));  // (V4, G)
  const auto mh = s.subobject_over(obj, line("h"));
  const auto mk = s.subobject_over(obj, line("k"));
  const auto r = diexact_check(s, obj);
  const bool found = has_witness(r, {s.encode(mk), s.encode(mh)}) || has_witness(r, {s.encode(mh), s.encode(mk)});
  out.step("depth1", !r.pass && found,
           std::string("di-exact on (V4,G): ") + yes(r.pass) + ", pair (H,0),(K,0) " + (found ? "present" : "absent"));

  const auto f = antinormal_map(s, mk, mh);
  const bool nm = is_normal_mono(s, f);
  out.step("not-normal-mono", !nm, "(K,0) → (V4,G)/(H,0) normal mono: " + yes(nm));

  bool dpn = true;
  for (const auto& o : ses_objects<1>(v)) dpn &= dpn_check(s, o).pass;
  out.step("dpn", dpn, "dpn on all ses objects over V4: " + yes(dpn));

  if (opt.ses_depth >= 2) {
    bool t = transfer_holds<2>(v) && transfer_holds<2>(fixtures::n5());
    if (opt.ses_depth >= 3) t = t && transfer_holds<3>(v) && transfer_holds<3>(fixtures::n5());
    out.step("transfer", t, "nsub of every ses object matches its base up to depth " + std::to_string(opt.ses_depth));
  }
  return out;
}

}  // namespace detail

inline std::vector<ScenarioOutcome> run_scenarios(const ScenarioOptions& opt = {}) {
  return {detail::pentagon_dpn(opt), detail::l6_quotient(), detail::pentagon_ses_hsd(opt), detail::plane_diexact(opt)};
}

}  // namespace homlat
