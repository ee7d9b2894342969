#include <atomic>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "homlat/homlat.hpp"

using namespace homlat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitInput = 2;

struct Globals {
  std::string format = "text";
  unsigned jobs = 1;
  bool tsv() const { return format == "tsv"; }
};

/// Runs f(0..n-1) on up to `jobs` threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F f) {
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Loaded {
  MonoidPtr monoid;
  InputKind kind;
};

std::optional<Loaded> load(const std::string& arg) {
  if (auto m = fixtures::by_name(arg))
    return Loaded{*m, is_monoidal_semilattice(**m) ? InputKind::semilattice : InputKind::monoid};
  auto p = parse_file(arg);
  if (!p) {
    for (const auto& e : p.errors) std::cerr << arg << ": " << e.describe() << "\n";
    return std::nullopt;
  }
  return Loaded{p.monoid, p.kind};
}

int cmd_validate(const Globals&, const std::string& path) {
  auto in = load(path);
  if (!in) return kExitInput;
  std::cout << (in->kind == InputKind::semilattice ? format_semilattice(*in->monoid) : format_monoid(*in->monoid));
  return kExitOk;
}

int cmd_nsub(const Globals& g, const std::string& path) {
  auto in = load(path);
  if (!in) return kExitInput;
  const CmonContext c;
  const auto l = enumerate_nsub(c, in->monoid);
  if (g.tsv()) {
    for (Elem i = 0; i < l.size(); ++i) std::cout << "NSUB\tindex=" << i << "\tsubobject=" << l.codes[i] << "\n";
    for (auto [a, b] : l.lattice.covers()) std::cout << "COVER\t" << a << "\t" << b << "\n";
  } else {
    std::cout << format_lattice(l.lattice, l.codes);
  }
  return kExitOk;
}

void print_report(const Globals& g, const CheckReport& r) {
  if (g.tsv()) {
    std::cout << result_line(r) << "\n";
    return;
  }
  std::cout << property_name(r.property) << " " << r.object << " depth " << r.depth << ": "
            << (r.pass ? "pass" : "FAIL") << " (" << r.cases << " cases";
  if (r.skipped) std::cout << ", " << r.skipped << " skipped";
  std::cout << ")\n";
  for (const auto& w : r.witnesses) std::cout << "  witness " << w.encode() << "  " << w.condition << "\n";
}

template <int K>
std::vector<CheckReport> check_at_depth(const MonoidPtr& x, Property p, unsigned jobs) {
  const typename SesPower<CmonContext, K>::type ctx;
  const auto objects = ses_objects<K>(x);
  return parallel_map<CheckReport>(objects.size(), jobs, [&](std::size_t i) { return run_check(ctx, objects[i], p); });
}

int cmd_check(const Globals& g, const std::string& path, const std::string& prop, int depth) {
  auto in = load(path);
  if (!in) return kExitInput;
  const auto p = parse_property(prop);
  if (!p) {
    std::cerr << "unknown property " << prop << "\n";
    return kExitInput;
  }
  if ((*p == Property::stability) && depth != 0) {
    std::cerr << "stability is checked on finite commutative monoids only (depth 0)\n";
    return kExitInput;
  }
  std::vector<CheckReport> reports;
  try {
    switch (depth) {
      case 0: reports = check_at_depth<0>(in->monoid, *p, g.jobs); break;
      case 1: reports = check_at_depth<1>(in->monoid, *p, g.jobs); break;
      case 2: reports = check_at_depth<2>(in->monoid, *p, g.jobs); break;
      case 3: reports = check_at_depth<3>(in->monoid, *p, g.jobs); break;
      default: std::cerr << "ses depth must be 0..3\n"; return kExitInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "check aborted: " << e.what() << "\n";
    return kExitFailures;
  }
  bool all = true;
  for (const auto& r : reports) {
    print_report(g, r);
    all &= r.pass;
  }
  return all ? kExitOk : kExitFailures;
}

int cmd_enumerate(const Globals& g, std::size_t max_size, const std::string& filter) {
  struct Row {
    std::string id;
    std::size_t size;
    bool modular, distributive, hsd, diexact;
    std::string covers;
  };
  const CmonContext c;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto shapes = enumerate_lattices(n);
    auto rows = parallel_map<Row>(shapes.size(), g.jobs, [&](std::size_t i) {
      const auto id = "L" + std::to_string(n) + "_" + std::to_string(i + 1);
      const auto m = shapes[i].monoid(id);
      const auto lat = shapes[i].lattice();
      std::string covers;
      for (auto [a, b] : shapes[i].covers()) covers += (covers.empty() ? "" : ",") + std::to_string(a) + "<" + std::to_string(b);
      return Row{id,
                 n,
                 is_modular(lat).holds,
                 is_distributive(lat).holds,
                 third_iso_check(c, m).pass,
                 diexact_check(c, m).pass,
                 covers};
    });
    std::size_t listed = 0;
    for (const auto& r : rows) {
      if (filter == "nonmodular" && r.modular) continue;
      if (filter == "nondistributive" && r.distributive) continue;
      ++listed;
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      auto pf = [](bool b) { return b ? "pass" : "fail"; };
      if (g.tsv())
        std::cout << "LATTICE\tid=" << r.id << "\tsize=" << r.size << "\tmodular=" << yn(r.modular)
                  << "\tdistributive=" << yn(r.distributive) << "\thsd=" << pf(r.hsd) << "\tdiexact=" << pf(r.diexact)
                  << "\tcovers=" << (r.covers.empty() ? "-" : r.covers) << "\n";
      else
        std::cout << r.id << "  modular=" << yn(r.modular) << " distributive=" << yn(r.distributive)
                  << " hsd=" << pf(r.hsd) << " diexact=" << pf(r.diexact) << "  covers " << (r.covers.empty() ? "-" : r.covers)
                  << "\n";
    }
    if (g.tsv())
      std::cout << "COUNT\tsize=" << n << "\tlattices=" << rows.size() << "\tlisted=" << listed << "\n";
    else
      std::cout << "size " << n << ": " << rows.size() << " lattices, " << listed << " listed\n";
  }
  return kExitOk;
}

int cmd_scenarios(const Globals& g, const ScenarioOptions& opt) {
  std::vector<ScenarioOutcome> out;
  try {
    out = run_scenarios(opt);
  } catch (const std::exception& e) {
    std::cerr << "scenario run aborted: " << e.what() << "\n";
    return kExitFailures;
  }
  std::size_t reproduced = 0;
  for (const auto& s : out) {
    reproduced += s.status == ScenarioOutcome::Status::reproduced;
    if (g.tsv()) {
      for (const auto& st : s.steps)
        std::cout << "STEP\tscenario=" << s.name << "\tstep=" << st.name << "\tstatus=" << (st.ok ? "ok" : "mismatch")
                  << "\tdetail=" << st.detail << "\n";
      std::cout << "SCENARIO\tname=" << s.name << "\tstatus=" << status_name(s.status) << "\n";
    } else {
      std::cout << s.name << ": " << status_name(s.status);
      if (const auto* d = s.divergent()) std::cout << " at step " << d->name;
      std::cout << "\n";
      for (const auto& st : s.steps) std::cout << "  [" << (st.ok ? "ok" : "MISMATCH") << "] " << st.name << ": " << st.detail << "\n";
    }
  }
  std::cout << (g.tsv() ? "SUMMARY\treproduced=" : "") << reproduced << "/" << out.size()
            << (g.tsv() ? "\n" : " reproduced\n");
  return reproduced == out.size() ? kExitOk : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homlat: kernels, cokernels and normal-subobject lattices of finite commutative monoids"};
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.require_subcommand(1);
  app.fallthrough();

  std::string path;
  auto* validate = app.add_subcommand("validate", "Parse and echo the canonical form");
  validate->add_option("file", path, "Input file or fixture name")->required();

  auto* nsub = app.add_subcommand("nsub", "Print the lattice of normal submonoids");
  nsub->add_option("file", path, "Input file or fixture name")->required();

  std::string property;
  int depth = 0;
  auto* check = app.add_subcommand("check", "Run a property check on an object and its ses objects");
  check->add_option("--property", property, "hsd|secondiso|dpn|diexact|modular|distributive|stability")
      ->required()
      ->check(CLI::IsMember({"hsd", "secondiso", "dpn", "diexact", "modular", "distributive", "stability"}));
  check->add_option("--ses-depth", depth, "Lift through ses this many times (0..3)")->check(CLI::Range(0, 3));
  check->add_option("file", path, "Input file or fixture name")->required();

  std::size_t max_size = 8;
  std::string filter;
  auto* enumerate = app.add_subcommand("enumerate", "List all lattices up to a size, classified");
  enumerate->add_option("--max-size", max_size, "Largest size (1..10)")->required()->check(CLI::Range(1, 10));
  enumerate->add_option("--filter", filter, "nonmodular|nondistributive")
      ->check(CLI::IsMember({"nonmodular", "nondistributive"}));

  ScenarioOptions opt;
  auto* examples = app.add_subcommand("paper-examples", "Reproduce the four worked scenarios");
  examples->add_flag("--corrupt-pentagon", opt.corrupt_pentagon, "Test mode: replace N5 by a 5-chain");
  examples->add_option("--ses-depth", opt.ses_depth, "Depth for the ses scenarios (0 skips them)")
      ->check(CLI::Range(0, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*validate) return cmd_validate(g, path);
  if (*nsub) return cmd_nsub(g, path);
  if (*check) return cmd_check(g, path, property, depth);
  if (*enumerate) return cmd_enumerate(g, max_size, filter);
  if (*examples) return cmd_scenarios(g, opt);
  return kExitInput;
}
