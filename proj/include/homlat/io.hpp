#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "homlat/homchecks.hpp"
#include "homlat/monoid.hpp"
#include "homlat/semilattice.hpp"

namespace homlat {

struct ParseError {
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string message;
  std::string describe() const { return (line ? "line " + std::to_string(line) + ": " : "") + message; }
};

enum class InputKind { monoid, semilattice };

struct ParsedInput {
  InputKind kind = InputKind::monoid;
  MonoidPtr monoid;
  std::vector<ParseError> errors;
  explicit operator bool() const { return monoid != nullptr; }
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream ls(raw);
    Line l{number, {}};
    for (std::string t; ls >> t;) l.tokens.push_back(t);
    out.push_back(std::move(l));
  }
  return out;
}

inline std::optional<std::size_t> to_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) return std::nullopt;
  return std::stoul(s);
}

/// Parses `label <i> <name>` into labels; false (with an error) on malformed lines.
inline bool parse_label(const Line& l, std::size_t n, std::vector<std::string>& labels,
                        std::vector<ParseError>& errors) {
  const auto i = l.tokens.size() == 3 ? to_index(l.tokens[1]) : std::nullopt;
  if (!i || *i >= n) {
    errors.push_back({l.number, "expected `label <i> <name>` with i < " + std::to_string(n)});
    return false;
  }
  labels[*i] = l.tokens[2];
  return true;
}

inline ParsedInput parse_monoid_lines(const std::vector<Line>& lines, std::size_t n, std::string name) {
  ParsedInput r;
  r.kind = InputKind::monoid;
  if (lines.size() < n + 1) {
    r.errors.push_back({lines[0].number, "expected " + std::to_string(n) + " table rows"});
    return r;
  }
  FinMonoid::Table table(n);
  std::vector<std::size_t> row_line(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& l = lines[1 + i];
    row_line[i] = l.number;
    if (l.tokens.size() != n) {
      r.errors.push_back({l.number, "row " + std::to_string(i) + " has " + std::to_string(l.tokens.size()) +
                                        " entries, expected " + std::to_string(n)});
      continue;
    }
    for (const auto& t : l.tokens) {
      const auto v = to_index(t);
      if (!v) {
        r.errors.push_back({l.number, "not an element index: `" + t + "`"});
        table[i].push_back(n);
      } else {
        table[i].push_back(*v);
      }
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t k = n + 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] != "label") {
      r.errors.push_back({l.number, "unexpected `" + l.tokens[0] + "`"});
      continue;
    }
    parse_label(l, n, labels, r.errors);
  }
  if (!r.errors.empty()) return r;
  auto v = FinMonoid::validate(table, labels, std::move(name));
  for (const auto& e : v.errors) {
    std::size_t at = 0;
    if (e.kind == MonoidError::Kind::OutOfRange || e.kind == MonoidError::Kind::NonAssociative ||
        e.kind == MonoidError::Kind::IdentityViolation)
      at = e.i < n ? row_line[e.i] : 0;
    r.errors.push_back({at, e.message()});
  }
  r.monoid = v.monoid;
  return r;
}

inline ParsedInput parse_semilattice_lines(const std::vector<Line>& lines, std::size_t n, std::string name) {
  ParsedInput r;
  r.kind = InputKind::semilattice;
  CoverGraph g;
  g.size = n;
  g.labels.assign(n, "");
  std::vector<std::size_t> cover_line;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens[0] == "cover") {
      const auto a = l.tokens.size() == 3 ? to_index(l.tokens[1]) : std::nullopt;
      const auto b = l.tokens.size() == 3 ? to_index(l.tokens[2]) : std::nullopt;
      if (!a || !b) {
        r.errors.push_back({l.number, "expected `cover <a> <b>`"});
        continue;
      }
      g.covers.emplace_back(*a, *b);
      cover_line.push_back(l.number);
    } else if (l.tokens[0] == "label") {
      parse_label(l, n, g.labels, r.errors);
    } else {
      r.errors.push_back({l.number, "unexpected `" + l.tokens[0] + "`"});
    }
  }
  if (!r.errors.empty()) return r;
  for (std::size_t i = 0; i < n; ++i)
    if (g.labels[i].empty()) g.labels[i] = std::to_string(i);
  try {
    r.monoid = semilattice_from_covers(g, std::move(name));
  } catch (const InvalidSemilattice& e) {
    std::size_t at = lines[0].number;
    const auto& err = e.error();
    for (std::size_t c = 0; c < g.covers.size(); ++c)
      if (g.covers[c] == std::pair<Elem, Elem>{err.a, err.b} &&
          (err.kind == SemilatticeError::Kind::NotHasse || err.kind == SemilatticeError::Kind::OutOfRange))
        at = cover_line[c];
    r.errors.push_back({at, err.message()});
  }
  return r;
}

}  // namespace detail

/// Parses either text format, chosen by the header keyword.
inline ParsedInput parse_text(const std::string& text, std::string name = {}) {
  const auto lines = detail::tokenize(text);
  ParsedInput r;
  if (lines.empty()) {
    r.errors.push_back({0, "empty input"});
    return r;
  }
  const auto& h = lines[0];
  const std::size_t n = h.tokens.size() == 2 ? detail::to_index(h.tokens[1]).value_or(0) : 0;
  const bool mono = h.tokens[0] == "monoid";
  const bool semi = h.tokens[0] == "semilattice" || h.tokens[0] == "lattice";
  if ((!mono && !semi) || n == 0) {
    r.errors.push_back({h.number, "expected header `monoid <n>` or `semilattice <n>` with n ≥ 1"});
    return r;
  }
  if (n > kMaxElements) {
    r.errors.push_back({h.number, "at most " + std::to_string(kMaxElements) + " elements supported"});
    return r;
  }
  return mono ? detail::parse_monoid_lines(lines, n, std::move(name))
              : detail::parse_semilattice_lines(lines, n, std::move(name));
}

inline ParsedInput parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return ParsedInput{InputKind::monoid, nullptr, {{0, "cannot open " + path}}};
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = path.substr(path.find_last_of('/') + 1);
  stem = stem.substr(0, stem.find('.'));
  return parse_text(ss.str(), stem);
}

namespace detail {
inline void append_labels(std::ostringstream& os, const FinMonoid& m) {
  for (Elem i = 0; i < m.size(); ++i)
    if (m.label(i) != std::to_string(i)) os << "label " << i << " " << m.label(i) << "\n";
}
}  // namespace detail

inline std::string format_monoid(const FinMonoid& m) {
  std::ostringstream os;
  os << "monoid " << m.size() << "\n";
  for (Elem i = 0; i < m.size(); ++i) {
    for (Elem j = 0; j < m.size(); ++j) os << (j ? " " : "") << m.op(i, j);
    os << "\n";
  }
  detail::append_labels(os, m);
  return os.str();
}

inline std::string format_semilattice(const FinMonoid& m) {
  require_semilattice(m);
  std::ostringstream os;
  os << "semilattice " << m.size() << "\n";
  for (auto [a, b] : semilattice_covers(m)) os << "cover " << a << " " << b << "\n";
  detail::append_labels(os, m);
  return os.str();
}

/// `lattice <n>` plus cover lines, with each element labelled by its code.
inline std::string format_lattice(const FiniteLattice& l, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "lattice " << l.size() << "\n";
  for (auto [a, b] : l.covers()) os << "cover " << a << " " << b << "\n";
  for (Elem i = 0; i < names.size(); ++i) os << "label " << i << " " << names[i] << "\n";
  return os.str();
}

inline std::string result_line(const CheckReport& r) {
  return "RESULT\tobject=" + r.object + "\tproperty=" + property_name(r.property) + "\tdepth=" +
         std::to_string(r.depth) + "\tstatus=" + (r.pass ? "pass" : "fail") + "\tcases=" + std::to_string(r.cases) +
         "\twitness=" + (r.witnesses.empty() ? std::string("-") : r.witnesses.front().encode());
}

/// `ses <ref> sub <subset>` at depth 1; deeper objects nest their base on
/// indented lines.
template <ZContext Ctx>
std::string format_ses_object(const Ctx& ctx, const typename Ctx::Object& s, const std::string& ref,
                              std::size_t indent = 0) {
  const std::string pad(indent, ' ');
  if constexpr (Ctx::depth == 0) {
    return pad + ref;
  } else if constexpr (Ctx::depth == 1) {
    return pad + "ses " + ref + " sub " + ctx.inner().encode(s.sub);
  } else {
    return pad + "ses\n" + format_ses_object(ctx.inner(), ctx.base(s), ref, indent + 2) + "\n" + pad + "sub " +
           ctx.inner().encode(s.sub);
  }
}

}  // namespace homlat
