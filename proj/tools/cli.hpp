#ifndef DERIVKIT_TOOLS_CLI_HPP_
#define DERIVKIT_TOOLS_CLI_HPP_

// Command-line front end: spec parsing, JSON/text serialization and the
// report | check | verify | export-groupoid | apply commands.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <derivkit/derivation.hpp>
#include <derivkit/groupoid.hpp>
#include <derivkit/oracle.hpp>

namespace derivkit::cli {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum ExitCode : int { ok = 0, spec_error = 2, size_limit = 3, verification_failure = 4 };

// ---------------------------------------------------------------------------
// Spec strings

inline std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::uint64_t parse_uint(const std::string& s, const std::string& what)
{
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw SpecError("expected a non-negative integer for " + what + ", got '" + s + "'");
  return v;
}

inline GroupSpec group_spec_from_json(const json& j);
inline RingSpec ring_spec_from_json(const json& j);

/// S3, symmetric:3, cyclic:4, C4, dihedral:3, products joined by '*', or an
/// inline JSON object.
inline GroupSpec parse_group_spec(const std::string& text)
{
  if (!text.empty() && text.front() == '{') {
    try {
      return group_spec_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw SpecError(std::string("invalid group JSON: ") + e.what());
    }
  }
  const auto parts = split(text, '*');
  if (parts.size() > 1) {
    ProductSpec p;
    for (const auto& part : parts)
      p.factors.push_back(parse_group_spec(part));
    return p;
  }
  const auto fields = split(text, ':');
  const auto& kind = fields[0];
  auto arg = [&](const std::string& what) {
    if (fields.size() != 2)
      throw SpecError("group spec '" + text + "' needs exactly one argument (" + what + ")");
    return parse_uint(fields[1], what);
  };
  if (kind == "symmetric")
    return SymmetricSpec{arg("n")};
  if (kind == "cyclic")
    return CyclicSpec{arg("m")};
  if (kind == "dihedral")
    return DihedralSpec{arg("n")};
  if (fields.size() == 1 && kind.size() > 1 && (kind[0] == 'S' || kind[0] == 'C')) {
    const auto n = parse_uint(kind.substr(1), "order parameter");
    if (kind[0] == 'S')
      return SymmetricSpec{n};
    return CyclicSpec{n};
  }
  throw SpecError("unknown group spec '" + text + "'");
}

/// Zm:4, Z4, GF:2:1, GF:p:k:c0,c1,...,ck (ascending coefficients), Integers,
/// products joined by '*', or an inline JSON object.
inline RingSpec parse_ring_spec(const std::string& text)
{
  if (!text.empty() && text.front() == '{') {
    try {
      return ring_spec_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw SpecError(std::string("invalid ring JSON: ") + e.what());
    }
  }
  const auto parts = split(text, '*');
  if (parts.size() > 1) {
    RingProductSpec p;
    for (const auto& part : parts)
      p.factors.push_back(parse_ring_spec(part));
    return p;
  }
  const auto fields = split(text, ':');
  const auto& kind = fields[0];
  if (kind == "Integers" || kind == "Z") {
    if (fields.size() != 1)
      throw SpecError("Integers takes no arguments");
    return IntegersSpec{};
  }
  if (kind == "Zm") {
    if (fields.size() != 2)
      throw SpecError("ring spec '" + text + "' must be Zm:m");
    return ZmSpec{parse_uint(fields[1], "m")};
  }
  if (kind == "GF") {
    if (fields.size() != 3 && fields.size() != 4)
      throw SpecError("ring spec '" + text + "' must be GF:p:k or GF:p:k:c0,...,ck");
    GFSpec s;
    s.p = static_cast<std::uint32_t>(parse_uint(fields[1], "p"));
    s.k = static_cast<std::uint32_t>(parse_uint(fields[2], "k"));
    if (fields.size() == 4)
      for (const auto& c : split(fields[3], ','))
        s.modulus.push_back(static_cast<std::uint32_t>(parse_uint(c, "modulus coefficient")));
    return s;
  }
  if (fields.size() == 1 && kind.size() > 1 && kind[0] == 'Z')
    return ZmSpec{parse_uint(kind.substr(1), "m")};
  throw SpecError("unknown ring spec '" + text + "'");
}

// ---------------------------------------------------------------------------
// Spec JSON

inline json group_spec_json(const GroupSpec& spec)
{
  struct Visitor
  {
    json operator()(const SymmetricSpec& s) const { return {{"kind", "symmetric"}, {"n", s.n}}; }
    json operator()(const CyclicSpec& s) const { return {{"kind", "cyclic"}, {"m", s.m}}; }
    json operator()(const DihedralSpec& s) const { return {{"kind", "dihedral"}, {"n", s.n}}; }
    json operator()(const TableSpec& s) const
    {
      json j = {{"kind", "table"}, {"rows", s.rows}};
      if (!s.names.empty())
        j["names"] = s.names;
      return j;
    }
    json operator()(const ProductSpec& s) const
    {
      json f = json::array();
      for (const auto& x : s.factors)
        f.push_back(group_spec_json(x));
      return {{"kind", "product"}, {"factors", f}};
    }
  };
  return std::visit(Visitor{}, spec);
}

inline GroupSpec group_spec_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("kind"))
    throw SpecError("group spec JSON needs a \"kind\" field");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "symmetric")
    return SymmetricSpec{j.at("n").get<std::size_t>()};
  if (kind == "cyclic")
    return CyclicSpec{j.at("m").get<std::size_t>()};
  if (kind == "dihedral")
    return DihedralSpec{j.at("n").get<std::size_t>()};
  if (kind == "table") {
    TableSpec s;
    s.rows = j.at("rows").get<std::vector<std::vector<Element>>>();
    if (j.contains("names"))
      s.names = j.at("names").get<std::vector<std::string>>();
    return s;
  }
  if (kind == "product") {
    ProductSpec s;
    for (const auto& f : j.at("factors"))
      s.factors.push_back(group_spec_from_json(f));
    return s;
  }
  throw SpecError("unknown group kind '" + kind + "'");
}

inline json ring_spec_json(const RingSpec& spec)
{
  struct Visitor
  {
    json operator()(const ZmSpec& s) const { return {{"kind", "Zm"}, {"m", s.m}}; }
    json operator()(const GFSpec& s) const
    {
      json j = {{"kind", "GF"}, {"p", s.p}, {"k", s.k}};
      if (!s.modulus.empty())
        j["modulus"] = s.modulus;
      return j;
    }
    json operator()(const IntegersSpec&) const { return {{"kind", "Integers"}}; }
    json operator()(const RingProductSpec& s) const
    {
      json f = json::array();
      for (const auto& x : s.factors)
        f.push_back(ring_spec_json(x));
      return {{"kind", "product"}, {"factors", f}};
    }
  };
  return std::visit(Visitor{}, spec);
}

inline RingSpec ring_spec_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("kind"))
    throw SpecError("ring spec JSON needs a \"kind\" field");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "Zm")
    return ZmSpec{j.at("m").get<std::uint64_t>()};
  if (kind == "GF") {
    GFSpec s;
    s.p = j.at("p").get<std::uint32_t>();
    s.k = j.at("k").get<std::uint32_t>();
    if (j.contains("modulus"))
      s.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return s;
  }
  if (kind == "Integers")
    return IntegersSpec{};
  if (kind == "product") {
    RingProductSpec s;
    for (const auto& f : j.at("factors"))
      s.factors.push_back(ring_spec_from_json(f));
    return s;
  }
  throw SpecError("unknown ring kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Report serialization

inline json names_of(const FiniteGroup& g, const std::vector<Element>& xs)
{
  json out = json::array();
  for (auto x : xs)
    out.push_back(g.name(x));
  return out;
}

inline json invariants_json(const std::vector<PrimaryInvariant>& inv)
{
  json out = json::array();
  for (const auto& i : inv)
    out.push_back({{"prime", i.prime}, {"exponent", i.exponent}});
  return out;
}

inline json order_json(const GroupOrder& o)
{
  json factored = json::object();
  for (auto [p, e] : o.factors())
    factored[std::to_string(p)] = e;
  json j = json::object();
  if (auto v = o.value())
    j["value"] = *v;
  else
    j["value"] = nullptr;
  j["factored"] = factored;
  j["text"] = o.to_string();
  return j;
}

/// matrix[h][g] = coefficient of h in d(g), as ring value codes.
inline json matrix_json(const Derivation& d)
{
  const auto n = static_cast<Element>(d.group().order());
  json rows = json::array();
  for (Element h = 0; h < n; ++h) {
    json row = json::array();
    for (Element g = 0; g < n; ++g)
      row.push_back(d.at(h, g));
    rows.push_back(row);
  }
  return rows;
}

inline json hom_json(const FiniteGroup& g, const HomAb& phi)
{
  json gens = json::array();
  const auto& comps = phi.domain()->components();
  for (std::size_t i = 0; i < comps.size(); ++i)
    gens.push_back({{"element", g.name(phi.domain()->lift(comps[i].generator))},
                    {"order", comps[i].order()},
                    {"image", phi.images()[i]}});
  json values = json::object();
  for (auto x : phi.domain_subgroup().elements())
    values[g.name(x)] = phi.evaluate(x);
  return {{"domain", names_of(g, phi.domain_subgroup().elements())}, {"generators", gens}, {"values", values}};
}

inline json criteria_json(const CriteriaRecord& c)
{
  json j = {{"paper_prime_criterion", c.paper_prime_criterion},
            {"exact_outer_trivial", c.exact_outer_trivial},
            {"gcd_sufficient", c.gcd_sufficient ? json(*c.gcd_sufficient) : json(nullptr)},
            {"ring_primes", c.ring_primes},
            {"abelianization_primes", c.abelianization_primes},
            {"conflict", c.conflict()}};
  return j;
}

inline std::string outer_label(const FiniteGroup& g, const OuterGenerator& o, std::size_t index)
{
  return "F(" + g.name(o.representative) + "#" + std::to_string(index) + ")";
}

inline json report_json(const DerivationReport& r, const GroupSpec& gspec, bool matrices)
{
  const auto& g = r.group;
  json j;
  j["schema_version"] = schema_version;
  j["kind"] = "derivation_report";
  j["group"] = {{"spec", group_spec_json(gspec)}, {"order", g.order()}, {"elements", g.names()}};
  j["ring"] = {{"spec", ring_spec_json(r.ring.spec())}, {"label", r.ring.label()}, {"size", r.ring.size()}};

  json classes = json::array();
  for (std::size_t c = 0; c < r.classes.count(); ++c) {
    const auto rep = r.classes.representative[c];
    classes.push_back({{"representative", g.name(rep)},
                       {"elements", names_of(g, r.classes.classes[c])},
                       {"centralizer", names_of(g, centralizer(g, rep).elements())},
                       {"hom_structure", invariants_json(r.centralizer_homs[c].structure)}});
  }
  j["classes"] = classes;
  j["representatives"] = names_of(g, r.classes.representative);
  j["inner_rank"] = r.inner_rank;

  json inner = json::array();
  for (const auto& i : r.inner_basis) {
    json e = {{"label", "ad(" + g.name(i.label) + ")"}, {"element", g.name(i.label)}};
    if (matrices)
      e["matrix"] = matrix_json(i.derivation);
    inner.push_back(e);
  }
  j["inner_basis"] = inner;

  json outer = json::array();
  json relations = json::array();
  for (std::size_t k = 0; k < r.out_generators.size(); ++k) {
    const auto& o = r.out_generators[k];
    const auto ord = ipow(o.order.prime, o.order.exponent);
    const auto label = outer_label(g, o, k);
    outer.push_back({{"label", label},
                     {"class_representative", g.name(o.representative)},
                     {"hom", hom_json(g, o.hom)},
                     {"order", ord},
                     {"invariant", {{"prime", o.order.prime}, {"exponent", o.order.exponent}}},
                     {"matrix", matrix_json(o.derivation)}});
    relations.push_back(std::to_string(ord) + "*(" + label + " + Inn) = Inn");
  }
  j["outer_generators"] = outer;
  j["relations"] = relations;

  const auto& ms = r.module_structure;
  j["module_structure"] = {{"inner_free_rank", ms.inner_free_rank},
                           {"ring_invariants", invariants_json(ms.ring_invariants)},
                           {"outer_invariants", invariants_json(ms.outer_invariants)},
                           {"cardinality", order_json(ms.cardinality())}};
  j["criteria"] = criteria_json(r.criteria);
  return j;
}

inline std::string invariants_text(const std::vector<PrimaryInvariant>& inv)
{
  if (inv.empty())
    return "0";
  std::string s;
  for (const auto& i : inv) {
    if (!s.empty())
      s += " + ";
    s += "Z" + std::to_string(ipow(i.prime, i.exponent));
  }
  return s;
}

inline std::string criteria_text(const CriteriaRecord& c)
{
  std::ostringstream out;
  out << "criteria:\n";
  out << "  prime-intersection criterion predicts inner only: " << (c.paper_prime_criterion ? "yes" : "no") << "\n";
  out << "  exact: all derivations inner: " << (c.exact_outer_trivial ? "yes" : "no") << "\n";
  out << "  gcd(ord(g), m) = 1 for all g: "
      << (c.gcd_sufficient ? (*c.gcd_sufficient ? "yes" : "no") : "n/a") << "\n";
  if (c.conflict())
    out << "  criterion-conflict: the prime-intersection criterion disagrees with the exact computation\n";
  return out.str();
}

inline std::string report_text(const DerivationReport& r, bool matrices)
{
  const auto& g = r.group;
  std::ostringstream out;
  out << "Der(" << r.ring.label() << "[G]), |G| = " << g.order() << "\n";
  out << "classes: " << r.classes.count() << ", representatives:";
  for (auto rep : r.classes.representative)
    out << " " << g.name(rep);
  out << "\n";
  out << "inner rank: " << r.inner_rank << " (basis:";
  for (const auto& i : r.inner_basis)
    out << " ad(" << g.name(i.label) << ")";
  out << ")\n";
  out << "outer generators: " << r.out_generators.size() << "\n";
  for (std::size_t k = 0; k < r.out_generators.size(); ++k) {
    const auto& o = r.out_generators[k];
    out << "  " << outer_label(g, o, k) << " on Z(" << g.name(o.representative)
        << "), order " << ipow(o.order.prime, o.order.exponent) << ", phi:";
    for (auto x : o.hom.domain_subgroup().elements())
      out << " " << g.name(x) << "->" << r.ring.format(o.hom.evaluate(x));
    out << "\n";
    if (matrices)
      for (Element h = 0; h < g.order(); ++h) {
        out << "   ";
        for (Element x = 0; x < g.order(); ++x)
          out << " " << r.ring.format(o.derivation.at(h, x));
        out << "\n";
      }
  }
  const auto& ms = r.module_structure;
  out << "Der = " << r.ring.label() << "^" << ms.inner_free_rank << " + (" << invariants_text(ms.outer_invariants)
      << "), |Der| = " << ms.cardinality().to_string() << "\n";
  out << criteria_text(r.criteria);
  return out.str();
}

inline json verdict_json(const Verdict& v, const SolutionModule& sol, const CriteriaRecord& c)
{
  auto check = [](const CheckResult& r) { return json{{"passed", r.passed}, {"detail", r.detail}}; };
  return {{"schema_version", schema_version},
          {"kind", "verdict"},
          {"passed", v.passed()},
          {"checks",
           {{"cardinality", check(v.cardinality)},
            {"report_in_span", check(v.report_in_span)},
            {"solution_decomposes", check(v.solution_decomposes)},
            {"inner_matches_loops", check(v.inner_matches_loops)}}},
          {"oracle",
           {{"unknowns", sol.unknown_count},
            {"invariants", invariants_json(sol.sorted_invariants())},
            {"cardinality", order_json(sol.cardinality)}}},
          {"criteria", criteria_json(c)}};
}

inline std::string verdict_text(const Verdict& v, const SolutionModule& sol, const CriteriaRecord& c)
{
  std::ostringstream out;
  auto line = [&](const char* name, const CheckResult& r) {
    out << (r.passed ? "PASS " : "FAIL ") << name << ": " << r.detail << "\n";
  };
  line("(a) cardinality", v.cardinality);
  line("(b) report generators in oracle span", v.report_in_span);
  line("(c) oracle generators decompose", v.solution_decomposes);
  line("(d) inner part equals trivial-on-loops part", v.inner_matches_loops);
  out << "oracle: " << invariants_text(sol.sorted_invariants()) << ", cardinality " << sol.cardinality.to_string()
      << "\n";
  if (c.conflict())
    out << "note: criterion-conflict (prime-intersection criterion says inner only: "
        << (c.paper_prime_criterion ? "yes" : "no") << ", exact: " << (c.exact_outer_trivial ? "yes" : "no") << ")\n";
  out << (v.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// apply

/// "2*(12) + e + 3*(123)": '+'-separated terms, each an optional integer
/// coefficient followed by '*' and an element name.
inline GroupRingElement parse_element(const FiniteGroup& g, const FiniteRing& a, const std::string& text)
{
  GroupRingElement out(g, a);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  };
  for (auto term : split(text, '+')) {
    term = trim(term);
    if (term.empty())
      throw SpecError("empty term in element '" + text + "'");
    std::int64_t coeff = 1;
    std::string name = term;
    const auto star = term.find('*');
    if (star != std::string::npos) {
      const auto c = trim(term.substr(0, star));
      name = trim(term.substr(star + 1));
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (c.empty() || ec != std::errc{} || ptr != c.data() + c.size())
        throw SpecError("bad coefficient '" + c + "'");
      coeff = v;
    }
    const auto x = g.find(name);
    out.set(x, a.add(out[x], a.from_integer(coeff)));
  }
  return out;
}

/// ad:NAME, outer:REP:INDEX (INDEX-th generator of Hom(Z(REP), A)) or
/// central:Z:INDEX (INDEX-th generator of Hom(G, A)).
inline Derivation parse_derivation(const FiniteGroup& g, const FiniteRing& a, const std::string& text)
{
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw SpecError("derivation must be ad:NAME, outer:REP:INDEX or central:Z:INDEX");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "ad")
    return ad(g, a, g.find(rest));
  const auto last = rest.rfind(':');
  if (last == std::string::npos)
    throw SpecError("derivation '" + text + "' needs an index");
  const auto elem = g.find(rest.substr(0, last));
  const auto index = parse_uint(rest.substr(last + 1), "generator index");
  if (kind == "outer") {
    const auto homs = hom_group(centralizer(g, elem), a);
    if (index >= homs.generators.size())
      throw SpecError("Hom(Z(" + g.name(elem) + "), A) has " + std::to_string(homs.generators.size()) +
                      " generators");
    return outer_generator(g, elem, homs.generators[index]);
  }
  if (kind == "central") {
    const auto homs = hom_group(g, a);
    if (index >= homs.generators.size())
      throw SpecError("Hom(G, A) has " + std::to_string(homs.generators.size()) + " generators");
    try {
      return central_derivation(g, elem, homs.generators[index]);
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
  }
  throw SpecError("unknown derivation kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Driver

struct Limits
{
  std::size_t group = default_group_limit;
  std::size_t ring = default_ring_limit;
  std::size_t oracle_group = oracle_group_limit;
  std::size_t oracle_ring = oracle_ring_limit;
};

/// Runs one invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Derivations of group rings A[G] for finite G and finite commutative A", "derivkit"};
  app.require_subcommand(1);

  std::string group_text, ring_text, derivation_text, element_text;
  bool as_text = false, as_json = false, matrices = false, loops = false;
  std::optional<std::size_t> limit;

  auto add_common = [&](CLI::App* sub, bool needs_ring) {
    sub->add_option("--group", group_text, "group spec: S3, symmetric:n, cyclic:m, dihedral:n, A*B or JSON")
        ->required();
    if (needs_ring)
      sub->add_option("--ring", ring_text, "ring spec: Zm:m, Z4, GF:p:k[:c0,...,ck], Integers, A*B or JSON")
          ->required();
    auto* fmt = sub->add_option_group("format");
    fmt->add_flag("--json", as_json, "JSON output (default)");
    fmt->add_flag("--text", as_text, "plain text output");
    fmt->require_option(0, 1);
    sub->add_option("--limit", limit, "override the size caps");
  };

  auto* report = app.add_subcommand("report", "derivation module report");
  add_common(report, true);
  report->add_flag("--matrices", matrices, "include inner basis matrices");
  auto* check = app.add_subcommand("check", "criteria for Der = Inn");
  add_common(check, true);
  auto* verify = app.add_subcommand("verify", "cross-check the report against the brute-force solver");
  add_common(verify, true);
  auto* dot = app.add_subcommand("export-groupoid", "groupoid of the adjoint action as DOT");
  dot->add_option("--group", group_text, "group spec")->required();
  dot->add_flag("--loops", loops, "include loops");
  dot->add_option("--limit", limit, "override the size caps");
  auto* apply_cmd = app.add_subcommand("apply", "apply a derivation to a group ring element");
  add_common(apply_cmd, true);
  apply_cmd->add_option("--derivation", derivation_text, "ad:NAME | outer:REP:INDEX | central:Z:INDEX")->required();
  apply_cmd->add_option("--element", element_text, "e.g. 2*(12) + e")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return ok;
    }
    err << "error: " << e.what() << "\n";
    return spec_error;
  }

  Limits lim;
  if (limit)
    lim = {*limit, *limit, *limit, *limit};

  try {
    const auto gspec = parse_group_spec(group_text);
    const auto group = construct_group(gspec, lim.group);

    if (dot->parsed()) {
      out << groupoid_dot(group, loops);
      return ok;
    }

    const auto rspec = parse_ring_spec(ring_text);
    if (std::holds_alternative<IntegersSpec>(rspec)) {
      if (!check->parsed())
        throw SpecError("Integers is only supported by the check command");
      const auto c = outer_vanishing_check(group, IntegersTag{});
      if (as_text)
        out << criteria_text(c);
      else {
        json j = {{"schema_version", schema_version}, {"kind", "criteria"}, {"group", group_spec_json(gspec)},
                  {"ring", ring_spec_json(rspec)}};
        j["criteria"] = criteria_json(c);
        out << j.dump(2) << "\n";
      }
      return ok;
    }
    const auto ring = construct_ring(rspec, lim.ring);

    if (report->parsed()) {
      const auto r = derivation_module_report(group, ring);
      if (as_text)
        out << report_text(r, matrices);
      else
        out << report_json(r, gspec, matrices).dump(2) << "\n";
      return ok;
    }
    if (check->parsed()) {
      const auto c = outer_vanishing_check(group, ring);
      if (as_text)
        out << criteria_text(c);
      else {
        json j = {{"schema_version", schema_version}, {"kind", "criteria"}, {"group", group_spec_json(gspec)},
                  {"ring", ring_spec_json(rspec)}};
        j["criteria"] = criteria_json(c);
        out << j.dump(2) << "\n";
      }
      return ok;
    }
    if (verify->parsed()) {
      SolveOptions opts;
      opts.group_limit = lim.oracle_group;
      opts.ring_limit = lim.oracle_ring;
      const auto sol = solve_all_derivations(group, ring, opts);
      const auto r = derivation_module_report(group, ring);
      const auto v = compare(r, sol);
      if (as_text)
        out << verdict_text(v, sol, r.criteria);
      else
        out << verdict_json(v, sol, r.criteria).dump(2) << "\n";
      return v.passed() ? ok : verification_failure;
    }
    if (apply_cmd->parsed()) {
      const auto d = parse_derivation(group, ring, derivation_text);
      const auto x = parse_element(group, ring, element_text);
      const auto y = apply(d, x);
      if (as_text)
        out << y.format() << "\n";
      else {
        json j = {{"schema_version", schema_version}, {"kind", "apply"},  {"derivation", derivation_text},
                  {"input", x.format()},              {"result", y.format()}, {"coefficients", y.coeffs()}};
        out << j.dump(2) << "\n";
      }
      return ok;
    }
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return size_limit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return spec_error;
  }
  return ok;
}

} // namespace derivkit::cli

#endif // DERIVKIT_TOOLS_CLI_HPP_
