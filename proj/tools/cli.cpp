#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include "monocurve/curve_families.hpp"
#include "monocurve/derivations.hpp"
#include "monocurve/errors.hpp"
#include "monocurve/poly_io.hpp"
#include "monocurve/resolution.hpp"
#include "monocurve/toric_ideal.hpp"

namespace monocurve::cli {
namespace {

using Json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

struct Guards {
  std::size_t max_vars = 6;
  std::int64_t max_conductor = 10'000;
  std::size_t max_gb = 5000;
};

struct OrderSpec {
  std::string kind;
  std::vector<std::size_t> perm;
  std::vector<std::int64_t> weights;

  // Weighted orders default to the curve weights when a curve is present.
  MonomialOrder build(std::size_t n,
                      std::span<const std::int64_t> curve_weights = {}) const {
    auto p = perm.empty() ? identity_permutation(n) : perm;
    if (p.size() != n) {
      throw ValidationError("--perm must list all " + std::to_string(n) +
                            " variables");
    }
    if (kind == "lex") return MonomialOrder::lex(p);
    if (kind == "grlex") return MonomialOrder::graded_lex(p);
    if (kind == "grevlex") return MonomialOrder::graded_revlex(p);
    if (kind == "weighted") {
      std::vector<std::int64_t> w = weights;
      if (w.empty()) w.assign(curve_weights.begin(), curve_weights.end());
      if (w.empty()) throw ValidationError("--order weighted needs --weights");
      return MonomialOrder::weighted(p, w);
    }
    throw ValidationError("unknown order '" + kind + "'");
  }
};

struct Options {
  std::string format = "json";
  Guards guards;
  OrderSpec order;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json with_version(Json body) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? " " : "") + std::to_string(v[i]);
  }
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? " " : "") + std::to_string(v[i]);
  }
  return s;
}

MonomialCurve checked_curve(const std::vector<std::int64_t>& gens,
                            const Guards& g) {
  if (gens.size() > g.max_vars) {
    throw GuardViolation(std::to_string(gens.size()) +
                         " variables, limit is --max-vars " +
                         std::to_string(g.max_vars));
  }
  MonomialCurve curve(gens);
  if (curve.semigroup().conductor() > g.max_conductor) {
    throw GuardViolation("conductor " +
                         std::to_string(curve.semigroup().conductor()) +
                         ", limit is --max-conductor " +
                         std::to_string(g.max_conductor));
  }
  return curve;
}

NumericalSemigroup checked_semigroup(const std::vector<std::int64_t>& gens,
                                     const Guards& g) {
  NumericalSemigroup s(gens);
  if (s.conductor() > g.max_conductor) {
    throw GuardViolation("conductor " + std::to_string(s.conductor()) +
                         ", limit is --max-conductor " +
                         std::to_string(g.max_conductor));
  }
  return s;
}

// Leading term first under the given order.
std::vector<std::string> strings(const std::vector<Polynomial>& ps,
                                 const VariableNames& names,
                                 const MonomialOrder& order) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p, names, order));
  return out;
}

// "lo:hi" or a single value.
std::vector<std::int64_t> parse_range(const std::string& text) {
  std::smatch m;
  static const std::regex range(R"(\s*(-?\d+)\s*(?::\s*(-?\d+)\s*)?)");
  if (!std::regex_match(text, m, range)) {
    throw ValidationError("bad range '" + text + "', expected lo:hi");
  }
  auto lo = std::stoll(m[1]);
  auto hi = m[2].matched ? std::stoll(m[2]) : lo;
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

// Number of variables used by names of the form x<digits>.
std::size_t infer_variables(const std::vector<std::string>& polys) {
  static const std::regex var(R"(x(\d+))");
  std::size_t n = 0;
  for (const auto& p : polys) {
    for (auto it = std::sregex_iterator(p.begin(), p.end(), var);
         it != std::sregex_iterator(); ++it) {
      n = std::max<std::size_t>(n, std::stoul((*it)[1]) + 1);
    }
  }
  return std::max<std::size_t>(n, 1);
}

// ---------------------------------------------------------------------------

void cmd_semigroup(const Options& o, const std::vector<std::int64_t>& gens,
                   std::ostream& out) {
  auto s = checked_semigroup(gens, o.guards);
  auto inv = s.invariants();
  auto apery = s.apery_set(s.multiplicity());
  if (o.format == "text") {
    out << "generators: " << join(s.minimal_generators()) << '\n'
        << "m: " << inv.multiplicity << '\n'
        << "e: " << inv.embedding_dimension << '\n'
        << "F: " << inv.frobenius << '\n'
        << "c: " << inv.conductor << '\n'
        << "genus: " << inv.genus << '\n'
        << "symmetric: " << (s.is_symmetric() ? "true" : "false") << '\n'
        << "gaps: " << join(s.gaps()) << '\n'
        << "apery(" << apery.base << "): " << join(apery.elements) << '\n';
    return;
  }
  Json j;
  j["generators"] = s.minimal_generators();
  j["m"] = inv.multiplicity;
  j["e"] = inv.embedding_dimension;
  j["F"] = inv.frobenius;
  j["c"] = inv.conductor;
  j["genus"] = inv.genus;
  j["symmetric"] = s.is_symmetric();
  j["gaps"] = s.gaps();
  j["apery"] = {{"base", apery.base}, {"elements", apery.elements}};
  emit(out, with_version(j));
}

void cmd_ideal(const Options& o, const std::vector<std::int64_t>& gens,
               std::ostream& out) {
  auto curve = checked_curve(gens, o.guards);
  auto names = default_variable_names(curve.num_variables());
  auto gb = reduce_basis(defining_ideal_basis(curve, o.guards.max_gb));
  auto pres = minimal_generators(defining_ideal(curve, o.guards.max_gb));
  if (o.format == "text") {
    out << "order: " << gb.order().describe() << '\n' << "groebner basis:\n";
    for (const auto& g : gb.generators()) {
      out << "  " << to_string(g, names, gb.order()) << '\n';
    }
    out << "minimal generators (beta1 = " << *pres.beta1 << "):\n";
    for (const auto& g : pres.generators) {
      out << "  " << to_string(g, names, pres.order) << '\n';
    }
    return;
  }
  Json j;
  j["exponents"] = curve.exponents();
  j["order"] = gb.order().describe();
  j["groebner_basis"] = strings(gb.generators(), names, gb.order());
  j["minimal_generators"] = strings(pres.generators, names, pres.order);
  j["beta1"] = *pres.beta1;
  j["eta_ok"] = eta_check(gb.generators(), curve);
  emit(out, with_version(j));
}

void cmd_groebner(const Options& o, const std::vector<std::string>& polys,
                  std::size_t nvars, std::ostream& out) {
  if (polys.empty()) throw ValidationError("groebner needs at least one --poly");
  if (nvars == 0) nvars = infer_variables(polys);
  if (nvars > o.guards.max_vars) {
    throw GuardViolation(std::to_string(nvars) +
                         " variables, limit is --max-vars " +
                         std::to_string(o.guards.max_vars));
  }
  auto names = default_variable_names(nvars);
  std::vector<Polynomial> gens;
  for (const auto& p : polys) {
    auto f = parse_polynomial(p, names);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  if (gens.empty()) throw ValidationError("all input polynomials are zero");
  auto order = o.order.build(nvars);
  BuchbergerOptions opts;
  opts.max_basis_size = o.guards.max_gb;
  bool input_is_gb = is_groebner_basis(gens, order);
  auto gb = reduce_basis(buchberger(gens, order, opts));
  if (o.format == "text") {
    out << "order: " << order.describe() << '\n'
        << "input is a Groebner basis: " << (input_is_gb ? "yes" : "no") << '\n'
        << "reduced basis:\n";
    for (const auto& g : gb.generators()) {
      out << "  " << to_string(g, names, order) << '\n';
    }
    return;
  }
  Json j;
  j["variables"] = names;
  j["order"] = order.describe();
  j["input_is_groebner"] = input_is_gb;
  j["reduced_basis"] = strings(gb.generators(), names, order);
  emit(out, with_version(j));
}

void cmd_resolution(const Options& o, const std::vector<std::int64_t>& gens,
                    bool nonminimal, std::ostream& out) {
  auto curve = checked_curve(gens, o.guards);
  auto names = default_variable_names(curve.num_variables());
  auto res = free_resolution(defining_ideal_basis(curve, o.guards.max_gb),
                             curve.weights());
  if (!nonminimal) res = minimalize(std::move(res));
  out << (o.format == "text" ? resolution_to_text(res, names)
                             : resolution_to_json(res, names));
  if (o.format == "json") out << '\n';
}

void cmd_betti(const Options& o, const std::vector<std::int64_t>& gens,
               bool order_given, std::ostream& out) {
  auto curve = checked_curve(gens, o.guards);
  auto betti = order_given
                   ? betti_numbers(curve,
                                   o.order.build(curve.num_variables(),
                                                 curve.weights()),
                                   o.guards.max_gb)
                   : betti_numbers(curve, o.guards.max_gb);
  if (o.format == "text") {
    out << join(betti) << '\n';
    return;
  }
  Json j;
  j["exponents"] = curve.exponents();
  j["betti"] = betti;
  emit(out, with_version(j));
}

void cmd_bresinsky(const Options& o, const std::vector<std::int64_t>& q2s,
                   bool verify, std::ostream& out) {
  Json rows = Json::array();
  auto names = default_variable_names(4);
  for (auto q2 : q2s) {
    auto inst = bresinsky_sequence(q2);
    checked_curve(inst.n, o.guards);
    auto s = bresinsky_generators(inst);
    Json j;
    j["q2"] = inst.q2;
    j["q1"] = inst.q1;
    j["d1"] = inst.d1;
    j["n"] = inst.n;
    j["expected_beta"] = bresinsky_expected_betti(q2);
    j["generators"] = strings(s, names, bresinsky_order());
    if (verify) {
      auto report = verify_bresinsky(inst);
      j["beta"] = report.betti;
      j["gb"] = report.is_gb;
      j["generates"] = report.generates;
      j["betti_match"] = report.betti_match;
    }
    rows.push_back(j);
  }
  if (o.format == "text") {
    for (const auto& j : rows) {
      out << "q2=" << j["q2"] << " n=" << j["n"].dump()
          << " expected_beta=" << j["expected_beta"].dump();
      if (verify) {
        out << " beta=" << j["beta"].dump() << " gb=" << j["gb"]
            << " generates=" << j["generates"];
      }
      out << '\n';
    }
    return;
  }
  if (rows.size() == 1) {
    emit(out, with_version(rows[0]));
  } else {
    emit(out, with_version(Json{{"instances", rows}}));
  }
}

void cmd_concat_sweep(const Options& o, const std::string& a,
                      const std::string& d, const std::string& b,
                      const std::string& p, std::size_t jobs,
                      std::ostream& out) {
  std::vector<ConcatenationParams> grid;
  for (auto pv : parse_range(p)) {
    for (auto av : parse_range(a)) {
      for (auto dv : parse_range(d)) {
        for (auto bv : parse_range(b)) grid.push_back({av, dv, bv, pv});
      }
    }
  }
  if (grid.size() > 100'000) {
    throw GuardViolation("sweep grid has " + std::to_string(grid.size()) +
                         " rows");
  }
  auto rows = concatenation_sweep(grid, jobs, o.guards.max_gb);
  out << (o.format == "text" ? sweep_to_table(rows) : sweep_to_json_lines(rows));
}

void cmd_derivations(const Options& o, const std::vector<std::int64_t>& gens,
                     std::ostream& out) {
  auto s = checked_semigroup(gens, o.guards);
  auto k = derivation_rank(s);
  if (o.format == "text") {
    out << "delta_prime: " << join(k.delta_prime) << '\n'
        << "mu: " << k.mu << '\n'
        << "generators: ";
    for (std::size_t i = 0; i < k.generator_exponents.size(); ++i) {
      out << (i ? ", " : "") << "t^" << k.generator_exponents[i] << " d/dt";
    }
    out << '\n';
    return;
  }
  Json j;
  j["generators"] = s.minimal_generators();
  j["delta_prime"] = k.delta_prime;
  j["mu"] = k.mu;
  j["generator_exponents"] = k.generator_exponents;
  emit(out, with_version(j));
}

void cmd_homogenize(const Options& o, const std::vector<std::int64_t>& gens,
                    const std::vector<std::string>& polys, std::size_t nvars,
                    const std::string& homvar, std::ostream& out) {
  std::vector<Polynomial> input;
  VariableNames names;
  if (!gens.empty()) {
    auto curve = checked_curve(gens, o.guards);
    nvars = curve.num_variables();
    names = default_variable_names(nvars);
    input = defining_ideal_basis(curve, o.guards.max_gb).generators();
  } else {
    if (polys.empty()) {
      throw ValidationError("homogenize needs curve exponents or --poly");
    }
    if (nvars == 0) nvars = infer_variables(polys);
    names = default_variable_names(nvars);
    for (const auto& p : polys) input.push_back(parse_polynomial(p, names));
  }
  if (nvars > o.guards.max_vars) {
    throw GuardViolation(std::to_string(nvars) +
                         " variables, limit is --max-vars " +
                         std::to_string(o.guards.max_vars));
  }
  if (std::find(names.begin(), names.end(), homvar) != names.end()) {
    throw ValidationError("homogenizing variable '" + homvar +
                          "' is already in use");
  }
  auto order = o.order.build(nvars);
  BuchbergerOptions opts;
  opts.max_basis_size = o.guards.max_gb;
  auto gb = reduce_basis(buchberger(input, order, opts));
  auto h = homogenize_basis(gb);
  auto hnames = names;
  hnames.push_back(homvar);
  bool ok = is_groebner_basis(h.generators, h.order);
  if (o.format == "text") {
    out << "order: " << h.order.describe() << '\n'
        << "groebner: " << (ok ? "yes" : "no") << '\n';
    for (const auto& g : h.generators) {
      out << "  " << to_string(g, hnames, h.order) << '\n';
    }
    return;
  }
  Json j;
  j["variables"] = hnames;
  j["order"] = o.order.kind;
  j["homogenized_basis"] = strings(h.generators, hnames, h.order);
  j["is_groebner"] = ok;
  emit(out, with_version(j));
}

// Random curves through the whole pipeline with the structural checks on.
int cmd_selfcheck(const Options& o, std::uint64_t seed, std::size_t count,
                  std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  std::uniform_int_distribution<std::int64_t> entry(2, 25);
  Json failures = Json::array();
  std::size_t done = 0;
  while (done < count) {
    std::set<std::int64_t> picked;
    auto k = dim(rng);
    while (picked.size() < k) picked.insert(entry(rng));
    std::vector<std::int64_t> n(picked.begin(), picked.end());
    std::int64_t g = 0;
    for (auto v : n) g = std::gcd(g, v);
    if (g != 1) continue;
    std::unique_ptr<MonomialCurve> curve;
    try {
      curve = std::make_unique<MonomialCurve>(n);
    } catch (const ValidationError&) {
      continue;  // not a minimal system
    }
    ++done;
    auto pres = defining_ideal(*curve, o.guards.max_gb);
    std::vector<std::string> problems;
    if (!eta_check(pres.generators, *curve)) problems.push_back("eta");
    for (const auto& f : pres.generators) {
      if (!f.is_homogeneous(curve->weights())) {
        problems.push_back("homogeneity");
        break;
      }
    }
    auto res = free_resolution(pres);
    if (!is_complex(res)) problems.push_back("complex");
    auto m = minimalize(res);
    if (!is_complex(m) || !is_graded(m)) problems.push_back("minimal complex");
    if (!has_no_constant_entries(m)) problems.push_back("constant entries");
    long alt = 1;
    auto b = m.betti();
    for (std::size_t i = 0; i < b.size(); ++i) {
      alt += (i % 2 ? 1 : -1) * static_cast<long>(b[i]);
    }
    if (alt != 0) problems.push_back("alternating sum");
    if (!b.empty() && b.front() != *minimal_generators(pres).beta1) {
      problems.push_back("beta1");
    }
    if (!problems.empty()) failures.push_back({{"exponents", n}, {"failed", problems}});
  }
  Json j;
  j["seed"] = seed;
  j["count"] = count;
  j["passed"] = count - failures.size();
  j["failures"] = failures;
  if (o.format == "text") {
    out << "selfcheck seed=" << seed << ": " << (count - failures.size())
        << "/" << count << " passed\n";
    for (const auto& f : failures) out << "  " << f.dump() << '\n';
  } else {
    emit(out, with_version(j));
  }
  return failures.empty() ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"monocurve: numerical semigroups and affine monomial curves"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.order.kind = "grevlex";
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-vars", o.guards.max_vars, "Largest number of variables")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-conductor", o.guards.max_conductor,
                 "Largest semigroup conductor")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-gb", o.guards.max_gb, "Largest Groebner basis")
      ->check(CLI::PositiveNumber);

  auto add_order = [&](CLI::App* sub) {
    auto* opt = sub->add_option("--order", o.order.kind, "Monomial order")
                    ->check(CLI::IsMember({"lex", "grlex", "grevlex", "weighted"}));
    sub->add_option("--perm", o.order.perm,
                    "Variables from largest to smallest, e.g. 2,1,0,3")
        ->delimiter(',');
    sub->add_option("--weights", o.order.weights, "Weights for --order weighted")
        ->delimiter(',');
    return opt;
  };

  std::vector<std::int64_t> gens;
  std::vector<std::string> polys;
  std::size_t nvars = 0;
  bool verify = false, nonminimal = false;
  std::vector<std::int64_t> q2s;
  std::string ra, rd, rb, rp = "3", homvar = "h";
  std::size_t jobs = 1, count = 20;
  std::uint64_t seed = 1;

  auto* semigroup = app.add_subcommand("semigroup", "Invariants of a numerical semigroup");
  semigroup->add_option("generators", gens)->required();
  auto* ideal = app.add_subcommand("ideal", "Defining ideal of a monomial curve");
  ideal->add_option("exponents", gens)->required();
  auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis");
  groebner->add_option("--poly", polys, "Generator (repeatable)")->required();
  groebner->add_option("--vars", nvars, "Number of variables x0..x(n-1)");
  add_order(groebner);
  auto* resolution = app.add_subcommand("resolution", "Graded free resolution");
  resolution->add_option("exponents", gens)->required();
  resolution->add_flag("--nonminimal", nonminimal, "Skip minimalization");
  auto* betti = app.add_subcommand("betti", "Betti numbers of a monomial curve");
  betti->add_option("exponents", gens)->required();
  auto* betti_order = add_order(betti);
  auto* bresinsky = app.add_subcommand("bresinsky", "Bresinsky's curves in 4-space");
  bresinsky->add_option("--q2", q2s, "Even q2 >= 4 (repeatable)")->required();
  bresinsky->add_flag("--verify", verify, "Run the full verification");
  auto* concat = app.add_subcommand("concat-sweep", "Sweep concatenation semigroups");
  concat->add_option("--a", ra, "lo:hi")->required();
  concat->add_option("--d", rd, "lo:hi")->required();
  concat->add_option("--b", rb, "lo:hi")->required();
  concat->add_option("--p", rp, "lo:hi");
  concat->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* derivations = app.add_subcommand("derivations", "Kraft's derivation count");
  derivations->add_option("generators", gens)->required();
  auto* homogenize = app.add_subcommand("homogenize", "Homogenize a Groebner basis");
  homogenize->add_option("exponents", gens);
  homogenize->add_option("--poly", polys);
  homogenize->add_option("--vars", nvars);
  homogenize->add_option("--homvar", homvar, "Name of the new variable");
  add_order(homogenize);
  auto* selfcheck = app.add_subcommand("selfcheck", "Pipeline checks on random curves");
  selfcheck->add_option("--seed", seed);
  selfcheck->add_option("--count", count)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (semigroup->parsed()) cmd_semigroup(o, gens, out);
    else if (ideal->parsed()) cmd_ideal(o, gens, out);
    else if (groebner->parsed()) cmd_groebner(o, polys, nvars, out);
    else if (resolution->parsed()) cmd_resolution(o, gens, nonminimal, out);
    else if (betti->parsed()) cmd_betti(o, gens, betti_order->count() > 0, out);
    else if (bresinsky->parsed()) cmd_bresinsky(o, q2s, verify, out);
    else if (concat->parsed()) cmd_concat_sweep(o, ra, rd, rb, rp, jobs, out);
    else if (derivations->parsed()) cmd_derivations(o, gens, out);
    else if (homogenize->parsed()) {
      cmd_homogenize(o, gens, polys, nvars, homvar, out);
    } else if (selfcheck->parsed()) {
      return cmd_selfcheck(o, seed, count, out);
    }
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace monocurve::cli
