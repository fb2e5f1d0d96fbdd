#include "monocurve/curve_families.hpp"

#include <atomic>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "monocurve/errors.hpp"
#include "monocurve/groebner.hpp"
#include "monocurve/resolution.hpp"

namespace monocurve {

namespace {

constexpr std::size_t kBresinskyVars = 4;

Monomial mono4(std::int64_t e0, std::int64_t e1, std::int64_t e2,
               std::int64_t e3) {
  return Monomial{static_cast<Monomial::Exponent>(e0),
                  static_cast<Monomial::Exponent>(e1),
                  static_cast<Monomial::Exponent>(e2),
                  static_cast<Monomial::Exponent>(e3)};
}

}  // namespace

BresinskyInstance bresinsky_sequence(std::int64_t q2) {
  if (q2 < 4 || q2 % 2 != 0) {
    throw ValidationError("Bresinsky's family needs an even q2 >= 4, got " +
                          std::to_string(q2));
  }
  BresinskyInstance inst;
  inst.q2 = q2;
  inst.q1 = q2 + 1;
  inst.d1 = q2 - 1;
  inst.n = {inst.q1 * q2, inst.q1 * inst.d1, inst.q1 * q2 + inst.d1,
            q2 * inst.d1};
  std::int64_t g = 0;
  for (auto v : inst.n) g = std::gcd(g, v);
  if (g != 1) throw InternalError("Bresinsky sequence with gcd != 1");
  return inst;
}

std::vector<Polynomial> bresinsky_generators(const BresinskyInstance& inst) {
  const auto q1 = inst.q1, q2 = inst.q2, d1 = inst.d1;
  std::vector<Polynomial> s;
  for (std::int64_t mu = 1; mu <= q2; ++mu) {
    s.push_back(Polynomial::binomial(mono4(mu - 1, 0, q2 - mu, 0),
                                     mono4(0, q2 - mu, 0, mu + 1)));
  }
  for (std::int64_t m = 1; m <= q2 - 2; ++m) {
    s.push_back(Polynomial::binomial(mono4(m, 0, 0, q1 - m),
                                     mono4(0, q2 - m, m, 0)));
  }
  s.push_back(Polynomial::binomial(mono4(d1, 0, 0, 0), mono4(0, q2, 0, 0)));
  s.push_back(Polynomial::binomial(mono4(0, 0, 1, 1), mono4(1, 1, 0, 0)));
  return s;
}

MonomialOrder bresinsky_order() { return MonomialOrder::lex({2, 1, 0, 3}); }

std::vector<std::size_t> bresinsky_expected_betti(std::int64_t q2) {
  auto q = static_cast<std::size_t>(q2);
  return {2 * q, 4 * (q - 1), 2 * q - 3};
}

BresinskyReport verify_bresinsky(const BresinskyInstance& inst) {
  return verify_bresinsky(inst, bresinsky_generators(inst));
}

BresinskyReport verify_bresinsky(const BresinskyInstance& inst,
                                 const std::vector<Polynomial>& generators) {
  BresinskyReport report;
  auto curve = inst.curve();
  auto ideal = defining_ideal_basis(curve);
  auto order = bresinsky_order();

  bool forward = true;
  for (const auto& f : generators) {
    if (f.num_variables() != kBresinskyVars || !ideal_contains(ideal, f)) {
      forward = false;
      break;
    }
  }
  bool backward = false;
  if (forward && !generators.empty()) {
    auto gb = buchberger(generators, order);
    backward = true;
    for (const auto& g : ideal.generators()) {
      if (!ideal_contains(gb, g)) {
        backward = false;
        break;
      }
    }
  }
  report.generates = forward && backward;
  report.is_gb = !generators.empty() && is_groebner_basis(generators, order);
  report.betti = betti_numbers(curve);
  report.betti_match = report.betti == bresinsky_expected_betti(inst.q2);
  return report;
}

ConcatenationInstance concatenation_semigroup(std::int64_t a, std::int64_t d,
                                              std::int64_t b, std::int64_t p) {
  if (p < 3) throw ValidationError("concatenation needs p >= 3");
  if (a <= 0 || d <= 0) throw ValidationError("a and d must be positive");
  if (b <= a + (p - 2) * d) {
    throw ValidationError("b must exceed a + (p-2)d");
  }
  if (std::gcd(a, d) != 1) throw ValidationError("gcd(a, d) must be 1");
  if ((b - a) % d == 0) throw ValidationError("d must not divide b - a");
  ConcatenationInstance inst{a, d, b, p, {}};
  for (std::int64_t k = 0; k <= p - 2; ++k) inst.generators.push_back(a + k * d);
  inst.generators.push_back(b);
  inst.generators.push_back(b + d);
  NumericalSemigroup s(std::span<const std::int64_t>(inst.generators));
  if (s.minimal_generators() != inst.generators) {
    throw ValidationError("M is not a minimal generating system");
  }
  return inst;
}

namespace {

template <typename Fn>
void run_rows(std::vector<SweepRow>& rows, std::size_t jobs, Fn fn) {
  if (jobs <= 1 || rows.size() <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < std::min(jobs, rows.size()); ++w) {
    workers.emplace_back([&] {
      for (auto i = next++; i < rows.size(); i = next++) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

void fill_curve_row(SweepRow& row, const MonomialCurve& curve,
                    std::size_t max_basis_size) {
  row.generators = curve.exponents();
  row.frobenius = curve.semigroup().frobenius();
  row.symmetric = curve.semigroup().is_symmetric();
  auto gb = defining_ideal_basis(curve, max_basis_size);
  row.eta_ok = eta_check(gb.generators(), curve);
  row.betti = minimalize(free_resolution(gb, curve.weights())).betti();
}

}  // namespace

std::vector<SweepRow> bresinsky_sweep(const std::vector<std::int64_t>& q2s,
                                      std::size_t jobs,
                                      std::size_t max_basis_size) {
  std::vector<SweepRow> rows(q2s.size());
  run_rows(rows, jobs, [&](std::size_t i) {
    auto& row = rows[i];
    row.family = "bresinsky";
    row.params = {q2s[i]};
    try {
      auto inst = bresinsky_sequence(q2s[i]);
      fill_curve_row(row, inst.curve(), max_basis_size);
      row.eta_ok = *row.eta_ok && eta_check(bresinsky_generators(inst),
                                            inst.curve());
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

std::vector<SweepRow> concatenation_sweep(
    const std::vector<ConcatenationParams>& grid, std::size_t jobs,
    std::size_t max_basis_size) {
  std::vector<SweepRow> rows(grid.size());
  run_rows(rows, jobs, [&](std::size_t i) {
    auto& row = rows[i];
    const auto& g = grid[i];
    row.family = "concatenation";
    row.params = {g.a, g.d, g.b, g.p};
    try {
      auto inst = concatenation_semigroup(g.a, g.d, g.b, g.p);
      fill_curve_row(row, MonomialCurve(inst.generators), max_basis_size);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

std::string sweep_to_json_lines(const std::vector<SweepRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["family"] = row.family;
    j["params"] = row.params;
    j["generators"] = row.generators;
    j["betti"] = row.betti;
    j["beta1"] = row.betti.empty() ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(row.betti.front());
    j["frobenius"] = row.frobenius ? nlohmann::ordered_json(*row.frobenius)
                                   : nlohmann::ordered_json(nullptr);
    j["symmetric"] = row.symmetric ? nlohmann::ordered_json(*row.symmetric)
                                   : nlohmann::ordered_json(nullptr);
    j["eta_ok"] = row.eta_ok ? nlohmann::ordered_json(*row.eta_ok)
                             : nlohmann::ordered_json(nullptr);
    j["error"] = row.error.empty() ? nlohmann::ordered_json(nullptr)
                                   : nlohmann::ordered_json(row.error);
    out += j.dump() + "\n";
  }
  return out;
}

std::string sweep_to_table(const std::vector<SweepRow>& rows) {
  auto join = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
  };
  std::ostringstream out;
  out << std::left << std::setw(15) << "family" << std::setw(16) << "params"
      << std::setw(20) << "generators" << std::setw(16) << "betti"
      << std::setw(7) << "beta1" << std::setw(7) << "F" << std::setw(6)
      << "sym" << std::setw(5) << "eta" << "error\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(15) << row.family << std::setw(16)
        << join(row.params) << std::setw(20) << join(row.generators)
        << std::setw(16) << join(row.betti) << std::setw(7)
        << (row.betti.empty() ? "-" : std::to_string(row.betti.front()))
        << std::setw(7)
        << (row.frobenius ? std::to_string(*row.frobenius) : "-")
        << std::setw(6)
        << (row.symmetric ? (*row.symmetric ? "yes" : "no") : "-")
        << std::setw(5) << (row.eta_ok ? (*row.eta_ok ? "ok" : "FAIL") : "-")
        << row.error << "\n";
  }
  return out.str();
}

}  // namespace monocurve
