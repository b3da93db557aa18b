// Copyright 2026 The qpic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpic/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qpic/classical.hpp"
#include "qpic/conjugation.hpp"
#include "qpic/dense.hpp"
#include "qpic/heisenberg.hpp"
#include "qpic/locality.hpp"
#include "qpic/product_form.hpp"
#include "qpic/stabilizer_states.hpp"

namespace qpic {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

StateVector bell_state() {
  const double inv = 1.0 / std::sqrt(2.0);
  return StateVector(2, {inv, 0.0, 0.0, inv});
}

PauliSum quarter_sum(Complex xz, Complex zx, Complex yy) {
  PauliSum target(2);
  target.add_term("II", 0.25);
  target.add_term("XZ", 0.25 * xz);
  target.add_term("ZX", 0.25 * zx);
  target.add_term("YY", 0.25 * yy);
  return target;
}

dense::Matrix circuit_unitary(const Circuit& c) {
  const auto dim = static_cast<Eigen::Index>(1) << c.n;
  dense::Matrix u = dense::Matrix::Identity(dim, dim);
  for (const GateOp& g : c.gates) {
    u = g.full_unitary(c.n) * u;
  }
  return u;
}

// Single-qubit gate instances used by the locality sweeps.
std::vector<GateOp> single_qubit_gate_set(std::size_t q) {
  return {GateOp::h(q),
          GateOp::s(q),
          GateOp::x(q),
          GateOp::y(q),
          GateOp::z(q),
          GateOp::phase(q, M_PI / 7.0),
          GateOp::phase(q, M_PI / 3.0),
          GateOp::phase(q, M_PI)};
}

std::vector<GateOp> all_gate_instances(std::size_t n) {
  std::vector<GateOp> gates;
  for (std::size_t q = 0; q < n; ++q) {
    auto singles = single_qubit_gate_set(q);
    gates.insert(gates.end(), singles.begin(), singles.end());
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      gates.push_back(GateOp::cz(a, b));
      gates.push_back(GateOp::cx(a, b));
      gates.push_back(GateOp::cx(b, a));
    }
  }
  return gates;
}

Report scenario_cz_entangler(const ScenarioOptions&) {
  Report report;
  report.title = "cz-entangler";

  const FactoredState initial = FactoredState::init_plus(2);
  const FactoredState after = evolve(initial, GateOp::cz(0, 1));

  PauliString g0 = PauliString::identity(2);
  PauliString g1 = PauliString::identity(2);
  const bool singles = after.generator(0).as_single_string(g0) &&
                       after.generator(1).as_single_string(g1);
  const bool generators_exact =
      singles && g0 == PauliString::parse("+XZ") && g1 == PauliString::parse("+ZX");
  report.checks.push_back({"generators become X(x)Z and Z(x)X exactly", generators_exact,
                           "got [" + after.generator(0).str() + ", " +
                               after.generator(1).str() + "]"});

  const auto changed = changed_factors(initial, after);
  report.checks.push_back({"both factors acquire the remote Z dependence",
                           changed == std::vector<std::size_t>{0, 1},
                           "changed factors " + join_indices(changed)});

  const PauliSum expanded = expand(after);
  const PauliSum target = quarter_sum(1.0, 1.0, 1.0);
  report.checks.push_back({"expansion equals (I + XZ + ZX + YY)/4 termwise exactly",
                           expanded == target, "expansion " + expanded.str()});

  const dense::Matrix rho = dense::to_dense(expanded);
  const double trace_err = std::abs(rho.trace() - Complex{1.0, 0.0});
  Eigen::VectorXd eigs = dense::hermitian_eigenvalues(rho);
  double eig_err = std::abs(eigs(3) - 1.0);
  for (int i = 0; i < 3; ++i) eig_err = std::max(eig_err, std::abs(eigs(i)));
  report.checks.push_back({"dense form is a trace-1 rank-1 projector",
                           trace_err <= 1e-12 && eig_err <= 1e-10,
                           "trace error " + fmt(trace_err) + ", eigenvalue error " +
                               fmt(eig_err)});

  report.extra["initial_factored"] = initial.str();
  report.extra["entangled_factored"] = after.str();
  report.extra["expansion"] = expanded.str();
  return report;
}

Report scenario_bell_phase_kick(const ScenarioOptions& options) {
  Report report;
  report.title = "bell-phase-kick";
  const double phi = options.phi.value_or(M_PI);
  report.params["phi"] = phi;

  // Part 1: the kick on the CZ-entangled state flips exactly one factor.
  const FactoredState entangled = evolve(FactoredState::init_plus(2), GateOp::cz(0, 1));
  const FactoredState kicked = evolve(entangled, GateOp::phase(0, phi));
  const auto changed = changed_factors(entangled, kicked);
  const bool kick_nontrivial =
      std::abs(std::sin(phi)) > kZeroTol || std::abs(std::cos(phi) - 1.0) > kZeroTol;
  if (kick_nontrivial) {
    report.checks.push_back({"kick on qubit 0 changes only factor 0",
                             changed == std::vector<std::size_t>{0},
                             "changed factors " + join_indices(changed)});
  } else {
    report.checks.push_back({"trivial kick leaves every factor alone", changed.empty(),
                             "changed factors " + join_indices(changed)});
  }

  if (phi == M_PI) {
    PauliString g0 = PauliString::identity(2);
    const bool sign_flip =
        kicked.generator(0).as_single_string(g0) && g0 == PauliString::parse("-XZ");
    report.checks.push_back({"factor 0 flips sign exactly at phi = pi", sign_flip,
                             "factor 0 is " + kicked.generator(0).str()});
    const PauliSum expanded = expand(kicked);
    report.checks.push_back({"expansion equals (I - XZ + ZX - YY)/4 termwise exactly",
                             expanded == quarter_sum(-1.0, 1.0, -1.0),
                             "expansion " + expanded.str()});
  }

  // Dense consistency of the factored kick at any angle.
  {
    const dense::Matrix u = GateOp::phase(0, phi).full_unitary(2);
    const dense::Matrix expected = u * dense::to_dense(expand(entangled)) * u.adjoint();
    const double dev = dense::max_abs_diff(dense::to_dense(expand(kicked)), expected);
    report.checks.push_back({"factored kick matches dense evolution", dev <= 1e-12,
                             "max entry deviation " + fmt(dev)});
  }

  // Part 2: on the Bell state the same kick on either qubit is globally
  // indistinguishable, while the provenance still differs.
  Circuit kick0(2, {GateOp::phase(0, phi)});
  Circuit kick1(2, {GateOp::phase(1, phi)});
  const FactoredState bell_factored = FactoredState::init_from_strings(
      {PauliString::parse("+XX"), PauliString::parse("+ZZ")});
  const auto hiding =
      locality::indistinguishability_check(kick0, kick1, bell_state(), bell_factored);
  report.checks.push_back({"kick location is hidden in the global state", hiding.states_equal,
                           "overlap " + fmt(hiding.overlap)});
  report.checks.push_back({"expanded product forms agree termwise", hiding.expanded_equal,
                           "max coefficient deviation " + fmt(hiding.expanded_diff)});
  if (kick_nontrivial) {
    report.checks.push_back({"provenance still names the kicked qubit",
                             hiding.provenance_differs, "see extra.provenance_*"});
  }

  report.extra["entangled_factored"] = entangled.str();
  report.extra["kicked_factored"] = kicked.str();
  report.extra["kicked_expansion"] = expand(kicked).str();
  report.extra["provenance_kick_on_0"] = hiding.provenance_a;
  report.extra["provenance_kick_on_1"] = hiding.provenance_b;
  return report;
}

Report scenario_data_hiding(const ScenarioOptions& options) {
  Report report;
  report.title = "data-hiding";
  std::vector<double> grid = {0.0, M_PI / 7.0, M_PI / 3.0, 1.0, M_PI};
  if (options.phi) grid.push_back(*options.phi);

  const auto hiding = locality::data_hiding_check(grid);
  report.params["grid_size"] = grid.size();
  report.checks.push_back(
      {"all local reductions stay maximally mixed across the phase grid", hiding.pass,
       "max |rho_local - I/2| = " + fmt(hiding.max_deviation)});
  report.extra["details"] = hiding.to_json();
  return report;
}

Report scenario_chsh(const ScenarioOptions& options) {
  Report report;
  report.title = "chsh";
  const std::size_t sweeps = options.samples ? options.samples : 10000;
  report.params["sweeps"] = sweeps;
  report.params["seed"] = options.seed;

  const double tsirelson = 2.0 * std::sqrt(2.0);
  const StateVector bell = bell_state();
  const auto settings = locality::optimal_chsh_settings();

  const double optimal = locality::chsh_value(bell, settings.a, settings.a_alt, settings.b,
                                              settings.b_alt);
  report.checks.push_back({"optimal settings on the Bell state reach 2*sqrt(2)",
                           std::abs(optimal - tsirelson) <= 1e-9,
                           "value " + fmt(optimal)});

  double max_bell = 0.0;
  double max_product = 0.0;
  const StateVector product = StateVector::from_ket("00");
  for (std::size_t i = 0; i < sweeps; ++i) {
    Rng rng = Rng::split(options.seed, i);
    const auto a = locality::BlochVector::random(rng);
    const auto a2 = locality::BlochVector::random(rng);
    const auto b = locality::BlochVector::random(rng);
    const auto b2 = locality::BlochVector::random(rng);
    max_bell = std::max(max_bell, std::abs(locality::chsh_value(bell, a, a2, b, b2)));
    max_product =
        std::max(max_product, std::abs(locality::chsh_value(product, a, a2, b, b2)));
  }
  report.checks.push_back({"random settings on the Bell state respect the Tsirelson bound",
                           max_bell <= tsirelson + 1e-9, "max |S| = " + fmt(max_bell)});
  report.checks.push_back({"product state stays inside the classical bound",
                           max_product <= 2.0 + 1e-9, "max |S| = " + fmt(max_product)});

  {
    Rng rng = Rng::split(options.seed, 0x5e771465);
    const auto a = locality::BlochVector::random(rng);
    const auto b = locality::BlochVector::random(rng);
    const double collapsed = locality::chsh_value(bell, a, a, b, b);
    const double twice = 2.0 * locality::correlation(bell, a, b);
    report.checks.push_back({"repeated settings collapse to 2E(a,b)",
                             std::abs(collapsed - twice) <= 1e-12,
                             "difference " + fmt(std::abs(collapsed - twice))});
  }
  return report;
}

Report scenario_einstein_audit(const ScenarioOptions& options) {
  Report report;
  report.title = "einstein-audit";
  const std::size_t n = options.qubits ? options.qubits : 2;
  if (n < 2 || n > 4) {
    throw std::invalid_argument("einstein-audit supports 2 to 4 qubits");
  }
  report.params["qubits"] = n;

  // Remote single-qubit strings are exact fixed points of every local
  // conjugation, gate by gate.
  {
    bool all_fixed = true;
    std::size_t checked = 0;
    std::string witness = "none";
    for (const GateOp& g : single_qubit_gate_set(0)) {
      for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
        const PauliString remote = PauliString::single(n, 1, l);
        PauliString moved = PauliString::identity(n);
        const bool fixed =
            conjugate_string(remote, g, ConjugationDirection::Heisenberg)
                .as_single_string(moved) &&
            moved == remote;
        ++checked;
        if (!fixed) {
          all_fixed = false;
          witness = remote.str() + " moved under " + g.str();
        }
      }
    }
    report.checks.push_back({"remote observables are exact fixed points of local gates",
                             all_fixed,
                             std::to_string(checked) + " conjugations checked; " + witness});
  }

  const auto states = enumerate_stabilizer_states(n);
  report.params["stabilizer_states"] = states.size();
  const auto gates = all_gate_instances(n);

  std::size_t audits = 0;
  std::size_t failures = 0;
  double worst_reduction = 0.0;
  std::string witness = "none";
  const Circuit no_history(n, {});
  for (const auto& state : states) {
    const FactoredState factored = to_factored(state);
    const StateVector psi = to_statevector(state);
    for (const GateOp& g : gates) {
      const auto audit =
          locality::einstein_locality_audit(factored, no_history, g, g.support, psi);
      ++audits;
      worst_reduction = std::max(worst_reduction, audit.reduced_deviation);
      if (!audit.pass()) {
        ++failures;
        if (witness == "none") {
          witness = g.str() + " on state " + state.generators[0].str() + "...";
        }
      }
    }
  }
  report.checks.push_back(
      {"three-backend audit passes for every stabilizer state and gate", failures == 0,
       std::to_string(audits) + " audits; " + std::to_string(failures) + " failures (" +
           witness + ")"});
  report.checks.push_back({"remote reduced states never move", worst_reduction <= 1e-12,
                           "max deviation " + fmt(worst_reduction)});
  return report;
}

Report scenario_classical_collision(const ScenarioOptions& options) {
  Report report;
  report.title = "classical-collision";
  classical::EnsembleConfig config;
  config.samples = options.samples ? options.samples : 100000;
  config.seed = options.seed;
  report.params["samples"] = config.samples;
  report.params["seed"] = config.seed;

  const classical::Ensemble initial = classical::draw_ensemble(config);

  double max_dp = 0.0;
  double max_rel_de = 0.0;
  for (const auto& s : initial.samples) {
    const auto c = classical::collide(s, config.m1, config.m2);
    max_dp = std::max(max_dp, std::abs((c.p1 + c.p2) - (s.p1 + s.p2)));
    const double e0 = s.p1 * s.p1 / (2.0 * config.m1) + s.p2 * s.p2 / (2.0 * config.m2);
    const double e1 = c.p1 * c.p1 / (2.0 * config.m1) + c.p2 * c.p2 / (2.0 * config.m2);
    max_rel_de = std::max(max_rel_de, std::abs(e1 - e0) / std::max(e0, 1e-300));
  }
  report.checks.push_back({"momentum conserved per sample", max_dp <= 1e-12,
                           "max |dp| = " + fmt(max_dp)});
  report.checks.push_back({"kinetic energy conserved per sample", max_rel_de <= 1e-10,
                           "max relative |dE| = " + fmt(max_rel_de)});

  // Initial draws factorize; every cross covariance is noise-level.
  const auto cov0 = classical::covariance(initial);
  const double sigma[4] = {config.q1.stddev, config.p1.stddev, config.q2.stddev,
                           config.p2.stddev};
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const double standard_error =
          sigma[i] * sigma[j] / std::sqrt(static_cast<double>(config.samples));
      worst_ratio = std::max(worst_ratio, std::abs(cov0[i][j]) / standard_error);
    }
  }
  report.checks.push_back({"initial cross covariances vanish within 4 standard errors",
                           worst_ratio <= 4.0,
                           "worst |cov|/SE = " + fmt(worst_ratio)});

  // After the collision each momentum IS the other particle's initial one.
  const classical::Ensemble evolved = classical::evolve_ensemble(initial, 1.0);
  const double corr = classical::paired_correlation(evolved, 1, initial, 3);
  report.checks.push_back({"equal-mass collision swaps the momenta exactly",
                           std::abs(corr - 1.0) <= 1e-12,
                           "corr(p1', p2_initial) = " + fmt(corr)});

  // Positions inherit the swap: cov(q1(t), p2_initial) grows linearly in t.
  {
    const double var_p2 = classical::paired_covariance(initial, 3, initial, 3);
    const double base = classical::paired_covariance(initial, 0, initial, 3);
    double max_dev = 0.0;
    Json growth = Json::array();
    for (double t : {1.0, 2.0, 4.0}) {
      const classical::Ensemble at_t = classical::evolve_ensemble(initial, t);
      const double observed = classical::paired_covariance(at_t, 0, initial, 3);
      const double predicted = base + (t / config.m1) * var_p2;
      max_dev = std::max(max_dev, std::abs(observed - predicted));
      growth.push_back({{"t", t}, {"cov_q1_p2initial", observed}, {"predicted", predicted}});
    }
    report.checks.push_back({"position-momentum correlation grows linearly in t",
                             max_dev <= 1e-9, "max |observed - predicted| = " + fmt(max_dev)});
    report.extra["correlation_growth"] = std::move(growth);
  }

  auto covariance_json = [](const classical::Ensemble& e) {
    Json rows = Json::array();
    for (const auto& row : classical::covariance(e)) {
      rows.push_back({row[0], row[1], row[2], row[3]});
    }
    return rows;
  };
  report.extra["coordinates"] = {"q1", "p1", "q2", "p2"};
  report.extra["covariance_initial"] = covariance_json(initial);
  report.extra["covariance_evolved"] = covariance_json(evolved);
  return report;
}

Report scenario_picture_equivalence(const ScenarioOptions& options) {
  Report report;
  report.title = "picture-equivalence";
  const std::size_t max_qubits = std::clamp<std::size_t>(options.qubits ? options.qubits : 5, 2, 5);
  const std::size_t depth = options.depth ? options.depth : 20;
  const std::size_t seeds = options.seeds ? options.seeds : 100;
  report.params["max_qubits"] = max_qubits;
  report.params["max_depth"] = depth;
  report.params["seeds"] = seeds;
  report.params["seed"] = options.seed;

  double max_expectation_diff = 0.0;
  double max_dense_diff = 0.0;
  for (std::size_t s = 0; s < seeds; ++s) {
    Rng rng = Rng::split(options.seed, s);
    const std::size_t n = 2 + rng.next_u64() % (max_qubits - 1);
    const std::size_t d = 1 + rng.next_u64() % depth;
    const Circuit circuit = random_circuit(rng, n, d);
    const StateVector plus = StateVector::from_ket(std::string(n, '+'));

    const StateVector final_state = run_circuit(circuit, plus);
    for (int k = 0; k < 10; ++k) {
      const PauliSum obs = PauliSum::from_string(random_pauli_word(rng, n));
      const Complex schrodinger = expectation(final_state, obs);
      const Complex heisenberg =
          expectation(plus, conjugate(obs, circuit, ConjugationDirection::Heisenberg));
      max_expectation_diff =
          std::max(max_expectation_diff, std::abs(schrodinger - heisenberg));
    }

    const dense::Matrix u = circuit_unitary(circuit);
    const dense::Matrix rho0 = projector(plus);
    const dense::Matrix expected = u * rho0 * u.adjoint();
    const dense::Matrix factored =
        dense::to_dense(expand(evolve(FactoredState::init_plus(n), circuit)));
    max_dense_diff = std::max(max_dense_diff, dense::max_abs_diff(factored, expected));
  }

  report.checks.push_back({"Schrodinger and Heisenberg expectations agree",
                           max_expectation_diff <= 1e-9,
                           "max difference " + fmt(max_expectation_diff)});
  report.checks.push_back({"factored evolution matches dense evolution entrywise",
                           max_dense_diff <= 1e-10,
                           "max entry deviation " + fmt(max_dense_diff)});
  return report;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {
      "bell-phase-kick", "cz-entangler",        "data-hiding",        "chsh",
      "einstein-audit",  "classical-collision", "picture-equivalence"};
  return names;
}

Report run_scenario(const std::string& name, const ScenarioOptions& options) {
  if (name == "cz-entangler") return scenario_cz_entangler(options);
  if (name == "bell-phase-kick") return scenario_bell_phase_kick(options);
  if (name == "data-hiding") return scenario_data_hiding(options);
  if (name == "chsh") return scenario_chsh(options);
  if (name == "einstein-audit") return scenario_einstein_audit(options);
  if (name == "classical-collision") return scenario_classical_collision(options);
  if (name == "picture-equivalence") return scenario_picture_equivalence(options);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

Report run_backend_comparison(const Circuit& circuit, const std::string& initial_ket,
                              const std::map<std::string, PauliSum>& observables) {
  Report report;
  report.title = "run";
  report.params["initial"] = initial_ket;
  report.params["gates"] = circuit.gates.size();

  const StateVector initial = StateVector::from_ket(initial_ket);
  if (initial.num_qubits() != circuit.n) {
    throw std::invalid_argument("initial ket does not match the circuit qubit count");
  }
  const FactoredState factored_initial = FactoredState::from_ket(initial_ket);
  const StateVector final_state = run_circuit(circuit, initial);
  const FactoredState factored_final = evolve(factored_initial, circuit);

  Json table = Json::array();
  for (const auto& [name, obs] : observables) {
    if (obs.num_qubits() != circuit.n) {
      throw std::invalid_argument("observable '" + name + "' does not fit the circuit");
    }
    const Complex schrodinger = expectation(final_state, obs);
    const Complex heisenberg = expectation(
        initial, conjugate(obs, circuit, ConjugationDirection::Heisenberg));
    const Complex product = factored_expectation(factored_final, obs);
    const double spread = std::max(std::abs(schrodinger - heisenberg),
                                   std::max(std::abs(schrodinger - product),
                                            std::abs(heisenberg - product)));
    report.checks.push_back({"backends agree on <" + name + ">", spread <= 1e-9,
                             "spread " + fmt(spread)});
    table.push_back({{"observable", name},
                     {"schrodinger", {schrodinger.real(), schrodinger.imag()}},
                     {"heisenberg", {heisenberg.real(), heisenberg.imag()}},
                     {"product_form", {product.real(), product.imag()}}});
  }
  report.extra["expectations"] = std::move(table);
  return report;
}

Circuit random_circuit(Rng& rng, std::size_t n, std::size_t depth) {
  if (n < 2) {
    throw std::invalid_argument("random circuits need at least two qubits");
  }
  Circuit c;
  c.n = n;
  for (std::size_t i = 0; i < depth; ++i) {
    const std::size_t q = rng.next_u64() % n;
    switch (rng.next_u64() % 5) {
      case 0: c.append(GateOp::h(q)); break;
      case 1: c.append(GateOp::s(q)); break;
      case 2: c.append(GateOp::phase(q, rng.uniform(0.0, 2.0 * M_PI))); break;
      case 3: {
        std::size_t other = rng.next_u64() % (n - 1);
        if (other >= q) ++other;
        c.append(GateOp::cz(q, other));
        break;
      }
      default: {
        std::size_t other = rng.next_u64() % (n - 1);
        if (other >= q) ++other;
        c.append(GateOp::cx(q, other));
        break;
      }
    }
  }
  return c;
}

PauliString random_pauli_word(Rng& rng, std::size_t n) {
  while (true) {
    std::vector<Letter> letters(n);
    bool nontrivial = false;
    for (std::size_t q = 0; q < n; ++q) {
      letters[q] = static_cast<Letter>(rng.next_u64() % 4);
      nontrivial |= letters[q] != Letter::I;
    }
    if (nontrivial) return PauliString(std::move(letters));
  }
}

}  // namespace qpic
