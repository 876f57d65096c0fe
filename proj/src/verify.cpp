#include "adqc/verify.hpp"

#include "adqc/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

namespace adqc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSupportTolerance = 1e-12;

// Tr(rho log2 rho) from the clamped spectrum.
double neg_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.spectrum().size(); ++i) s += xlog2x(rho.spectrum()(i));
  return s;
}

}  // namespace

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw LinalgError("relative_entropy: dimension mismatch");
  const auto eig = hermitian_eigensystem(sigma.matrix());
  double cross = 0.0;
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    const ComplexVector v = eig.vectors.col(k);
    const double weight = (v.adjoint() * rho.matrix() * v)(0).real();
    const double mu = std::max(eig.values(k), 0.0);
    if (mu < kSupportTolerance) {
      if (weight > kSupportTolerance) return kInf;
      continue;
    }
    cross += weight * std::log2(mu);
  }
  return neg_entropy(rho) - cross;
}

DensityMatrix dephasing_map(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw DomainError("dephasing_map: expects a two-qubit state");
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) d(i, i) = rho.matrix()(i, i).real();
  return DensityMatrix(d);
}

DensityMatrix maximally_mixed(int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double check_monotonicity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double before = relative_entropy(rho, sigma);
  const double after = relative_entropy(dephasing_map(rho), dephasing_map(sigma));
  if (std::isinf(before)) return kInf;
  if (std::isinf(after)) return -kInf;
  return before - after;
}

double check_interm(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw DomainError("check_interm: expects a two-qubit state");
  double diag = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) diag += xlog2x(std::max(rho.matrix()(i, i).real(), 0.0));
  return neg_entropy(rho) - diag;
}

double check_jonas(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw DomainError("check_jonas: expects a two-qubit state");
  return g(std::min(std::abs(z_correlator(rho)), 1.0)) - von_neumann(rho);
}

PureState saturating_single_qubit_register(double S, int total_qubits) {
  if (!(S >= 0.0 && S <= 1.0)) throw DomainError("saturating register: S outside [0, 1]");
  if (total_qubits < 2 || total_qubits > kMaxQubits) {
    throw DomainError("saturating register: need 2..8 qubits");
  }
  const double p0 = (1.0 + std::sqrt(1.0 - S)) / 2.0;
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << total_qubits);
  v(0) = std::sqrt(p0);
  v(Eigen::Index{3} << (total_qubits - 2)) = std::sqrt(1.0 - p0);
  return PureState::normalized(v);
}

PureState maximally_mixed_pair_register(int total_qubits) {
  if (total_qubits < 4 || total_qubits > kMaxQubits) {
    throw DomainError("maximally mixed pair register: need 4..8 qubits");
  }
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << total_qubits);
  const int shift = total_qubits - 4;
  for (Eigen::Index b0 = 0; b0 < 2; ++b0) {
    for (Eigen::Index b1 = 0; b1 < 2; ++b1) {
      const Eigen::Index top = (b0 << 3) | (b1 << 2) | (b0 << 1) | b1;
      v(top << shift) = 0.5;
    }
  }
  return PureState(v);
}

DensityMatrix rho_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("rho_lambda: lambda outside [0, 1]");
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = lambda;
  m(3, 3) = 1.0 - lambda;
  return DensityMatrix(m);
}

PureState rho_lambda_register(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("rho_lambda: lambda outside [0, 1]");
  ComplexVector v = ComplexVector::Zero(16);
  v(0) = std::sqrt(lambda);
  v(15) = std::sqrt(1.0 - lambda);
  return PureState::normalized(v);
}

PureState random_density_purification(int n_qubits, Rng& rng) {
  if (n_qubits < 1 || n_qubits > 3) throw DomainError("random_density_matrix: n must be in [1, 3]");
  return random_pure_state(2 * n_qubits, rng);
}

DensityMatrix random_density_matrix(int n_qubits, Rng& rng) {
  const PureState psi = random_density_purification(n_qubits, rng);
  QubitList keep(n_qubits);
  for (int q = 0; q < n_qubits; ++q) keep[q] = q;
  return DensityMatrix::reduced(psi, keep);
}

DensityMatrix random_density_matrix(int n_qubits, std::uint64_t seed) {
  Rng rng(mix_seed(seed));
  return random_density_matrix(n_qubits, rng);
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

std::string_view campaign_name(Campaign c) {
  switch (c) {
    case Campaign::EqualityOracle:
      return "equality_oracle";
    case Campaign::BoundMain:
      return "bound_main";
    case Campaign::BoundSv:
      return "bound_sv";
    case Campaign::BoundMain2:
      return "bound_main2";
    case Campaign::CircuitEquivalence:
      return "circuit_equivalence";
    case Campaign::Jonas:
      return "jonas";
    case Campaign::Monotonicity:
      return "monotonicity";
    case Campaign::Interm:
      return "interm";
    case Campaign::Saturation:
      return "saturation";
    case Campaign::Counterexample:
      return "counterexample";
  }
  return "unknown";
}

Campaign parse_campaign(std::string_view name) {
  for (Campaign c : kAllCampaigns) {
    if (campaign_name(c) == name) return c;
  }
  throw UnknownCampaign("unknown campaign '" + std::string(name) + "'");
}

CampaignConfig default_config(Campaign c) {
  constexpr double pi = std::numbers::pi;
  CampaignConfig cfg;
  cfg.name = std::string(campaign_name(c));
  cfg.seed = 42;
  for (int k = 0; k <= 31; ++k) cfg.epsilon_grid.push_back(0.1 * k);
  cfg.epsilon_grid.push_back(pi);
  cfg.delta_grid = {0.0, 0.7, 2.3};
  cfg.register_sizes = {2, 3, 4, 5};
  cfg.samples = 1000;
  cfg.tolerance = 1e-9;
  switch (c) {
    case Campaign::EqualityOracle:
      cfg.tolerance = 1e-10;
      break;
    case Campaign::CircuitEquivalence:
      cfg.samples = 200;
      cfg.tolerance = 1e-12;
      break;
    case Campaign::BoundMain2:
      cfg.register_sizes = {4, 5, 6};
      break;
    case Campaign::Saturation:
      cfg.samples = 5;  // S grid 0, 0.25, ..., 1
      cfg.epsilon_grid = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
      cfg.delta_grid = {0.0, 0.7, 2.3};
      cfg.register_sizes = {2, 3, 4, 5};
      break;
    case Campaign::Counterexample:
      cfg.samples = 21;  // lambda grid 0, 0.05, ..., 1
      cfg.epsilon_grid = {0.0, pi / 4, pi / 2, 3 * pi / 4, pi};
      cfg.tolerance = 1e-12;
      break;
    default:
      break;
  }
  return cfg;
}

namespace {

struct SampleOutcome {
  long long checks = 0;
  double violation = 0.0;
  std::string description;
  std::optional<PureState> witness;
  std::map<std::string, double> mins;
  std::map<std::string, double> maxs;
  std::map<std::string, double> counts;

  void check(double v, const std::string& what, const PureState* state = nullptr) {
    ++checks;
    // NaN counts as the worst possible violation.
    if (std::isnan(v)) v = kInf;
    if (checks == 1 || v > violation) {
      violation = v;
      description = what;
      if (state) witness = *state;
    }
  }
  void observe_min(const std::string& key, double v) {
    auto [it, fresh] = mins.emplace(key, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  void observe_max(const std::string& key, double v) {
    auto [it, fresh] = maxs.emplace(key, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
  void count(const std::string& key, double v = 1.0) { counts[key] += v; }
};

std::string params(const ProtocolSpec& spec) {
  std::ostringstream os;
  os << protocol_name(spec.kind) << " targets=";
  for (std::size_t i = 0; i < spec.targets.size(); ++i) os << (i ? "," : "") << spec.targets[i];
  if (spec.u) os << " u=" << format_double(*spec.u);
  os << " epsilon=" << format_double(spec.epsilon) << " delta=" << format_double(spec.delta);
  return os.str();
}

int pick_size(const CampaignConfig& cfg, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, cfg.register_sizes.size() - 1);
  return cfg.register_sizes[pick(rng)];
}

// Random targets and angle for `kind` on an n-qubit register.
ProtocolSpec random_spec(ProtocolKind kind, int n, Rng& rng) {
  std::uniform_int_distribution<int> qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const int t1 = qubit(rng);
  if (is_rotation(kind)) return ProtocolSpec::rotation(kind, t1, angle(rng), 0.0, 0.0);
  int t2 = qubit(rng);
  while (t2 == t1) t2 = qubit(rng);
  return ProtocolSpec::two_qubit(kind, t1, t2, 0.0, 0.0);
}

double input_correlator(const PureState& psi, const ProtocolSpec& spec) {
  return z_correlator(DensityMatrix::reduced(psi, error_kind(spec.kind) == ErrorKind::XType
                                                      ? QubitList{spec.targets[0]}
                                                      : spec.targets));
}

constexpr std::array<ProtocolKind, 4> kXTypeProtocols = {
    ProtocolKind::OnewayRotation, ProtocolKind::AdqcRotationCz, ProtocolKind::AdqcRotationCzSwap,
    ProtocolKind::AdqcCzGate};

void sample_equality(const CampaignConfig& cfg, std::uint64_t index, Rng& rng, SampleOutcome& out) {
  const int n = pick_size(cfg, rng);
  const ProtocolKind kind = kAllProtocols[index % kAllProtocols.size()];
  if (!is_rotation(kind) && n < 2) return;
  const PureState psi = random_pure_state(n, rng);
  ProtocolSpec spec = random_spec(kind, n, rng);
  const double c = input_correlator(psi, spec);
  for (double eps : cfg.epsilon_grid) {
    const double closed = closed_form_fidelity(c, eps);
    double lo = kInf;
    double hi = -kInf;
    for (double delta : cfg.delta_grid) {
      spec.epsilon = eps;
      spec.delta = delta;
      const double F = mean_gate_fidelity(run_protocol(psi, spec));
      out.check(std::abs(F - closed), "|F - closed form| " + params(spec), &psi);
      lo = std::min(lo, F);
      hi = std::max(hi, F);
    }
    out.check(hi - lo, "delta spread of F " + params(spec), &psi);
    out.observe_max("delta_spread", hi - lo);
  }
}

void sample_bound(const CampaignConfig& cfg, std::uint64_t index, Rng& rng, SampleOutcome& out,
                  bool use_sv) {
  const int n = pick_size(cfg, rng);
  const ProtocolKind kind = kXTypeProtocols[index % kXTypeProtocols.size()];
  if (kind == ProtocolKind::AdqcCzGate && n < 2) return;
  const PureState psi = random_pure_state(n, rng);
  ProtocolSpec spec = random_spec(kind, n, rng);
  const DensityMatrix rho = DensityMatrix::reduced(psi, {spec.targets[0]});
  const double S = purity_entanglement(rho);
  const double sv = von_neumann(rho);
  out.observe_min(use_sv ? "min_sv" : "min_S", use_sv ? sv : S);
  out.observe_max(use_sv ? "max_sv" : "max_S", use_sv ? sv : S);
  for (double eps : cfg.epsilon_grid) {
    const double bound = use_sv ? bound_sv(sv, eps) : bound_purity(S, eps);
    for (double delta : cfg.delta_grid) {
      spec.epsilon = eps;
      spec.delta = delta;
      const double F = mean_gate_fidelity(run_protocol(psi, spec));
      out.check(F - bound, std::string(use_sv ? "F - sv_bound " : "F - purity_bound ") + params(spec), &psi);
      out.observe_min("min_slack", bound - F);
    }
  }
}

void sample_main2(const CampaignConfig& cfg, Rng& rng, SampleOutcome& out) {
  const int n = pick_size(cfg, rng);
  if (n < 2) return;
  const PureState psi = random_pure_state(n, rng);
  ProtocolSpec spec = random_spec(ProtocolKind::AdqcCzSwapGate, n, rng);
  const double sv2 = von_neumann(DensityMatrix::reduced(psi, spec.targets));
  if (sv2 < 1.0) {
    out.count("filtered_below_domain");
    out.observe_max("max_filtered_sv2", sv2);
    return;
  }
  out.count("in_domain");
  out.observe_min("min_sv2", sv2);
  for (double eps : cfg.epsilon_grid) {
    const double bound = bound_sv2(sv2, eps);
    for (double delta : cfg.delta_grid) {
      spec.epsilon = eps;
      spec.delta = delta;
      const double F = mean_gate_fidelity(run_protocol(psi, spec));
      out.check(F - bound, "F - sv2_bound " + params(spec), &psi);
      out.observe_min("min_slack", bound - F);
    }
  }
}

void sample_equivalence(const CampaignConfig& cfg, Rng& rng, SampleOutcome& out) {
  const int n = pick_size(cfg, rng);
  const PureState psi = random_pure_state(n, rng);
  const ProtocolSpec base = random_spec(ProtocolKind::OnewayRotation, n, rng);
  for (double eps : cfg.epsilon_grid) {
    for (double delta : cfg.delta_grid) {
      std::array<ProtocolResult, 3> results = {
          run_protocol(psi, ProtocolSpec::rotation(ProtocolKind::OnewayRotation, base.targets[0], *base.u, eps, delta)),
          run_protocol(psi, ProtocolSpec::rotation(ProtocolKind::AdqcRotationCz, base.targets[0], *base.u, eps, delta)),
          run_protocol(psi, ProtocolSpec::rotation(ProtocolKind::AdqcRotationCzSwap, base.targets[0], *base.u, eps, delta))};
      const ProtocolSpec shown =
          ProtocolSpec::rotation(ProtocolKind::OnewayRotation, base.targets[0], *base.u, eps, delta);
      for (int k = 1; k < 3; ++k) {
        for (int j = 0; j < 2; ++j) {
          const auto& ref = results[0].branches[j];
          const auto& other = results[k].branches[j];
          out.check(phase_aligned_distance(ref.inaccurate, other.inaccurate),
                    "inaccurate branch mismatch vs " + std::string(protocol_name(kAllProtocols[k])) +
                        " j=" + std::to_string(j) + " " + params(shown),
                    &psi);
          out.check(1.0 - phase_invariant_overlap(ref.ideal.amplitudes(), other.ideal.amplitudes()),
                    "ideal branch mismatch vs " + std::string(protocol_name(kAllProtocols[k])) +
                        " j=" + std::to_string(j) + " " + params(shown),
                    &psi);
        }
      }
    }
  }
}

void sample_appendix(Campaign which, Rng& rng, SampleOutcome& out) {
  const PureState purification = random_density_purification(2, rng);
  const DensityMatrix rho = DensityMatrix::reduced(purification, {0, 1});
  const DensityMatrix uniform = maximally_mixed(2);
  switch (which) {
    case Campaign::Monotonicity: {
      const double slack = check_monotonicity(rho, uniform);
      out.check(-slack, "-slack of relative entropy monotonicity, sigma = I/4", &purification);
      const double mismatch = std::abs(slack - check_interm(rho));
      out.check(mismatch, "monotonicity(rho, I/4) != interm(rho)", &purification);
      out.observe_max("max_reduction_mismatch", mismatch);
      // Random full-rank sigma as well.
      const DensityMatrix sigma = random_density_matrix(2, rng);
      const double general = check_monotonicity(rho, sigma);
      out.check(-general, "-slack of relative entropy monotonicity, random sigma", &purification);
      out.observe_min("min_slack", std::min(slack, general));
      break;
    }
    case Campaign::Interm: {
      const double slack = check_interm(rho);
      out.check(-slack, "-slack of diagonal entropy inequality", &purification);
      out.observe_min("min_slack", slack);
      break;
    }
    case Campaign::Jonas: {
      const double slack = check_jonas(rho);
      const double gap = check_interm(rho) - slack;
      out.check(-slack, "-slack of S_v2 <= g(|C_zz|)", &purification);
      out.check(gap, "interm slack exceeds jonas slack", &purification);
      out.observe_min("min_slack", slack);
      out.observe_max("max_chain_gap", gap);
      break;
    }
    default:
      break;
  }
}

void sample_saturation(const CampaignConfig& cfg, std::uint64_t index, SampleOutcome& out) {
  const double S = cfg.samples > 1 ? static_cast<double>(index) / (cfg.samples - 1) : 0.0;
  for (int n : cfg.register_sizes) {
    if (n < 2 || n + 1 > kMaxQubits) continue;
    const PureState psi = saturating_single_qubit_register(S, n);
    const DensityMatrix rho = DensityMatrix::reduced(psi, {0});
    const double measured_S = purity_entanglement(rho);
    const double sv = von_neumann(rho);
    out.observe_max("max_S_mismatch", std::abs(measured_S - S));
    for (ProtocolKind kind : kXTypeProtocols) {
      for (double eps : cfg.epsilon_grid) {
        for (double delta : cfg.delta_grid) {
          const ProtocolSpec spec =
              is_rotation(kind) ? ProtocolSpec::rotation(kind, 0, 0.3 + index, eps, delta)
                                : ProtocolSpec::two_qubit(kind, 0, n - 1, eps, delta);
          const double F = mean_gate_fidelity(run_protocol(psi, spec));
          out.check(std::abs(F - bound_purity(S, eps)), "|F - purity_bound| " + params(spec), &psi);
          out.check(std::abs(F - bound_sv(sv, eps)), "|F - sv_bound| " + params(spec), &psi);
        }
      }
    }
    if (n >= 4) {
      const PureState pair = maximally_mixed_pair_register(n);
      const double sv2 = von_neumann(DensityMatrix::reduced(pair, {0, 1}));
      out.observe_max("max_sv2_mismatch", std::abs(sv2 - 2.0));
      for (double eps : cfg.epsilon_grid) {
        for (double delta : cfg.delta_grid) {
          const auto spec = ProtocolSpec::two_qubit(ProtocolKind::AdqcCzSwapGate, 0, 1, eps, delta);
          const double F = mean_gate_fidelity(run_protocol(pair, spec));
          out.check(std::abs(F - bound_sv2(sv2, eps)), "|F - sv2_bound| " + params(spec), &pair);
        }
      }
    }
  }
}

void sample_counterexample(const CampaignConfig& cfg, std::uint64_t index, SampleOutcome& out) {
  const double lambda = cfg.samples > 1 ? static_cast<double>(index) / (cfg.samples - 1) : 0.5;
  const DensityMatrix rho = rho_lambda(lambda);
  const double czz = z_correlator(rho);
  const double sv2 = von_neumann(rho);
  out.check(std::abs(czz - 1.0), "C_zz(rho_lambda) != 1 at lambda=" + format_double(lambda));
  out.observe_min("min_sv2", sv2);
  out.observe_max("max_sv2", sv2);
  if (sv2 < 1.0 - 1e-12) {
    try {
      (void)bound_sv2(sv2, std::numbers::pi / 2);
    } catch (const BoundDomainError&) {
      out.count("domain_rejections");
    }
  } else {
    out.count("sv2_bound_applicable");
  }
  const PureState psi = rho_lambda_register(lambda);
  for (double eps : cfg.epsilon_grid) {
    for (double delta : cfg.delta_grid) {
      const auto spec = ProtocolSpec::two_qubit(ProtocolKind::AdqcCzSwapGate, 0, 1, eps, delta);
      const double F = mean_gate_fidelity(run_protocol(psi, spec));
      out.check(std::abs(F - 1.0), "|F - 1| for C_zz = 1 " + params(spec), &psi);
      out.observe_min("min_F", F);
    }
  }
}

SampleOutcome run_sample(const CampaignConfig& cfg, Campaign which, std::uint64_t index) {
  Rng rng(derive_seed(cfg.seed, index));
  SampleOutcome out;
  switch (which) {
    case Campaign::EqualityOracle:
      sample_equality(cfg, index, rng, out);
      break;
    case Campaign::BoundMain:
      sample_bound(cfg, index, rng, out, false);
      break;
    case Campaign::BoundSv:
      sample_bound(cfg, index, rng, out, true);
      break;
    case Campaign::BoundMain2:
      sample_main2(cfg, rng, out);
      break;
    case Campaign::CircuitEquivalence:
      sample_equivalence(cfg, rng, out);
      break;
    case Campaign::Jonas:
    case Campaign::Monotonicity:
    case Campaign::Interm:
      sample_appendix(which, rng, out);
      break;
    case Campaign::Saturation:
      sample_saturation(cfg, index, out);
      break;
    case Campaign::Counterexample:
      sample_counterexample(cfg, index, out);
      break;
  }
  return out;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config, Campaign which) {
  if (config.samples < 1) throw std::invalid_argument("campaign: samples must be >= 1");
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("campaign: tolerance must be > 0");
  if (config.register_sizes.empty() || config.epsilon_grid.empty() || config.delta_grid.empty()) {
    throw std::invalid_argument("campaign: grids and register sizes must be non-empty");
  }
  for (int n : config.register_sizes) {
    if (n < 1 || n + 1 > kMaxQubits) throw std::invalid_argument("campaign: register size out of range");
  }

  const auto samples = static_cast<std::size_t>(config.samples);
  std::vector<SampleOutcome> outcomes(samples);
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(samples));

  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < samples; i += threads) outcomes[i] = run_sample(config, which, i);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Aggregate in sample order: ties resolve to the lowest sample index.
  CampaignReport report;
  report.config = config;
  std::map<std::string, double> mins;
  std::map<std::string, double> maxs;
  for (std::size_t i = 0; i < samples; ++i) {
    const SampleOutcome& o = outcomes[i];
    report.checks_run += o.checks;
    if (o.checks > 0 && (!report.worst_case || o.violation > report.max_violation)) {
      report.max_violation = o.violation;
      report.worst_case = WorstCase{i, o.description,
                                    o.witness ? format_state_file(*o.witness) : std::string{}};
    }
    for (const auto& [k, v] : o.mins) {
      auto [it, fresh] = mins.emplace(k, v);
      if (!fresh) it->second = std::min(it->second, v);
    }
    for (const auto& [k, v] : o.maxs) {
      auto [it, fresh] = maxs.emplace(k, v);
      if (!fresh) it->second = std::max(it->second, v);
    }
    for (const auto& [k, v] : o.counts) report.details[k] += v;
  }
  for (const auto& [k, v] : mins) report.details[k] = v;
  for (const auto& [k, v] : maxs) report.details[k] = v;
  report.max_violation = std::max(report.max_violation, 0.0);
  report.passed = report.checks_run > 0 && report.max_violation <= config.tolerance;
  return report;
}

}  // namespace adqc
