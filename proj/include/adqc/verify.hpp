// verify.hpp
// Relative entropy and the dephasing channel, signed-slack checks of the
// entropy inequalities, engineered saturating registers, and seeded
// randomized campaigns over every fidelity relation.

#pragma once

#include "adqc/entropy.hpp"
#include "adqc/protocols.hpp"
#include "adqc/qcore.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adqc {

/// Tr(rho log2 rho) - Tr(rho log2 sigma); +infinity when rho has weight on
/// an eigenvector of sigma with eigenvalue below 1e-12.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Erases all off-diagonal elements of a two-qubit state.
DensityMatrix dephasing_map(const DensityMatrix& rho);

DensityMatrix maximally_mixed(int n_qubits);

/// H(rho||sigma) - H(E(rho)||E(sigma)). +infinity when the left side is
/// infinite (vacuous), -infinity when only the right side is.
double check_monotonicity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho log2 rho) - sum_ab rho_ab log2 rho_ab over the diagonal.
double check_interm(const DensityMatrix& rho);

/// g(|C_zz|) - S_v2(rho).
double check_jonas(const DensityMatrix& rho);

/// Pure register whose qubit 0 reduces to diag((1+sqrt(1-S))/2, (1-sqrt(1-S))/2),
/// purified by qubit 1; remaining qubits are |0>.
PureState saturating_single_qubit_register(double S, int total_qubits);

/// Qubits 0 and 1 each share a Bell pair with qubits 2 and 3, so the pair
/// (0,1) reduces to the maximally mixed state; remaining qubits are |0>.
PureState maximally_mixed_pair_register(int total_qubits);

/// lambda|00><00| + (1-lambda)|11><11|.
DensityMatrix rho_lambda(double lambda);
/// Four-qubit purification sqrt(l)|0000> + sqrt(1-l)|1111>; pair (0,1) reduces to rho_lambda.
PureState rho_lambda_register(double lambda);

/// Haar state on 2n qubits whose first n qubits reduce to a sample of the
/// induced ensemble with equal environment dimension.
PureState random_density_purification(int n_qubits, Rng& rng);
DensityMatrix random_density_matrix(int n_qubits, Rng& rng);
DensityMatrix random_density_matrix(int n_qubits, std::uint64_t seed);

enum class Campaign {
  EqualityOracle,
  BoundMain,
  BoundSv,
  BoundMain2,
  CircuitEquivalence,
  Jonas,
  Monotonicity,
  Interm,
  Saturation,
  Counterexample,
};

class UnknownCampaign : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::array<Campaign, 10> kAllCampaigns = {
    Campaign::EqualityOracle, Campaign::BoundMain,    Campaign::BoundSv,
    Campaign::BoundMain2,     Campaign::CircuitEquivalence, Campaign::Jonas,
    Campaign::Monotonicity,   Campaign::Interm,       Campaign::Saturation,
    Campaign::Counterexample};

std::string_view campaign_name(Campaign c);
/// Throws UnknownCampaign.
Campaign parse_campaign(std::string_view name);

struct CampaignConfig {
  std::string name;
  int samples = 100;
  std::uint64_t seed = 0;
  std::vector<double> epsilon_grid;
  std::vector<double> delta_grid;
  std::vector<int> register_sizes;
  double tolerance = 1e-9;
  int threads = 1;  // 0 = all hardware threads; results do not depend on it
};

/// Campaign-specific grids, register sizes and tolerance.
CampaignConfig default_config(Campaign c);

struct WorstCase {
  std::uint64_t sample = 0;
  std::string description;
  std::string state;  // state file text, replayable through the CLI
};

struct CampaignReport {
  CampaignConfig config;
  long long checks_run = 0;
  double max_violation = 0.0;
  std::optional<WorstCase> worst_case;
  bool passed = false;
  std::map<std::string, double> details;
};

CampaignReport run_campaign(const CampaignConfig& config, Campaign which);

}  // namespace adqc
