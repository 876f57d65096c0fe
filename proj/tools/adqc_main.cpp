// adqc: bound curves, verification campaigns and single protocol demos.
//
// Exit status: 0 success / campaign passed, 1 campaign failed, 2 usage or I/O error.

#include "adqc/io.hpp"
#include "adqc/protocols.hpp"
#include "adqc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

struct CurvesArgs {
  std::string figure;
  int grid = 201;
  std::vector<double> s_values = {0.2, 0.4, 0.6, 0.8, 1.0};
  std::string output;
  std::string format = "csv";
};

int run_curves(const CurvesArgs& args) {
  if (args.format != "csv") throw UsageError("curves only support --format csv");
  adqc::CurveRequest request;
  request.figure = adqc::parse_figure(args.figure);
  request.resolution = args.grid;
  request.s_values = args.s_values;
  std::ostringstream csv;
  adqc::write_curves_csv(request, csv);
  write_output(args.output, csv.str());
  return 0;
}

struct VerifyArgs {
  std::string campaign;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance;
  std::vector<int> sizes;
  std::string output;
  std::string format = "json";
  int threads = 0;
};

int run_verify(const VerifyArgs& args) {
  if (args.format != "json") throw UsageError("verify only supports --format json");
  adqc::Campaign which;
  try {
    which = adqc::parse_campaign(args.campaign);
  } catch (const adqc::UnknownCampaign& e) {
    std::string known;
    for (auto c : adqc::kAllCampaigns) known += " " + std::string(adqc::campaign_name(c));
    throw UsageError(std::string(e.what()) + "; known campaigns:" + known);
  }
  adqc::CampaignConfig config = adqc::default_config(which);
  if (args.samples) config.samples = *args.samples;
  if (args.seed) config.seed = *args.seed;
  if (args.tolerance) config.tolerance = *args.tolerance;
  if (!args.sizes.empty()) config.register_sizes = args.sizes;
  config.threads = args.threads;
  adqc::CampaignReport report;
  try {
    report = adqc::run_campaign(config, which);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << config.name << ": " << (report.passed ? "PASSED" : "FAILED")
            << " checks=" << report.checks_run
            << " max_violation=" << adqc::format_double(report.max_violation)
            << " tolerance=" << adqc::format_double(config.tolerance) << std::endl;
  write_output(args.output, adqc::report_to_json(report).dump(2) + "\n");
  return report.passed ? 0 : kExitFailure;
}

struct DemoArgs {
  std::string protocol;
  std::string state_path;
  std::string preset;
  std::vector<int> targets;
  double u = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::string format = "table";
};

int run_demo(const DemoArgs& args) {
  if (args.format != "table" && args.format != "json") {
    throw UsageError("demo supports --format table or json");
  }
  const adqc::ProtocolKind kind = adqc::parse_protocol(args.protocol);
  if (args.state_path.empty() == args.preset.empty()) {
    throw UsageError("demo needs exactly one of --state or --preset");
  }
  const adqc::PureState input = args.state_path.empty()
                                    ? adqc::make_preset(args.preset)
                                    : adqc::load_state_file(args.state_path).state;
  adqc::ProtocolSpec spec;
  if (adqc::is_rotation(kind)) {
    const int target = args.targets.empty() ? 0 : args.targets.front();
    if (args.targets.size() > 1) throw UsageError("rotations take a single target");
    spec = adqc::ProtocolSpec::rotation(kind, target, args.u, args.epsilon, args.delta);
  } else {
    const adqc::QubitList t = args.targets.empty() ? adqc::QubitList{0, 1} : args.targets;
    if (t.size() != 2) throw UsageError("two-qubit gates take exactly two targets");
    spec = adqc::ProtocolSpec::two_qubit(kind, t[0], t[1], args.epsilon, args.delta);
  }
  const adqc::FidelityReport report = adqc::analyze(input, spec);
  if (args.format == "json") {
    std::cout << adqc::report_to_json(report).dump(2) << '\n';
  } else {
    adqc::print_fidelity_table(report, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inaccurate measurement-driven gates: fidelity bounds and verification"};
  app.require_subcommand(1);

  CurvesArgs curves;
  auto* curves_cmd = app.add_subcommand("curves", "Emit bound curve data as CSV");
  curves_cmd->add_option("figure", curves.figure, "fig5, fig6 or fig7")->required();
  curves_cmd->add_option("--grid", curves.grid, "Grid points (>= 2)");
  curves_cmd->add_option("--s", curves.s_values, "S values for fig5")->delimiter(',');
  curves_cmd->add_option("--output", curves.output, "Output path (default stdout)");
  curves_cmd->add_option("--format", curves.format, "csv");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification campaign");
  verify_cmd->add_option("campaign", verify.campaign, "Campaign name")->required();
  verify_cmd->add_option("--samples", verify.samples, "Number of samples");
  verify_cmd->add_option("--seed", verify.seed, "Campaign seed");
  verify_cmd->add_option("--tolerance", verify.tolerance, "Pass threshold on max violation");
  verify_cmd->add_option("--sizes", verify.sizes, "Register sizes")->delimiter(',');
  verify_cmd->add_option("--output", verify.output, "JSON report path (default stdout)");
  verify_cmd->add_option("--format", verify.format, "json");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads, 0 = all cores");

  DemoArgs demo;
  auto* demo_cmd = app.add_subcommand("demo", "Analyze one protocol run");
  demo_cmd->add_option("protocol", demo.protocol, "Protocol kind, e.g. ADQC_ROTATION_CZ")->required();
  demo_cmd->add_option("--state", demo.state_path, "State file");
  demo_cmd->add_option("--preset", demo.preset, "bell, ghz:n, product:n, saturate:S, rho_lambda:l");
  demo_cmd->add_option("--targets", demo.targets, "Target qubits")->delimiter(',');
  demo_cmd->add_option("--u", demo.u, "Rotation angle (radians)");
  demo_cmd->add_option("--epsilon", demo.epsilon, "Measurement polar deviation (radians)");
  demo_cmd->add_option("--delta", demo.delta, "Measurement phase deviation (radians)");
  demo_cmd->add_option("--format", demo.format, "table or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*curves_cmd) return run_curves(curves);
    if (*verify_cmd) return run_verify(verify);
    if (*demo_cmd) return run_demo(demo);
  } catch (const std::exception& e) {
    std::cerr << "adqc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
