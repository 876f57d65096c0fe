#include "adqc/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace adqc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, const std::string& context) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw FormatError(context + ": bad number '" + std::string(token) + "'");
  return value;
}

long long parse_integer(std::string_view token, const std::string& context) {
  long long value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw FormatError(context + ": bad integer '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// "name:arg" -> arg, or empty.
std::optional<std::string_view> preset_arg(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  if (name.size() == prefix.size()) return std::string_view{};
  if (name[prefix.size()] != ':') return std::nullopt;
  return name.substr(prefix.size() + 1);
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                       std::chars_format::general, 17);
  if (ec != std::errc{}) throw FormatError("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

StateFile parse_state_file(std::istream& in) {
  std::optional<int> qubits;
  std::optional<std::string> label;
  ComplexVector amps;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string context = "state file line " + std::to_string(line_no);
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      const std::string_view comment = trim(line.substr(hash + 1));
      if (comment.substr(0, 6) == "label:") label = std::string(trim(comment.substr(6)));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (!qubits) {
      if (line.substr(0, 7) != "qubits:") throw FormatError(context + ": expected 'qubits: n'");
      const long long n = parse_integer(trim(line.substr(7)), context);
      if (n < 1 || n > kMaxQubits) throw FormatError(context + ": qubit count must be in [1, 8]");
      qubits = static_cast<int>(n);
      amps = ComplexVector::Zero(Eigen::Index{1} << n);
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != 3) throw FormatError(context + ": expected 'index real imag'");
    const long long index = parse_integer(tokens[0], context);
    if (index < 0 || index >= amps.size()) throw FormatError(context + ": index out of range");
    amps(index) = Complex(parse_number(tokens[1], context), parse_number(tokens[2], context));
  }
  if (!qubits) throw FormatError("state file: missing 'qubits: n' header");
  const double norm2 = amps.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw FormatError("state file: squared norm " + format_double(norm2) + " is not 1 within 1e-9");
  }
  // Inputs that already pass as normalized are kept bit-for-bit so that
  // written states replay exactly.
  if (std::abs(norm2 - 1.0) <= kNormTolerance) return StateFile{PureState(amps), label, 1.0};
  const double correction = 1.0 / std::sqrt(norm2);
  return StateFile{PureState(amps * correction), label, correction};
}

StateFile load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open state file '" + path + "'");
  return parse_state_file(in);
}

std::string format_state_file(const PureState& state, const std::optional<std::string>& label) {
  std::string out = "qubits: " + std::to_string(state.qubits()) + "\n";
  if (label) out += "# label: " + *label + "\n";
  for (Eigen::Index i = 0; i < state.dim(); ++i) {
    const Complex a = state[i];
    if (a == Complex(0.0)) continue;
    out += std::to_string(i) + " " + format_double(a.real()) + " " + format_double(a.imag()) + "\n";
  }
  return out;
}

PureState make_preset(std::string_view name) {
  auto number = [&](std::string_view arg) { return parse_number(arg, "preset '" + std::string(name) + "'"); };
  auto count = [&](std::string_view arg) {
    const long long n = parse_integer(arg, "preset '" + std::string(name) + "'");
    if (n < 1 || n > kMaxQubits) throw FormatError("preset '" + std::string(name) + "': qubit count out of range");
    return static_cast<int>(n);
  };
  if (name == "bell") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = v(3) = std::numbers::sqrt2 / 2.0;
    return PureState::normalized(v);
  }
  if (auto arg = preset_arg(name, "ghz"); arg && !arg->empty()) {
    const int n = count(*arg);
    if (n < 2) throw FormatError("preset ghz needs at least 2 qubits");
    ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << n);
    v(0) = v(v.size() - 1) = 1.0;
    return PureState::normalized(v);
  }
  if (auto arg = preset_arg(name, "product"); arg && !arg->empty()) {
    return PureState::basis(count(*arg), 0);
  }
  if (auto arg = preset_arg(name, "saturate"); arg && !arg->empty()) {
    const auto colon = arg->find(':');
    const double S = number(arg->substr(0, colon));
    const int n = colon == std::string_view::npos ? 2 : count(arg->substr(colon + 1));
    try {
      return saturating_single_qubit_register(S, n);
    } catch (const DomainError& e) {
      throw FormatError(std::string("preset saturate: ") + e.what());
    }
  }
  if (auto arg = preset_arg(name, "rho_lambda"); arg && !arg->empty()) {
    try {
      return rho_lambda_register(number(*arg));
    } catch (const DomainError& e) {
      throw FormatError(std::string("preset rho_lambda: ") + e.what());
    }
  }
  throw FormatError("unknown preset '" + std::string(name) + "'");
}

Figure parse_figure(std::string_view name) {
  if (name == "fig5") return Figure::Fig5;
  if (name == "fig6") return Figure::Fig6;
  if (name == "fig7") return Figure::Fig7;
  throw FormatError("unknown figure '" + std::string(name) + "'");
}

void write_curves_csv(const CurveRequest& request, std::ostream& out) {
  if (request.resolution < 2) throw FormatError("curves: grid resolution must be at least 2");
  const int n = request.resolution;
  // Grid point k of [lo, hi], with both ends hit exactly.
  auto grid = [n](double lo, double hi, int k) {
    return k == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(k) / (n - 1);
  };
  switch (request.figure) {
    case Figure::Fig5: {
      if (request.s_values.empty()) throw FormatError("curves: fig5 needs at least one S value");
      for (double S : request.s_values) {
        if (!(S >= 0.0 && S <= 1.0)) throw FormatError("curves: S values must lie in [0, 1]");
      }
      out << "epsilon";
      for (double S : request.s_values) out << ",S=" << format_double(S);
      out << '\n';
      for (int k = 0; k < n; ++k) {
        const double eps = grid(0.0, std::numbers::pi, k);
        out << format_double(eps);
        for (double S : request.s_values) out << ',' << format_double(bound_purity(S, eps));
        out << '\n';
      }
      break;
    }
    case Figure::Fig6:
      out << "s_v,one_minus_finv_sq\n";
      for (int k = 0; k < n; ++k) {
        const double s = grid(0.0, 1.0, k);
        const double c = f_inverse(s);
        out << format_double(s) << ',' << format_double(1.0 - c * c) << '\n';
      }
      break;
    case Figure::Fig7:
      out << "s_v2,one_minus_ginv_sq\n";
      for (int k = 0; k < n; ++k) {
        const double s = grid(1.0, 2.0, k);
        const double c = g_inverse(s);
        out << format_double(s) << ',' << format_double(1.0 - c * c) << '\n';
      }
      break;
  }
}

nlohmann::ordered_json report_to_json(const CampaignReport& report) {
  nlohmann::ordered_json j;
  j["campaign"] = report.config.name;
  j["seed"] = report.config.seed;
  j["samples"] = report.config.samples;
  j["tolerance"] = report.config.tolerance;
  j["checks_run"] = report.checks_run;
  j["max_violation"] = report.max_violation;
  if (report.worst_case) {
    j["worst_case"] = {{"sample", report.worst_case->sample},
                       {"description", report.worst_case->description},
                       {"state", report.worst_case->state}};
  } else {
    j["worst_case"] = nullptr;
  }
  j["passed"] = report.passed;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.details) details[k] = v;
  j["details"] = details;
  return j;
}

nlohmann::ordered_json report_to_json(const FidelityReport& report) {
  nlohmann::ordered_json j;
  j["protocol"] = std::string(protocol_name(report.spec.kind));
  j["targets"] = report.spec.targets;
  j["u"] = report.spec.u ? nlohmann::ordered_json(*report.spec.u) : nlohmann::ordered_json(nullptr);
  j["epsilon"] = report.spec.epsilon;
  j["delta"] = report.spec.delta;
  j["branch_probabilities"] = {report.branch_probabilities[0], report.branch_probabilities[1]};
  j["simulated_F"] = report.simulated_F;
  j["closed_form_F"] = report.closed_form_F;
  j["correlator"] = report.correlator_used;
  j["analyzed_qubits"] = report.analyzed_qubits;
  const auto& e = report.entanglement;
  if (e.purity_S) j["S"] = *e.purity_S;
  j[e.purity_S ? "S_v" : "S_v2"] = e.von_neumann;
  if (e.bloch_length_r) j["bloch_length_r"] = *e.bloch_length_r;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const auto& b : report.bounds) {
    bounds[b.name] = {{"value", b.value},
                      {"slack", b.slack},
                      {"saturated", std::abs(b.slack) <= kViolationTolerance}};
  }
  j["bounds"] = bounds;
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) violations.push_back({{"bound", v.bound}, {"magnitude", v.magnitude}});
  j["violations"] = violations;
  j["domain_note"] = report.domain_note ? nlohmann::ordered_json(*report.domain_note) : nlohmann::ordered_json(nullptr);
  return j;
}

void print_fidelity_table(const FidelityReport& report, std::ostream& out) {
  const auto row = [&](std::string_view key, const std::string& value) {
    out << std::left << std::setw(22) << key << value << '\n';
  };
  std::string targets;
  for (std::size_t i = 0; i < report.spec.targets.size(); ++i) {
    targets += (i ? "," : "") + std::to_string(report.spec.targets[i]);
  }
  row("protocol", std::string(protocol_name(report.spec.kind)));
  row("targets", targets);
  if (report.spec.u) row("u", format_double(*report.spec.u));
  row("epsilon", format_double(report.spec.epsilon));
  row("delta", format_double(report.spec.delta));
  row("p(j=0)", format_double(report.branch_probabilities[0]));
  row("p(j=1)", format_double(report.branch_probabilities[1]));
  row("F (simulated)", format_double(report.simulated_F));
  row("F (closed form)", format_double(report.closed_form_F));
  const auto& e = report.entanglement;
  row(e.purity_S ? "C_z" : "C_zz", format_double(report.correlator_used));
  if (e.purity_S) row("S", format_double(*e.purity_S));
  row(e.purity_S ? "S_v" : "S_v2", format_double(e.von_neumann));
  if (e.bloch_length_r) row("bloch length r", format_double(*e.bloch_length_r));
  for (const auto& b : report.bounds) {
    const bool saturated = std::abs(b.slack) <= kViolationTolerance;
    row(b.name, format_double(b.value) + (saturated ? "  (saturated)" : ""));
  }
  if (report.domain_note) row("sv2_bound", *report.domain_note);
  if (report.violations.empty()) {
    row("violations", "none");
  } else {
    for (const auto& v : report.violations) row("VIOLATION", v.bound + " by " + format_double(v.magnitude));
  }
}

}  // namespace adqc
