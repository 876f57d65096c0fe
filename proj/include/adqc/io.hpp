// io.hpp
// Text formats used by the command line front end: state files, named input
// presets, bound-curve CSV and JSON reports.
//
// State file format:
//   qubits: <n>
//   <index> <real> <imag>     one line per nonzero amplitude, index in [0, 2^n)
//   # ...                     comment; "# label: <text>" sets the label

#pragma once

#include "adqc/protocols.hpp"
#include "adqc/verify.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace adqc {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest-round-trip-safe, locale-independent text with 17 significant digits.
std::string format_double(double x);

struct StateFile {
  PureState state;
  std::optional<std::string> label;
  double norm_correction = 1.0;  // factor applied to the amplitudes on load
};

/// Throws FormatError. Amplitudes whose squared norm is within 1e-9 of one
/// are renormalized (left untouched within 1e-12); anything further off is
/// rejected.
StateFile parse_state_file(std::istream& in);
StateFile load_state_file(const std::string& path);
std::string format_state_file(const PureState& state, const std::optional<std::string>& label = {});

/// "bell", "ghz:n", "product:n", "saturate:S[:n]", "rho_lambda:l" (four qubits).
PureState make_preset(std::string_view name);

enum class Figure { Fig5, Fig6, Fig7 };
Figure parse_figure(std::string_view name);

struct CurveRequest {
  Figure figure = Figure::Fig5;
  int resolution = 201;
  std::vector<double> s_values = {0.2, 0.4, 0.6, 0.8, 1.0};  // fig5 only
};

/// fig5: epsilon over [0, pi] and one column 1 - S sin^2(epsilon/2) per S.
/// fig6: s_v over [0, 1] and 1 - f_inverse(s_v)^2.
/// fig7: s_v2 over [1, 2] and 1 - g_inverse(s_v2)^2.
void write_curves_csv(const CurveRequest& request, std::ostream& out);

nlohmann::ordered_json report_to_json(const CampaignReport& report);
nlohmann::ordered_json report_to_json(const FidelityReport& report);

/// Human-readable table of a protocol analysis.
void print_fidelity_table(const FidelityReport& report, std::ostream& out);

}  // namespace adqc
