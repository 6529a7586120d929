// spin3: three-qubit spin precession simulator.
//
//   spin3 run <scenario> [--out file.csv]
//   spin3 verify [--section precession|probabilities|tangles|frames|angmom]
//   spin3 catalog
//   spin3 classify <scenario>
//
// Exit codes: 0 success, 1 verification or runtime failure, 2 configuration error.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "spin3/angmom.hpp"
#include "spin3/config.hpp"
#include "spin3/report.hpp"
#include "spin3/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfigError = 2;

std::string complex_text(spin3::cd z) {
  std::ostringstream os;
  os << std::showpos << std::fixed << std::setprecision(6) << z.real() << z.imag() << "i";
  return os.str();
}

int run_command(const std::string& path, const std::string& out_path) {
  const spin3::Scenario scenario = spin3::load_scenario(path);
  spin3::RunSummary summary;
  if (out_path.empty()) {
    summary = spin3::run(scenario, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kFailure;
    }
    summary = spin3::run(scenario, out);
  }
  spin3::write_summary(std::cerr, summary);
  return kOk;
}

int catalog_command() {
  for (const auto& entry : spin3::catalog()) {
    std::cout << entry.label.str() << " =";
    for (int n = 0; n < 8; ++n) {
      const spin3::cd z = entry.state[n];
      if (std::abs(z) > 1e-15) {
        std::cout << " " << complex_text(z) << " |" << spin3::BasisLabel::from_index(n).str() << ">";
      }
    }
    std::cout << "\n";
  }
  return kOk;
}

int classify_command(const std::string& path) {
  const spin3::Scenario scenario = spin3::load_scenario(path);
  const spin3::ThreeQubitState state = spin3::make_initial_state(scenario.state);
  const spin3::Classification c = spin3::classify(state);
  const auto& rows = spin3::catalog();
  for (std::size_t n = 0; n < rows.size(); ++n) {
    std::cout << std::left << std::setw(22) << rows[n].label.str() << complex_text(c.coefficients[n])
              << "  weight " << std::fixed << std::setprecision(6) << std::norm(c.coefficients[n])
              << "\n";
  }
  std::cout << "dominant: " << rows[c.dominant].label.str() << (c.ambiguous ? " (ambiguous)" : "")
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangled three-spin precession in constant electromagnetic fields"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  auto* run = app.add_subcommand("run", "Simulate a scenario and write CSV");
  run->add_option("scenario", scenario_path, "Scenario file")->required();
  run->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string section;
  bool mutate = false;
  auto* verify = app.add_subcommand("verify", "Run the golden-value and oracle checks");
  verify->add_option("--section", section, "Only run one section")
      ->check(CLI::IsMember({"precession", "probabilities", "tangles", "frames", "angmom"}));
  verify->add_flag("--mutate", mutate, "Perturb the numeric pipeline (negative control)")
      ->group("");

  app.add_subcommand("catalog", "Print the coupled angular-momentum basis");

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "Expand a scenario's initial state over the catalog");
  classify->add_option("scenario", classify_path, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return run_command(scenario_path, out_path);
    if (*verify) {
      spin3::VerifyOptions options;
      if (!section.empty()) options.section = section;
      options.mutate = mutate;
      const spin3::VerifyReport report = spin3::verify(options);
      spin3::write_report(std::cout, report);
      return report.passed() ? kOk : kFailure;
    }
    if (app.got_subcommand("catalog")) return catalog_command();
    if (*classify) return classify_command(classify_path);
  } catch (const spin3::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const spin3::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
