#include "godeaux/canring.hpp"
#include "godeaux/datasets.hpp"
#include "godeaux/instance.hpp"
#include "godeaux/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace godeaux;

namespace {

int emit(const CommandOutput& out, const std::string& format) {
  std::cout << (format == "structured" ? out.structured() : out.text());
  return out.exit_code();
}

Instance read_instance(const std::string& path) { return path.empty() ? default_instance() : load_instance(path); }

std::string read_data(const std::string& path, const std::string& fallback) {
  return path.empty() ? fallback : read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical ring, topology and T^1 degrees of a stable Godeaux surface"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string instance_path;
  int max_degree = 12;
  std::string format = "text";
  unsigned jobs = 1;
  app.add_option("--instance", instance_path, "Instance file (default: the shipped surface)");
  app.add_option("--max-degree", max_degree, "Verification horizon for R(X)")->check(CLI::Range(0, 40));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));

  auto* canring = app.add_subcommand("canring", "Compute generators, relations and every check");

  auto* verify = app.add_subcommand("verify", "Run one verification");
  std::string target;
  VerifyOptions opts;
  int degree_bound = 0;
  verify->add_option("target", target, "tricanonical | base-locus | fourcanonical | paper-generators")
      ->required()
      ->check(CLI::IsMember({"tricanonical", "base-locus", "fourcanonical", "paper-generators"}));
  verify->add_option("--m", opts.base_locus_degrees, "Base locus degrees")->delimiter(',')->check(CLI::Range(2, 12));
  verify->add_option("--degree-bound", degree_bound, "Base locus degree bound")->check(CLI::Range(2, 60));
  verify->add_option("--d-max", opts.fourcanonical_max, "Largest power of the quartics")->check(CLI::Range(4, 8));

  auto* topology = app.add_subcommand("topology", "Homology and fundamental group of the chain model");
  std::string topology_path;
  topology->add_option("--data", topology_path, "Topology data file (default: shipped model)");

  auto* defcalc = app.add_subcommand("defcalc", "Degrees of T^1 on glued curves");
  std::string defcalc_path;
  defcalc->add_option("--data", defcalc_path, "Configuration file (default: shipped configurations)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*topology) return emit(run_topology(parse_topology(read_data(topology_path, default_topology_text()))), format);
    if (*defcalc) return emit(run_defcalc(parse_defcalc(read_data(defcalc_path, default_defcalc_text()))), format);

    const CanonicalRing cr(read_instance(instance_path), jobs);
    if (*canring) return emit(run_canring(cr, max_degree), format);

    opts.max_degree = max_degree;
    if (degree_bound > 0) opts.degree_bound = degree_bound;
    if (target == "tricanonical") opts.target = VerifyTarget::tricanonical;
    if (target == "base-locus") opts.target = VerifyTarget::base_locus;
    if (target == "fourcanonical") opts.target = VerifyTarget::fourcanonical;
    if (target == "paper-generators") opts.target = VerifyTarget::paper_generators;
    return emit(run_verify(cr, opts), format);
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    std::cerr << "error: at position " << e.position() << ": " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
