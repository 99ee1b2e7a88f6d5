// Command-line front end: simulate walks, perform cross-model transforms,
// verify distribution-level equivalence, and account for construction sizes.
//
// Exit codes: 0 success/pass, 2 parse failure, 3 spec invariant violation,
// 4 inapplicable transform, 5 verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperwalk/equivalence.hpp"
#include "hyperwalk/errors.hpp"
#include "hyperwalk/json_io.hpp"

namespace {

using namespace hyperwalk;

struct Options {
  std::string spec_path;
  std::string state;
  std::string transform;
  std::string result_path;
  std::string chain;
  std::string out_path;
  int steps = 10;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  bool strong = false;
};

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw parse_error("cannot open output file: " + out_path);
  out << text;
}

StateVector load_state(const Options& opt, const WalkInstance& w) {
  if (opt.state.empty()) {
    Rng rng(opt.seed);
    return {random_state(w.basis->size(), rng), w.basis};
  }
  // Inline JSON is accepted as well as a path to a JSON file.
  Json doc;
  try {
    doc = Json::parse(opt.state);
  } catch (const Json::parse_error&) {
    doc = load_json_file(opt.state);
  }
  return state_from_json(doc, w);
}

int cmd_simulate(const Options& opt) {
  const WalkInstance w = walk_from_json(load_json_file(opt.spec_path));
  const StateVector psi = load_state(opt, w);
  const Trajectory traj = run(w, psi, opt.steps);

  std::ostringstream csv;
  csv << "# model: " << model_name(w.model)
      << "; measurement: " << (w.measurement.total() ? "total" : "partial")
      << "; basis: " << w.basis->size() << "\n";
  csv << "step,vertex,probability\n";
  for (int n = 0; n < static_cast<int>(traj.states.size()); ++n) {
    const Eigen::VectorXd p = measure_vertices(traj.states[n], w.measurement);
    for (int v = 0; v < p.size(); ++v)
      csv << n << "," << v << "," << format_double(p(v)) << "\n";
  }
  write_output(opt.out_path, csv.str());
  return 0;
}

int cmd_transform(const Options& opt) {
  if (opt.transform.empty()) throw parse_error("--transform is required");
  const WalkInstance w = walk_from_json(load_json_file(opt.spec_path));
  const TransformResult tr = apply_transform(opt.transform, w);
  write_output(opt.out_path, transform_result_to_json(tr).dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& opt) {
  const WalkInstance w = walk_from_json(load_json_file(opt.spec_path));
  TransformResult tr;
  if (!opt.result_path.empty()) {
    tr = transform_result_from_json(load_json_file(opt.result_path));
  } else if (!opt.transform.empty()) {
    tr = apply_transform(opt.transform, w);
  } else {
    throw parse_error("verify needs --transform or --result");
  }
  const StateVector psi = load_state(opt, w);
  const bool strong =
      opt.strong || tr.name == "generalized-hyperwalk-from-staggered";
  const EquivalenceReport rep =
      strong ? check_strong_instance(w, psi, tr, opt.steps, opt.tol)
             : check_instance(w, psi, tr, opt.steps, opt.tol);
  write_output(opt.out_path, equivalence_report_to_json(rep).dump(2) + "\n");
  return rep.pass ? 0 : 5;
}

int cmd_chain_size(const Options& opt) {
  const WalkShape shape = shape_from_json(load_json_file(opt.spec_path));
  std::vector<std::string> chain;
  std::stringstream ss(opt.chain);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) chain.push_back(name);
  const auto sizes = transform_chain_size(shape, chain);

  Json links = Json::array();
  for (const auto& [link_name, report] : sizes)
    links.push_back(Json{{"transform", link_name},
                         {"vertices", report.vertex_count},
                         {"basis", report.basis_size},
                         {"operators", report.operator_count}});
  write_output(opt.out_path, Json{{"chain", std::move(links)}}.dump(2) + "\n");
  return 0;
}

int cmd_info(const Options& opt) {
  const WalkInstance w = walk_from_json(load_json_file(opt.spec_path));
  const SizeReport sizes = shape_sizes(shape_of(w));
  std::ostringstream os;
  os << "model: " << model_name(w.model) << "\n"
     << "vertices: " << sizes.vertex_count << "\n"
     << "basis states: " << sizes.basis_size << "\n"
     << "stages per cycle: " << w.cycle_length() << "\n"
     << "measurement: " << (w.measurement.total() ? "total" : "partial") << "\n";
  for (std::size_t k = 0; k < w.stages.size(); ++k)
    os << "stage " << k
       << " unitarity deviation: " << format_double(unitarity_deviation(w.stages[k].matrix()))
       << "\n";
  write_output(opt.out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum walks on graphs and hypergraphs: simulation, "
               "cross-model transformation, and equivalence verification"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env_tol = std::getenv("HYPERWALK_TOL")) {
    try {
      opt.tol = std::stod(env_tol);
    } catch (...) {
      std::cerr << "invalid HYPERWALK_TOL value\n";
      return 2;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec_path, "walk specification (JSON)")->required();
    sub->add_option("--out", opt.out_path, "output path (default: stdout)");
  };

  CLI::App* simulate = app.add_subcommand("simulate", "run a walk and emit step,vertex,probability CSV");
  add_common(simulate);
  simulate->add_option("--state", opt.state, "initial state (path or inline JSON)");
  simulate->add_option("--steps", opt.steps, "number of stage applications")->required();
  simulate->add_option("--seed", opt.seed, "seed for the default random state");

  CLI::App* transform = app.add_subcommand("transform", "transform a walk into another model");
  add_common(transform);
  transform->add_option("--transform", opt.transform, "transform name")->required();

  CLI::App* verify = app.add_subcommand("verify", "check distribution equivalence of a transform");
  add_common(verify);
  verify->add_option("--transform", opt.transform, "transform name");
  verify->add_option("--result", opt.result_path, "previously emitted transform document");
  verify->add_option("--state", opt.state, "initial state (path or inline JSON)");
  verify->add_option("--steps", opt.steps, "comparison horizon");
  verify->add_option("--tol", opt.tol, "distribution tolerance");
  verify->add_option("--seed", opt.seed, "seed for the default random state");
  verify->add_flag("--strong", opt.strong, "also require the strong (no-growth) condition");

  CLI::App* chain = app.add_subcommand("chain-size", "size accounting along a transform chain");
  add_common(chain);
  chain->add_option("--chain", opt.chain, "comma-separated transform names")->required();

  CLI::App* info = app.add_subcommand("info", "summarize a walk specification");
  add_common(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(opt);
    if (transform->parsed()) return cmd_transform(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (chain->parsed()) return cmd_chain_size(opt);
    if (info->parsed()) return cmd_info(opt);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const transform_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
