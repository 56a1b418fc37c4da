#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "conemod/driver/algorithm.hpp"
#include "conemod/driver/instances.hpp"
#include "conemod/driver/io.hpp"
#include "conemod/poly/parse.hpp"

using namespace conemod;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInput = 2, kPrecondition = 3, kResource = 4, kInternal = 5 };

struct Options {
  std::string instance;
  std::string out;
  std::string type = "I";
  std::string format = "json";
  std::size_t max_steps = 32;
  std::uint64_t seed = 1;
  std::size_t budget = 1000;
  unsigned bound = 12;
  std::size_t max_pairs = 500000;
  std::uint64_t max_degree = 0;
  std::uint64_t rho = 0, sigma = 0, w = 1;
  std::size_t r = 0, b = 0;
  std::vector<std::size_t> subset;
};

GroebnerLimits limits_of(const Options& o) {
  GroebnerLimits l;
  l.max_pairs = o.max_pairs;
  l.max_degree = o.max_degree;
  return l;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

void emit_json(const Options& o, const Json& doc) { emit(o, doc.dump(2) + "\n"); }

ConeInstance load(const Options& o) {
  if (o.instance.empty()) throw InputError("--instance is required");
  return instance_from_json(read_json_file(o.instance), limits_of(o));
}

ModType type_of(const Options& o) {
  if (o.type == "I") return ModType::I;
  if (o.type == "II") return ModType::II;
  throw InputError("--type must be I or II");
}

// With --rho, the working example is generated; an existing --instance file must match it
// and a missing one is written.
ConeInstance run_instance(const Options& o) {
  if (o.rho == 0) return load(o);
  const ConeInstance generated = with_limits(gen_working_example(o.rho, o.sigma, o.w), limits_of(o));
  if (o.instance.empty()) return generated;
  if (!std::filesystem::exists(o.instance)) {
    write_text_file(o.instance, instance_to_json(generated).dump(2) + "\n");
    return generated;
  }
  const ConeInstance loaded = load(o);
  if (instance_to_json(loaded) != instance_to_json(generated))
    throw InputError(o.instance + " does not match the working example for the given parameters");
  return loaded;
}

int cmd_verify(const Options& o) {
  const auto report = verify_action(load(o));
  emit_json(o, verification_to_json(report));
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_fitting(const Options& o) {
  emit_json(o, fitting_report_to_json(fitting_report(load(o))));
  return kOk;
}

int cmd_index(const Options& o) {
  emit(o, index_to_json(compute_index(load(o))).dump() + "\n");
  return kOk;
}

int cmd_centre(const Options& o) {
  const ConeInstance inst = load(o);
  const CentreData c = type_of(o) == ModType::I ? centre_modI(inst) : centre_modII(inst);
  emit_json(o, centre_to_json(c, root_chart(inst)));
  return kOk;
}

int cmd_modify(const Options& o) {
  const ConeInstance inst = load(o);
  const Chart root = root_chart(inst);
  const CentreData c = type_of(o) == ModType::I ? centre_modI(inst) : centre_modII(inst);
  Json charts = Json::array();
  for (const auto& chart : blowup_charts(root, c)) {
    Json j = chart_to_json(chart);
    j["index"] = index_to_json(compute_index(chart.instance));
    charts.push_back(std::move(j));
  }
  emit_json(o, {{"centre", centre_to_json(c, root)}, {"charts", charts}});
  return kOk;
}

int cmd_run(const Options& o) {
  RunConfig cfg;
  cfg.max_steps = o.max_steps;
  cfg.limits = limits_of(o);
  cfg.slice = {o.seed, o.budget};
  cfg.bound = o.bound;
  const ChartTree tree = run_algorithm(run_instance(o), cfg);
  if (o.format == "dot") {
    emit(o, tree_to_dot(tree));
  } else {
    emit_json(o, tree_to_json(tree));
  }
  return tree.complete ? kOk : kResource;
}

int cmd_quotient(const Options& o) {
  const ConeInstance inst = load(o);
  const Chart chart = root_chart(inst);
  const SliceData slice = find_slice(inst, {o.seed, o.budget});
  emit_json(o, quotient_to_json(invariant_ring(chart, slice, o.bound)));
  return kOk;
}

int cmd_gen(const Options& o, const std::string& kind) {
  if (kind == "working") {
    emit_json(o, instance_to_json(gen_working_example(o.rho, o.sigma, o.w)));
  } else {
    emit_json(o, instance_to_json(gen_grassmann_instance(o.r, o.b, o.subset, o.w)));
  }
  return kOk;
}

void error_record(const char* kind, const std::string& message, const std::string& extra = "") {
  Json rec = {{"error", kind}, {"message", message}};
  if (!extra.empty()) rec["best_minor"] = extra;
  std::cerr << rec.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modification algorithm for graded unipotent actions on affine cones"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "Instance file");
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--max-pairs", o.max_pairs, "Groebner pair cap");
    sub->add_option("--max-degree", o.max_degree, "Groebner degree cap (0 = none)");
  };
  auto* verify = app.add_subcommand("verify", "Check the action axioms");
  auto* fitting = app.add_subcommand("fitting", "Presentation matrix, Fitting ideals and index");
  auto* index = app.add_subcommand("index", "Index (d, e)");
  auto* centre = app.add_subcommand("centre", "Centre of a modification");
  auto* modify = app.add_subcommand("modify", "Charts of one modification");
  auto* run = app.add_subcommand("run", "Full algorithm; writes the chart tree");
  auto* quotient = app.add_subcommand("quotient", "Slice and invariant ring of a UU instance");
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  for (auto* sub : {verify, fitting, index, centre, modify, run, quotient}) common(sub);
  for (auto* sub : {centre, modify})
    sub->add_option("--type", o.type, "Modification type")->check(CLI::IsMember({"I", "II"}));
  run->add_option("--max-steps", o.max_steps, "Maximum chart depth");
  for (auto* sub : {run, quotient}) {
    sub->add_option("--seed", o.seed, "Slice search seed");
    sub->add_option("--budget", o.budget, "Slice search budget");
    sub->add_option("--bound", o.bound, "Degree bound for quotient presentations");
  }
  run->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  for (auto* sub : {run}) {
    sub->add_option("--rho", o.rho, "Working example rho");
    sub->add_option("--sigma", o.sigma, "Working example sigma");
    sub->add_option("--w", o.w, "Working example w");
  }
  std::string gen_kind;
  gen->add_option("kind", gen_kind, "working | grassmann")->required()->check(CLI::IsMember({"working", "grassmann"}));
  gen->add_option("--out", o.out, "Output file (default stdout)");
  gen->add_option("--rho", o.rho, "rho");
  gen->add_option("--sigma", o.sigma, "sigma");
  gen->add_option("--w", o.w, "Grading weight");
  gen->add_option("--r", o.r, "Number of directions");
  gen->add_option("--b", o.b, "Number of rows");
  gen->add_option("--subset", o.subset, "Pinned columns, 1-based")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*fitting) return cmd_fitting(o);
    if (*index) return cmd_index(o);
    if (*centre) return cmd_centre(o);
    if (*modify) return cmd_modify(o);
    if (*run) return cmd_run(o);
    if (*quotient) return cmd_quotient(o);
    if (*gen) return cmd_gen(o, gen_kind);
  } catch (const InputError& e) {
    error_record("input", e.what());
    return kInput;
  } catch (const ParseError& e) {
    error_record("input", e.what());
    return kInput;
  } catch (const ParameterError& e) {
    error_record("input", e.what());
    return kInput;
  } catch (const PreconditionViolation& e) {
    error_record("precondition", e.what());
    return kPrecondition;
  } catch (const SliceNotFound& e) {
    error_record("slice-not-found", e.what(), e.best_minor);
    return kPrecondition;
  } catch (const ResourceLimitExceeded& e) {
    error_record("resource-limit", e.what());
    return kResource;
  } catch (const std::exception& e) {
    error_record("internal", e.what());
    return kInternal;
  }
  return kInternal;
}
