// sdlab: Stanley depth, depth, Hilbert series and polarization of I/J.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sdlab/homology.hpp"
#include "sdlab/io.hpp"
#include "sdlab/polarization.hpp"
#include "sdlab/stanley.hpp"
#include "sdlab/verify.hpp"

namespace {

using namespace sdlab;

constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ModuleSpec load_spec(const std::string& path, std::optional<unsigned> characteristic = std::nullopt) {
  ModuleSpec spec = parse_module_spec(read_input(path));
  if (characteristic) return ModuleSpec(spec.ring().with_characteristic(*characteristic), spec.I(), spec.J());
  return spec;
}

std::string zset(const StanleyPart& p, const RingContext& ring) {
  std::string s = "K[";
  for (std::size_t k = 0; k < p.vars.size(); ++k) s += (k ? "," : "") + ring.name(p.vars[k]);
  return s + "]";
}

// (K_I - K_J) / (1 - t)^n before cancelling common factors
std::string unreduced_hilbert(const ModuleSpec& spec) {
  IntPolynomial num = ideal_numerator(spec.I());
  const IntPolynomial kj = ideal_numerator(spec.J());
  if (num.size() < kj.size()) num.resize(kj.size());
  for (std::size_t k = 0; k < kj.size(); ++k) num[k] -= kj[k];
  while (!num.empty() && num.back() == 0) num.pop_back();
  const std::size_t n = spec.nvars();
  std::string s = "(" + format_polynomial(num) + ")";
  if (n == 0) return s;
  s += "/(1 - t)";
  if (n > 1) s += "^" + std::to_string(n);
  return s;
}

struct ComputeArgs {
  std::string file;
  bool sdepth = false, depth = false, hilbert = false, decompose = false, json = false;
  std::optional<unsigned> characteristic;
};

int cmd_compute(const ComputeArgs& args) {
  const ModuleSpec spec = load_spec(args.file, args.characteristic);
  const RingContext& ring = spec.ring();
  Json out = Json::object();
  std::ostringstream text;

  std::optional<SdepthResult> sd;
  if (args.sdepth || args.decompose) sd = sdepth(spec);
  if (args.sdepth) {
    out["sdepth"] = sd->sdepth;
    out["partition"] = partition_to_json(sd->witness);
    out["bound"] = to_json(sd->witness.bound);
    text << "sdepth: " << sd->sdepth << "\n"
         << "partition of P^g, g = " << to_string(sd->witness.bound) << ":\n";
    for (const auto& iv : sd->witness.intervals) text << "  " << to_string(iv) << "\n";
  }
  if (args.decompose) {
    const StanleyDecomposition d = partition_to_decomposition(sd->witness);
    out["sdepth"] = d.sdepth();
    out["decomposition"] = decomposition_to_json(d, ring);
    text << "Stanley decomposition (sdepth " << d.sdepth() << "):\n";
    for (const auto& p : d.parts) text << "  " << format_monomial(p.a, ring) << " " << zset(p, ring) << "\n";
  }
  if (args.depth) {
    const int dep = depth(spec);
    out["depth"] = dep;
    out["characteristic"] = ring.characteristic();
    text << "depth: " << dep << " (characteristic " << ring.characteristic() << ")\n";
  }
  if (args.hilbert) {
    const HilbertSeries h = hilbert_series(spec);
    out["hilbert"] = hilbert_to_json(h);
    out["hilbert"]["unreduced"] = unreduced_hilbert(spec);
    text << "hilbert: " << unreduced_hilbert(spec) << "\n"
         << "reduced: " << h.to_string() << "\n";
  }
  if (args.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  return 0;
}

struct PolarizeArgs {
  std::string file;
  bool full = false, json = false;
  std::vector<std::string> steps;
  std::vector<std::string> fresh;
  std::string trace_file;
};

int cmd_polarize(const PolarizeArgs& args) {
  const ModuleSpec spec = load_spec(args.file);
  if (args.full && !args.steps.empty()) throw Error("--full and --steps are exclusive");
  if (args.fresh.size() > args.steps.size()) throw Error("more --fresh names than --steps");

  std::optional<ModuleSpec> result;
  std::optional<PolarizationTrace> trace;
  if (args.steps.empty()) {
    FullPolarization full = full_polarize(spec);
    result = std::move(full.spec);
    trace = std::move(full.trace);
  } else {
    ModuleSpec cur = spec;
    std::vector<PolarizationStep> steps;
    for (std::size_t k = 0; k < args.steps.size(); ++k) {
      const std::size_t v = cur.ring().index_of(args.steps[k]);
      if (v == cur.nvars()) throw Error("unknown variable '" + args.steps[k] + "'");
      std::optional<std::string> fresh;
      if (k < args.fresh.size()) fresh = args.fresh[k];
      OneStepPolarization s = one_step_polarize(cur, v, fresh);
      steps.push_back(s.step);
      cur = std::move(s.target);
    }
    std::vector<std::size_t> order(cur.nvars());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    trace = PolarizationTrace{spec.ring(), spec.ring(), std::move(steps), std::move(order), cur.ring()};
    result = std::move(cur);
  }

  const Json tj = trace_to_json(*trace);
  if (!args.trace_file.empty()) {
    std::ofstream f(args.trace_file);
    if (!f) throw Error("cannot write '" + args.trace_file + "'");
    f << tj.dump(2) << "\n";
  }
  if (args.json) {
    std::cout << Json{{"spec", format_module_spec(*result)}, {"trace", tj}}.dump(2) << "\n";
  } else {
    std::cout << format_module_spec(*result);
    if (args.trace_file.empty()) std::cout << "# trace: " << tj.dump() << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string tag;
  HarnessOptions options;
  bool json = false;
};

int cmd_verify(const VerifyArgs& args) {
  const VerificationReport report = run_verification(args.tag, args.options);
  if (args.json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
  if (report.passed()) return 0;
  std::cerr << "verification failed on " << report.failures.size() << " of " << report.trials
            << " trials; the theorem is proved, so each failure is a bug in this implementation"
               " and not a counterexample\n";
  return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stanley depth, depth, Hilbert series and polarization of quotients of monomial ideals"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Invariants of the module described by a spec file");
  c->add_option("file", compute.file, "spec file, or - for stdin")->required();
  c->add_flag("--sdepth", compute.sdepth, "Stanley depth with a witness partition");
  c->add_flag("--depth", compute.depth, "depth via Koszul homology");
  c->add_flag("--hilbert", compute.hilbert, "multigraded Hilbert series in t");
  c->add_flag("--decompose", compute.decompose, "an optimal Stanley decomposition");
  c->add_flag("--json", compute.json, "JSON output");
  c->add_option("--char", compute.characteristic, "field characteristic, 0 or a prime");

  PolarizeArgs polarize;
  auto* p = app.add_subcommand("polarize", "Polarize a spec file");
  p->add_option("file", polarize.file, "spec file, or - for stdin")->required();
  p->add_flag("--full", polarize.full, "full polarization (default)");
  p->add_option("--steps", polarize.steps, "apply one-step polarization at this variable (repeatable)");
  p->add_option("--fresh", polarize.fresh, "name for the fresh variable of the matching --steps");
  p->add_option("--trace", polarize.trace_file, "write the JSON trace here instead of a comment line");
  p->add_flag("--json", polarize.json, "JSON output");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Randomized check of a theorem");
  v->add_option("tag", verify.tag, "theorem tag")->required()->check(CLI::IsMember(theorem_tags()));
  v->add_option("--trials", verify.options.trials, "number of trials")->check(CLI::NonNegativeNumber);
  v->add_option("--seed", verify.options.seed, "random seed");
  v->add_option("--max-n", verify.options.bounds.max_n, "largest ring size")->check(CLI::PositiveNumber);
  v->add_option("--max-deg", verify.options.bounds.max_deg, "largest generator exponent")->check(CLI::PositiveNumber);
  v->add_option("--max-gens", verify.options.bounds.max_gens, "most generators per ideal")->check(CLI::PositiveNumber);
  v->add_option("--threads", verify.options.threads, "worker threads, 0 for all cores");
  v->add_flag("--json", verify.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (c->parsed()) {
      if (!(compute.sdepth || compute.depth || compute.hilbert || compute.decompose))
        throw Error("compute needs at least one of --sdepth, --depth, --hilbert, --decompose");
      return cmd_compute(compute);
    }
    if (p->parsed()) return cmd_polarize(polarize);
    return cmd_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
