#include "homkit/io/document.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

using namespace homkit;
using io::Json;

namespace {

enum Exit { Holds = 0, Fails = 1, BadInput = 2, NoHypothesis = 3 };

constexpr std::uint64_t safe_bound = 8;
constexpr int safe_window = 3;

struct Options {
  std::string cls = "all";
  std::uint64_t bound = safe_bound;
  int window = safe_window;
  std::int64_t ring = 0;
  std::string output;
  bool unsafe = false;
  std::string command;
};

auto exit_for(Status s) -> int {
  switch (s) {
  case Status::Holds: return Holds;
  case Status::Fails: return Fails;
  case Status::HypothesisNotEstablished: return NoHypothesis;
  }
  return BadInput;
}

void emit(const Json &j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string &path, const Json &j) {
  std::ofstream out(path);
  if (!out) throw io::DocumentError("cannot write " + path);
  out << j.dump(2) << "\n";
}

auto report_head(const Options &o) -> Json { return Json{{"command", o.command}}; }

auto elapsed_ms(std::chrono::steady_clock::time_point t0) -> double {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/// Refuses bounds above the safe defaults unless --unsafe-bound is given, in
/// which case the hard caps are raised to match.
void apply_caps(const Options &o) {
  if (o.bound > safe_bound || o.window > safe_window) {
    if (!o.unsafe)
      throw CapExceeded("bound " + std::to_string(o.bound) + " / window " + std::to_string(o.window) +
                        " exceeds the defaults (8 / 3); pass --unsafe-bound to raise them");
    Caps c = caps();
    c.module_size = std::max<std::uint64_t>(c.module_size, o.bound * o.bound);
    c.window = std::max(c.window, o.window + 2);
    set_caps(c);
  }
}

auto universe_for(const RingSpec &r, const Options &o) -> ModuleUniverse {
  if (!r.is_modular()) throw std::invalid_argument("universe checks need a ring Z/n");
  if (o.ring != 0 && r.modulus() != o.ring) throw std::invalid_argument("--ring does not match the document ring");
  return ModuleUniverse{r, o.bound};
}

auto load_complex(const std::string &path) -> Complex {
  auto j = io::load(path);
  auto c = io::complex_from(j);
  auto v = validate(c);
  if (!v.valid) throw std::invalid_argument(path + ": " + v.message);
  return c;
}

auto cmd_validate(const std::string &path, const Options &o) -> int {
  auto j = io::load(path);
  auto r = io::validate_document(j, std::filesystem::path(path).parent_path());
  Json out = report_head(o);
  out["valid"] = r.valid;
  out["objects"] = r.objects;
  if (!r.valid) out["violation"] = r.violation;
  emit(out);
  return r.valid ? Holds : Fails;
}

auto cmd_check(const std::string &kind, const std::vector<std::string> &inputs, const Options &o) -> int {
  auto t0 = std::chrono::steady_clock::now();
  if (inputs.empty()) throw std::invalid_argument("check needs an input document");
  auto x = XClassSpec::parse(o.cls);
  Json out = report_head(o);
  out["class"] = x.to_string();
  Verdict v;
  if (kind == "homotopic-zero") {
    auto j = io::load(inputs[0]);
    auto f = io::chain_map_from(j, std::filesystem::path(inputs[0]).parent_path());
    if (auto k = f.first_violation()) throw std::invalid_argument("input is not a chain map in degree " + std::to_string(*k));
    v.universe = "exact solve";
    v.instances = 1;
    if (auto h = null_homotopy(f)) {
      Witness w{"null-homotopy", {}, {}, {}, *h};
      add_certificate(v, w);
    } else {
      v.status = Status::Fails;
      v.counterexample = Witness{"the homotopy system has no solution", {}, {f}, {}, std::nullopt};
      v.counterexample_confirmed = true;
    }
  } else {
    Complex c = load_complex(inputs[0]);
    if (kind == "exact") {
      auto r = is_exact(c);
      v.universe = "exact computation";
      v.instances = c.is_zero() ? 0 : static_cast<std::size_t>(c.width());
      if (!r.exact) {
        v.status = Status::Fails;
        int k = *r.first_nonexact;
        Complex h = sphere(k, r.homology.at(k));
        v.counterexample = Witness{"nonzero homology in degree " + std::to_string(k), {}, {}, {h}, std::nullopt};
        v.counterexample_confirmed = true;
      }
    } else {
      auto u = universe_for(c.ring(), o);
      Eps1Universe eu{u, o.window};
      if (kind == "x-injective") v = x_injective_complex(c, x, default_complex_universe(c, u));
      else if (kind == "x-projective") v = x_projective_complex(c, x, default_complex_universe(c, u));
      else if (kind == "dg-injective") v = dg_x_injective(c, x, eu);
      else if (kind == "dg-projective") v = dg_x_projective(c, x, eu);
      else if (kind == "eps1-perp") v = eps1_perp_homotopy(c, x, eu);
      else throw std::invalid_argument("unknown check '" + kind + "'");
    }
  }
  out["input"] = inputs[0];
  out.update(io::to_json(v));
  out["timing_ms"] = elapsed_ms(t0);
  emit(out);
  return exit_for(v.status);
}

auto log_json(const std::vector<OracleCall> &calls, const std::vector<BuildRecord> &log) -> Json {
  Json c = Json::array(), l = Json::array();
  for (const auto &e : calls) c.push_back(io::to_json(e));
  for (const auto &e : log) l.push_back(io::to_json(e));
  return Json{{"oracle_calls", c}, {"systems", l}};
}

/// Writes the result and its log, then reloads the written file and checks it.
auto write_and_revalidate(const Options &o, const Json &result, const Json &log, Json &out) -> bool {
  out["result"] = result;
  if (o.output.empty()) return true;
  write_file(o.output, result);
  Json tagged{{"command", o.command}};
  tagged.update(log);
  write_file(o.output + ".log.json", tagged);
  out["output"] = o.output;
  out["log"] = o.output + ".log.json";
  auto check = io::validate_document(io::load(o.output), std::filesystem::path(o.output).parent_path());
  out["revalidated"] = check.valid;
  if (!check.valid) out["violation"] = check.violation;
  return check.valid;
}

auto constraints_json(const std::vector<ConstraintCheck> &cs) -> Json {
  Json out = Json::array();
  for (const auto &c : cs) out.push_back(Json{{"name", c.name}, {"degree", c.degree}, {"holds", c.holds}});
  return out;
}

auto cmd_build(const std::string &kind, const std::string &input, const Options &o) -> int {
  auto t0 = std::chrono::steady_clock::now();
  auto x = XClassSpec::parse(o.cls);
  Complex y = load_complex(input);
  Json out = report_head(o);
  out["input"] = input;
  out["class"] = x.to_string();
  bool ok = true;
  try {
    if (kind == "precover") {
      auto u = universe_for(y.ring(), o);
      auto r = precover_bounded(y, x, default_precover_strategy(x, u));
      auto rep = verify_precover(r, x, u);
      out["universe"] = u.describe();
      ok = write_and_revalidate(o, io::to_json(r.map), log_json(r.oracle_calls, r.log), out);
      out["properties"] = Json{{"exact", rep.exact},
                               {"degreewise_epi", rep.degreewise_epi},
                               {"kernel_in_class", rep.kernel_in_class},
                               {"components_projective", rep.components_projective},
                               {"factorization", rep.factorization},
                               {"competitors", rep.competitors},
                               {"competitor_maps", rep.competitor_maps}};
      out["constraints"] = constraints_json(rep.constraints);
      ok = ok && rep.properties_hold();
    } else if (kind == "preenvelope") {
      auto u = universe_for(y.ring(), o);
      auto r = preenvelope_bounded(y, x, default_preenvelope_strategy(x, u));
      auto rep = verify_preenvelope(r, x, u);
      out["universe"] = u.describe();
      ok = write_and_revalidate(o, io::to_json(r.map), log_json(r.oracle_calls, r.log), out);
      out["properties"] = Json{{"exact", rep.exact},
                               {"degreewise_mono", rep.degreewise_mono},
                               {"cokernel_in_class", rep.cokernel_in_class},
                               {"components_injective", rep.components_injective},
                               {"factorization", rep.factorization},
                               {"competitors", rep.competitors},
                               {"competitor_maps", rep.competitor_maps}};
      out["constraints"] = constraints_json(rep.constraints);
      ok = ok && rep.properties_hold();
    } else if (kind == "envelope") {
      auto u = universe_for(y.ring(), o);
      EnvelopeBounds b;
      b.module_bound = std::min<std::uint64_t>(o.bound, b.module_bound);
      auto r = x_injective_envelope(y, x, b);
      out["universe"] = ModuleUniverse{u.ring, b.module_bound}.describe();
      if (!r) {
        out["verdict"] = to_string(Status::HypothesisNotEstablished);
        out["note"] = "the zero module is not in the class, so no subcomplex qualifies";
        out["timing_ms"] = elapsed_ms(t0);
        emit(out);
        return NoHypothesis;
      }
      Json log{{"ambient", io::to_json(r->ambient)},
               {"embedding", io::to_json(r->into_ambient)},
               {"envelope_in_ambient", io::to_json(r->envelope_in_ambient)},
               {"admissible", r->admissible}};
      ok = write_and_revalidate(o, io::to_json(r->inclusion), log, out);
      out["properties"] = Json{{"admissible", r->admissible},
                               {"maximal", r->maximal},
                               {"essential", r->essential},
                               {"factorization", r->factorization},
                               {"injective", io::to_json(r->injectivity)}};
      ok = ok && r->maximal && r->essential && r->factorization && r->injectivity.holds();
    } else {
      throw std::invalid_argument("unknown build '" + kind + "'");
    }
  } catch (const BuildFailure &e) {
    out["verdict"] = to_string(Status::HypothesisNotEstablished);
    out["note"] = e.what();
    out["record"] = io::to_json(e.record);
    out["system"] = io::to_json(e.system);
    if (!o.output.empty()) write_file(o.output + ".failure.json", out);
    out["timing_ms"] = elapsed_ms(t0);
    emit(out);
    return NoHypothesis;
  }
  out["verdict"] = to_string(ok ? Status::Holds : Status::Fails);
  out["timing_ms"] = elapsed_ms(t0);
  emit(out);
  return ok ? Holds : Fails;
}

auto cmd_universe(const std::string &kind, const Options &o) -> int {
  if (o.ring < 2) throw std::invalid_argument("universe needs --ring n with n >= 2");
  auto x = XClassSpec::parse(o.cls);
  ModuleUniverse u{RingSpec::integers_mod(o.ring), o.bound};
  Json out = report_head(o), entries = Json::array();
  if (kind == "modules") {
    out["universe"] = u.describe();
    for (const auto &m : enumerate_modules(u)) entries.push_back(io::to_json(m));
  } else if (kind == "complexes") {
    ComplexUniverse cu{u, 0, o.window - 1, 2, 4, {}};
    out["universe"] = cu.describe();
    for (const auto &c : enumerate_complexes(cu)) entries.push_back(io::to_json(c));
  } else if (kind == "eps1") {
    Eps1Universe eu{u, o.window};
    out["universe"] = eu.describe();
    out["class"] = x.to_string();
    for (const auto &c : enumerate_eps1(eu, x)) entries.push_back(io::to_json(c));
  } else {
    throw std::invalid_argument("unknown universe '" + kind + "'");
  }
  out["count"] = entries.size();
  out["entries"] = entries;
  emit(out);
  return Holds;
}

auto join_args(int argc, char **argv) -> std::string {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"homkit: exact homological algebra over Z and Z/n"};
  app.require_subcommand(1);
  Options o;
  o.command = join_args(argc, argv);
  auto common = [&](CLI::App *sub) {
    sub->add_option("--class", o.cls, "class spec: all, zero, free, ann:p, pred:<regex>, pred0:<regex>");
    sub->add_option("--bound", o.bound, "module universe size bound")->check(CLI::PositiveNumber);
    sub->add_option("--window", o.window, "complex window")->check(CLI::PositiveNumber);
    sub->add_option("--ring", o.ring, "ring modulus n");
    sub->add_flag("--unsafe-bound", o.unsafe, "allow bounds above the defaults");
  };

  std::string path;
  auto *validate_cmd = app.add_subcommand("validate", "check a document");
  validate_cmd->add_option("path", path)->required();

  std::string kind;
  std::vector<std::string> inputs;
  auto *check_cmd = app.add_subcommand("check", "run a checker");
  check_cmd->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"exact", "homotopic-zero", "x-injective", "x-projective", "dg-injective", "dg-projective", "eps1-perp"}));
  check_cmd->add_option("inputs", inputs)->required();
  common(check_cmd);

  auto *build_cmd = app.add_subcommand("build", "run a builder");
  build_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"precover", "preenvelope", "envelope"}));
  build_cmd->add_option("input", path)->required();
  build_cmd->add_option("--output", o.output, "result path; the build log goes to <output>.log.json");
  common(build_cmd);

  auto *universe_cmd = app.add_subcommand("universe", "list a universe");
  universe_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"modules", "complexes", "eps1"}));
  common(universe_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? Holds : BadInput;
  }

  try {
    apply_caps(o);
    if (*validate_cmd) return cmd_validate(path, o);
    if (*check_cmd) return cmd_check(kind, inputs, o);
    if (*build_cmd) return cmd_build(kind, path, o);
    if (*universe_cmd) return cmd_universe(kind, o);
  } catch (const HypothesisNotEstablished &e) {
    Json out = report_head(o);
    out["verdict"] = to_string(Status::HypothesisNotEstablished);
    out["note"] = e.what();
    emit(out);
    return NoHypothesis;
  } catch (const CapExceeded &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return BadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
  return BadInput;
}
