#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "serreloc/errors.hpp"
#include "serreloc/report.hpp"
#include "serreloc/verify.hpp"

#ifndef SERRELOC_FIXTURE_DIR
#define SERRELOC_FIXTURE_DIR "fixtures"
#endif

using namespace serreloc;

namespace {

struct Options {
  std::string fixture;
  std::string out;
  std::string dot;
  std::string flag;
  std::vector<std::string> kill;
  int dim_bound = 4;
  unsigned seed = VerifyOptions{}.seed;
  std::string fixture_dir = SERRELOC_FIXTURE_DIR;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
}

void emit(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text(o.out, text);
  }
}

int fail(const char* type, const std::string& message, int code) {
  std::cout << Json{{"error", {{"type", type}, {"message", message}}}}.dump(2) << "\n";
  return code;
}

int run_verify(const Options& o) {
  VerifyOptions vo;
  vo.dim_bound = o.dim_bound;
  vo.seed = o.seed;
  const auto results = run_verify_suite(load_fixture_dir(o.fixture_dir), vo);
  const Json report = verify_report(results);
  emit(o, report);
  for (const auto& r : results) {
    if (!r.passed) std::cerr << "FAILED " << r.id << " [" << r.subject << "] " << r.detail << "\n";
  }
  return report["failed"].get<std::size_t>() == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre subcategory lattices, their spectra and locales on finite models"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("fixture", o.fixture, "fixture JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", o.out, "write the JSON report here instead of stdout");
    if (with_dot) sub->add_option("--dot", o.dot, "write a DOT Hasse diagram");
  };
  auto* lattice = app.add_subcommand("lattice", "Serre lattice and Zariski basic opens");
  add_common(lattice, true);
  auto* primes = app.add_subcommand("primes", "prime Serre subcategories");
  add_common(primes, false);
  auto* local = app.add_subcommand("local", "locality classification");
  add_common(local, false);
  auto* quotient = app.add_subcommand("quotient", "quotient by a Serre subcategory");
  add_common(quotient, false);
  quotient->add_option("--kill", o.kill, "base labels generating the subcategory to divide out")->delimiter(',');
  auto* pullback = app.add_subcommand("pullback", "pullback map of an exact functor");
  add_common(pullback, false);
  auto* topologies = app.add_subcommand("topologies", "Ziegler-type and Zariski-type topologies");
  add_common(topologies, true);
  topologies->add_option("--flag", o.flag, "ideal family")->check(CLI::IsMember({"ALL", "PP", "FG"}));
  auto* verify = app.add_subcommand("verify", "run every property suite over the bundled fixtures");
  verify->add_option("--out", o.out, "write the JSON report here instead of stdout");
  verify->add_option("--fixtures", o.fixture_dir, "fixture directory")->check(CLI::ExistingDirectory);
  verify->add_option("--dim-bound", o.dim_bound, "largest total dimension enumerated")->check(CLI::Range(1, 6));
  verify->add_option("--seed", o.seed, "seed for the random poset suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run_verify(o);
    const Fixture fx = load_fixture(o.fixture);
    if (lattice->parsed()) {
      emit(o, lattice_report(fx));
      if (!o.dot.empty()) write_text(o.dot, frame_dot(fx.name, serre_lattice(fx.model).frame()));
    } else if (primes->parsed()) {
      emit(o, primes_report(fx));
    } else if (local->parsed()) {
      emit(o, local_report(fx));
    } else if (quotient->parsed()) {
      emit(o, quotient_report(fx, o.kill));
    } else if (pullback->parsed()) {
      emit(o, pullback_json(fx));
    } else if (topologies->parsed()) {
      std::optional<IdealFlag> flag;
      if (!o.flag.empty()) flag = parse_flag(o.flag);
      emit(o, topologies_report(fx, flag));
      if (!o.dot.empty()) {
        if (!fx.spectral) throw ValidationError("fixture '" + fx.name + "' is not a spectral model");
        write_text(o.dot, topology_dot(fx.name, ziegler_type_topology(*fx.spectral, flag.value_or(IdealFlag::All))));
      }
    }
  } catch (const InvariantError& e) {
    return fail("invariant", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("validation", e.what(), 1);
  }
  return 0;
}
