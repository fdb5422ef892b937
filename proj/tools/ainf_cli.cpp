// ainf-cli: Ext, minimal models, hulls and reconstruction over F_p.
// Exit codes: 0 success, 2 input error, 3 internal gate failure.

#include "CLI11.hpp"
#include "reports.hpp"

#include <fstream>
#include <iostream>

using namespace ainf;
using namespace ainf::cli;

namespace {

struct Config {
  std::string catalog, input, out, subgroup = "center";
  Int p = 2;
  bool p_given = false;
  int degree = 0, arity = 0, weight = 0, depth = 4, count = 100, threads = 1, exterior = 0;
  std::uint64_t seed = 0;
};

LoadedAlgebra load(const Config& c) {
  if (c.catalog.empty() == c.input.empty()) throw InputError("give exactly one of --catalog and --input");
  if (!c.catalog.empty()) return load_catalog(c.catalog, c.p);
  return load_file(c.input, c.p_given ? std::optional<Int>(c.p) : std::nullopt);
}

Caps caps(const Config& c) { return {c.degree, c.arity, c.weight}; }

struct Outcome {
  Json report;
  int code = 0;
};

Outcome run(const std::string& cmd, const Config& c) {
  if (cmd == "ext") return {ext_report(load(c), c.degree, c.seed)};
  if (cmd == "minimal-model") {
    bool ok = false;
    Json j = minimal_model_report(load(c), caps(c), c.seed, ok);
    return {j, ok ? 0 : 3};
  }
  if (cmd == "hull") {
    if (c.exterior > 0) return {exterior_hull_report(c.exterior, c.p, c.weight)};
    return {hull_report(load(c), caps(c), c.seed)};
  }
  if (cmd == "verify") {
    auto L = load(c);
    auto r = verify_reconstruction(L.algebra, c.seed, caps(c));
    r.algebra = L.name;
    return {verify_report(r, *L.algebra), r.isomorphism() && r.transfer_ok ? 0 : 3};
  }
  if (cmd == "compare-models") {
    auto L = load(c);
    auto r = upsilon(L.algebra, c.depth, c.seed, c.arity == 0 ? 4 : c.arity);
    r.algebra = L.name;
    return {compare_report(r, L.algebra->field().p()), r.ok() ? 0 : 3};
  }
  if (cmd == "restrict") {
    SubgroupInclusion inc;
    std::string group;
    if (!c.catalog.empty()) {
      inc = parse_inclusion(c.catalog, c.subgroup, c.p);
      group = c.catalog;
    } else {
      auto L = load(c);
      if (!L.group) throw InputError("restrict: the input is not a group");
      const Int p = L.algebra->field().p();
      if (c.subgroup == "center") {
        inc = center_inclusion(*L.group, p);
      } else {
        std::vector<int> gens;
        std::stringstream ss(c.subgroup);
        for (std::string tok; std::getline(ss, tok, ',');) {
          auto it = std::find(L.group->elements.begin(), L.group->elements.end(), tok);
          if (it == L.group->elements.end()) throw InputError("restrict: unknown group element '" + tok + "'");
          gens.push_back(static_cast<int>(it - L.group->elements.begin()));
        }
        inc = inclusion(*L.group, gens, p, "<" + c.subgroup + ">");
      }
      group = L.name;
    }
    auto r = diagram_check(inc, c.seed, c.seed + 1, caps(c));
    return {restrict_report(r, group), r.ok() ? 0 : 3};
  }
  if (cmd == "fuzz") {
    const int N = c.arity == 0 ? 4 : c.arity;
    auto r = fuzz(c.seed, c.count, N, c.threads);
    return {fuzz_report(r, c.seed, c.count, N), r.violations() == 0 ? 0 : 3};
  }
  throw InputError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A-infinity minimal models of augmented algebras over F_p"};
  app.require_subcommand(1);
  Config c;
  auto common = [&c](CLI::App* s, bool algebra) {
    if (algebra) {
      s->add_option("--catalog", c.catalog, "catalog name, e.g. trunc_poly:3, cyclic:4, heisenberg");
      s->add_option("--input", c.input, "algebra or group JSON file");
      s->add_option("--max-degree", c.degree, "Hochschild degree cap D (default from the algebra)");
      s->add_option("--weight", c.weight, "weight cap W (default: nilpotency index)");
    }
    s->add_option("--p", c.p, "characteristic")->each([&c](const std::string&) { c.p_given = true; });
    s->add_option("--arity", c.arity, "arity cap N (default max(nu, 4))");
    s->add_option("--seed", c.seed, "seed for complement choices");
    s->add_option("--threads", c.threads, "worker threads (output does not depend on it)");
    s->add_option("--out", c.out, "write the report here instead of stdout");
  };
  common(app.add_subcommand("ext", "Ext dimensions, generators and cup products"), true);
  common(app.add_subcommand("minimal-model", "transferred A-infinity structure on Ext"), true);
  auto* hull = app.add_subcommand("hull", "classical hull of the dual bar construction");
  common(hull, true);
  hull->add_option("--exterior", c.exterior, "use the exterior algebra on this many generators");
  common(app.add_subcommand("verify", "reconstruct the algebra from its minimal model"), true);
  auto* cmp = app.add_subcommand("compare-models", "Hochschild vs endomorphism-dga minimal models");
  common(cmp, true);
  cmp->add_option("--depth", c.depth, "resolution depth (default 4)");
  auto* res = app.add_subcommand("restrict", "change of group along a subgroup");
  common(res, true);
  res->add_option("--subgroup", c.subgroup, "'center' or comma-separated generators (names or indices)");
  auto* fz = app.add_subcommand("fuzz", "random dg-algebras through the transfer gates");
  common(fz, false);
  fz->add_option("--count", c.count, "number of cases (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (c.threads < 1) throw InputError("--threads must be >= 1");
    auto [report, code] = run(cmd, c);
    const std::string text = report.dump(2) + "\n";
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(c.out);
      if (!f) throw InputError("cannot write '" + c.out + "'");
      f << text;
    }
    if (code == 3) std::cerr << "error: internal gate failure (see report)\n";
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GateFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
