// stonekit command-line tool.
//
// Exit status: 0 success, 1 a law or structural check failed, 2 usage or
// parse error.

#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "stonekit/document.hpp"
#include "stonekit/error.hpp"
#include "stonekit/frame.hpp"
#include "stonekit/order.hpp"
#include "stonekit/suites.hpp"
#include "stonekit/topology.hpp"

namespace {

using namespace stonekit;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Loaded {
  std::string name;
  LatticeRef lattice;
  SpaceRef space;
};

Loaded load(const std::string& path) {
  const Document doc = read_document(path);
  if (const auto* l = std::get_if<LatticeDocument>(&doc)) return {l->name, load_lattice(*l), nullptr};
  const auto& s = std::get<SpaceDocument>(doc);
  return {s.name, nullptr, load_space(s)};
}

LatticeRef need_lattice(const Loaded& in, const std::string& command) {
  if (!in.lattice) throw InvalidInput(command + " expects a lattice document");
  return in.lattice;
}

SpaceRef need_space(const Loaded& in, const std::string& command) {
  if (!in.space) throw InvalidInput(command + " expects a space document");
  return in.space;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string points_phrase(std::size_t n) { return std::to_string(n) + (n == 1 ? " point" : " points"); }

int cmd_validate(const std::string& path) {
  const Loaded in = load(path);
  if (in.lattice) {
    std::cout << save_lattice(in.name, *in.lattice);
    std::cout << "# lattice: " << in.lattice->size() << " elements, distributive\n";
  } else {
    std::cout << save_space(in.name, *in.space);
    std::cout << "# space: " << points_phrase(in.space->size()) << ", " << in.space->opens().size() << " opens\n";
  }
  return kOk;
}

int cmd_spectrum(const std::string& path) {
  const Loaded in = load(path);
  const LatticeRef l = need_lattice(in, "spectrum");
  const Spectrum sp = spectrum(l);
  const SpatialityResult s = spatiality_iso(l);
  std::cout << save_space("spectrum(" + in.name + ")", *sp.space);
  std::cout << "# spectrum: " << points_phrase(sp.space->size()) << ", " << sp.space->opens().size()
            << " opens, spatial: " << yes_no(s.iso) << "\n";
  return kOk;
}

int cmd_ideals(const std::string& path) {
  const Loaded in = load(path);
  const LatticeRef l = need_lattice(in, "ideals");
  const SetLattice ideals = ideal_lattice(l);
  bool principal = true;
  for (Mask s : ideals.sets) {
    const Mask top = l->order().maximal(s);
    principal = principal && cardinality(top) == 1 && l->downset(static_cast<std::size_t>(std::countr_zero(top))) == s;
  }
  std::cout << save_lattice("ideals(" + in.name + ")", *ideals.lattice);
  for (std::size_t k = 0; k < ideals.sets.size(); ++k)
    std::cout << "# " << ideals.lattice->name(k) << " = " << subset_name(l->order().names(), ideals.sets[k]) << "\n";
  std::cout << "# ideals: " << ideals.sets.size() << ", all principal: " << yes_no(principal) << "\n";
  return kOk;
}

int cmd_filters(const std::string& path) {
  const Loaded in = load(path);
  if (in.lattice) {
    const auto filters = prime_filters(in.lattice);
    for (const PrimeFilter& f : filters)
      std::cout << "# prime filter " << subset_name(in.lattice->order().names(), f.members) << "\n";
    std::cout << "# filters: " << filters.size() << "\n";
    return kOk;
  }
  const FilterSpace fx = filter_space(in.space);
  std::cout << save_space("filters(" + in.name + ")", *fx.space);
  for (std::size_t p = 0; p < fx.filters.size(); ++p) {
    std::cout << "# " << fx.space->name(p) << " =";
    for_each_member(fx.filters[p], [&](std::size_t k) { std::cout << " " << fx.opens.lattice->name(k); });
    std::cout << "\n";
  }
  std::cout << "# filters: " << fx.filters.size() << "\n";
  return kOk;
}

int cmd_sobrify(const std::string& path) {
  const Loaded in = load(path);
  const Sobrification s = sobrification(need_space(in, "sobrify"));
  std::cout << save_space("sob(" + in.name + ")", *s.spectrum.space);
  std::cout << "# sobrification: " << points_phrase(s.spectrum.space->size()) << ", sober: " << yes_no(s.sober)
            << "\n";
  return kOk;
}

int cmd_t0(const std::string& path) {
  const Loaded in = load(path);
  const SpaceRef x = need_space(in, "t0");
  const Quotient q = t0_quotient(x);
  std::cout << save_space("t0(" + in.name + ")", *q.space);
  std::cout << "# T0: " << yes_no(is_t0(*x)) << ", classes: " << q.space->size() << "\n";
  return kOk;
}

int cmd_hausdorff(const std::string& path) {
  const Loaded in = load(path);
  const Quotient q = hausdorff_reflection(need_space(in, "hausdorff"));
  std::cout << save_space("hausdorff(" + in.name + ")", *q.space);
  std::cout << "# hausdorff reflection: " << points_phrase(q.space->size()) << "\n";
  return kOk;
}

int cmd_center(const std::string& path) {
  const Loaded in = load(path);
  const LatticeRef l = need_lattice(in, "center");
  const Coreflection c = creg_coreflection(l);
  std::cout << save_lattice("center(" + in.name + ")", *c.center);
  std::cout << "# center: " << c.center->size() << " complemented elements, boolean: " << yes_no(is_boolean(*l))
            << "\n";
  return kOk;
}

int cmd_waybelow(const std::string& path) {
  const Loaded in = load(path);
  const LatticeRef l = need_lattice(in, "waybelow");
  const WayBelowRelation wb = way_below(l);
  const WayBelowRelation le = order_relation(l);
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t a = 0; a < l->size(); ++a)
    for (std::size_t b = 0; b < l->size(); ++b)
      if (wb.holds(a, b)) pairs.push_back({l->name(a), l->name(b)});
  std::cout << save_lattice(in.name, *l) << "waybelow: " << pairs.dump() << "\n";
  const Verdict sc = is_stably_compact(l);
  std::cout << "# way-below: " << wb.pair_count() << " pairs, equals order: " << yes_no(wb.rows == le.rows)
            << ", stably compact: " << yes_no(sc.pass) << "\n";
  return kOk;
}

int cmd_cechstone(const std::string& path) {
  const Loaded in = load(path);
  const CechStone c = cech_stone_square(need_space(in, "cechstone"));
  std::cout << save_space("cechstone(" + in.name + ")", *c.pointset_side);
  const std::size_t a = c.pointfree_side->size();
  const std::size_t b = c.pointset_side->size();
  if (c.iso) {
    std::cout << "# both sides: " << points_phrase(a) << " — ISO\n";
    return kOk;
  }
  std::cout << "# pointfree side: " << points_phrase(a) << ", pointset side: " << points_phrase(b)
            << " — NOT ISO " << c.witness << "\n";
  return kFail;
}

int cmd_export_dot(const std::string& path) {
  const Loaded in = load(path);
  std::cout << (in.lattice ? lattice_dot(in.name, *in.lattice) : space_dot(in.name, *in.space));
  return kOk;
}

struct LawsOptions {
  std::string suite;
  std::size_t max_points = 3;
  std::size_t max_lattice = 16;
  std::uint64_t seed = kDefaultSeed;
  std::size_t sample = 64;
  bool force = false;
};

int cmd_laws(const LawsOptions& o) {
  if (!o.force && o.max_points > 5) throw BudgetExceeded("--max-points above 5 needs --force");
  if (!o.force && o.max_lattice > 16) throw BudgetExceeded("--max-lattice above 16 needs --force");
  SuiteOptions s;
  s.max_points = o.max_points;
  s.max_lattice = o.max_lattice;
  s.seed = o.seed;
  s.sample = o.sample;
  const SuiteReport r = run_suite(o.suite, s);
  for (const SuiteLine& line : r.lines) std::cout << line.format() << "\n";
  std::cout << "# " << o.suite << ": " << r.lines.size() << " lines, " << r.failures() << " FAIL\n";
  return r.passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks of frames, spaces, and their monads"};
  app.require_subcommand(1);

  std::string path;
  int status = kOk;
  auto file_command = [&](const std::string& name, const std::string& help, int (*run)(const std::string&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", path, "lattice or space document")->required();
    sub->callback([&, run] { status = run(path); });
  };
  file_command("validate", "load a document and print its canonical form", cmd_validate);
  file_command("spectrum", "space of prime filters of a lattice", cmd_spectrum);
  file_command("ideals", "ideal lattice", cmd_ideals);
  file_command("filters", "prime filters of a lattice, or open prime filters of a space", cmd_filters);
  file_command("sobrify", "sobrification of a space", cmd_sobrify);
  file_command("t0", "T0 quotient of a space", cmd_t0);
  file_command("hausdorff", "Hausdorff reflection of a space", cmd_hausdorff);
  file_command("center", "Boolean center (compact regular coreflection) of a lattice", cmd_center);
  file_command("waybelow", "way-below relation computed from its definition", cmd_waybelow);
  file_command("cechstone", "compare both sides of the compactification square", cmd_cechstone);

  CLI::App* exp = app.add_subcommand("export", "export diagrams");
  exp->require_subcommand(1);
  CLI::App* dot = exp->add_subcommand("dot", "Hasse diagram in DOT format");
  dot->add_option("file", path, "lattice or space document")->required();
  dot->callback([&] { status = cmd_export_dot(path); });

  LawsOptions laws;
  CLI::App* lw = app.add_subcommand("laws", "run a law suite over the finite universes");
  lw->add_option("--suite", laws.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  lw->add_option("--max-points", laws.max_points, "largest space size (at most 5)");
  lw->add_option("--max-lattice", laws.max_lattice, "largest lattice size (at most 16)");
  lw->add_option("--seed", laws.seed, "seed for sampling five-point spaces");
  lw->add_option("--sample", laws.sample, "number of five-point spaces sampled");
  lw->add_flag("--force", laws.force, "allow limits beyond the guard rails");
  lw->callback([&] { status = cmd_laws(laws); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const CycleError& e) {
    std::cerr << "invalid order: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const NotALattice& e) {
    std::cerr << "not a lattice: " << e.what() << "\n";
    return kFail;
  } catch (const NotDistributive& e) {
    std::cerr << "not distributive: " << e.what() << "\n";
    return kFail;
  } catch (const NotATopology& e) {
    std::cerr << "not a topology: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return status;
}
