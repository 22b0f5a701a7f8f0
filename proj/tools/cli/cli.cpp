#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "modlat/census.hpp"
#include "modlat/generator.hpp"
#include "modlat/lattice_io.hpp"
#include "modlat/listing.hpp"
#include "modlat/orbit_vectors.hpp"
#include "modlat/polya.hpp"
#include "modlat/rack.hpp"
#include "modlat/render.hpp"
#include "modlat/store.hpp"

namespace modlat::cli {
namespace fs = std::filesystem;

namespace {

// Domain failures that are not exceptions from the library itself.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int max_n = 12;
  int jobs = 1;
  std::size_t budget = 0;
  std::string family;
  std::string store;
  std::string out_dir;
  std::string format = "covers";
  std::string index = "0";
  std::uint64_t seed = 0;
  int count = 1;
  bool table = false;
  std::vector<std::string> checks{"duality", "rack-closure", "roundtrip"};
  std::string rack;
  int trinkets = 0;
  std::string vector;
  std::string input = "-";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_lattice(const Lattice& lattice, const std::string& format) {
  if (format == "d6") return to_digraph6(lattice) + "\n";
  if (format == "dot") return render_dot(lattice);
  return to_cover_text(lattice);
}

std::string format_vector(const DecorationVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

BigInt parse_index(const std::string& text) {
  try {
    return parse_bigint(text);
  } catch (const std::exception&) {
    throw DomainError("bad index \"" + text + "\"");
  }
}

Family parse_family(const std::string& name) {
  if (name == "rack") return Family::kModularViRack;
  if (name == "mv") return Family::kModularVi;
  return Family::kModular;
}

// Rack store from --store, or generated in memory up to max_n.
RackStore rack_store(const Options& o, int max_n, int jobs) {
  if (!o.store.empty()) return RackStore::open(o.store, "rack");
  return RackStore::in_memory("rack", generate_up_to(Family::kModularViRack, max_n, jobs));
}

Lattice resolve_rack(const Options& o) {
  std::smatch match;
  static const std::regex id(R"(([0-9]+)\.([0-9]+))");
  if (std::regex_match(o.rack, match, id) && !fs::exists(o.rack)) {
    const int k = std::stoi(match[1].str());
    const std::size_t i = std::stoul(match[2].str());
    if (k < 1 || k > kMaxElements) throw DomainError("bad rack size in id " + o.rack);
    return rack_store(o, k, 1).get(k, i);
  }
  const Lattice lattice = parse_lattice(read_input(o.rack));
  if (!is_rack(lattice)) {
    throw DomainError("lattice is not a rack (" + std::to_string(trinkets(lattice).size()) +
                      " trinkets)");
  }
  return lattice;
}

std::unique_ptr<VirtualListing> make_listing(const RackStore& racks, const Options& o) {
  if (o.family == "m") return std::make_unique<ModularListing>(racks, o.n);
  return std::make_unique<ViListing>(racks, o.n);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto forms = generate_up_to(parse_family(o.family), o.n, o.jobs, o.budget);
  RackStore::write(o.out_dir, o.family, forms);
  for (int k = 1; k <= o.n; ++k) out << k << '\t' << forms[k].size() << '\n';
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  const RackStore racks = rack_store(o, o.n, o.jobs);
  Census census(racks);
  if (o.table) {
    out << census_header() << '\n';
    for (const CensusRow& row : census.table(o.n)) out << format_row(row) << '\n';
  } else {
    out << format_row(census.row(o.n)) << '\n';
  }
  return 0;
}

int cmd_unrank(const Options& o, std::ostream& out) {
  const RackStore racks = rack_store(o, o.n, o.jobs);
  const auto listing = make_listing(racks, o);
  out << format_lattice(listing->unrank(parse_index(o.index)), o.format);
  return 0;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const RackStore racks = rack_store(o, o.n, o.jobs);
  const auto listing = make_listing(racks, o);
  for (int i = 0; i < o.count; ++i) {
    out << format_lattice(listing->sample(o.seed + static_cast<std::uint64_t>(i)), o.format);
  }
  return 0;
}

int cmd_decorations(const std::string& action, const Options& o, std::ostream& out) {
  const Lattice rack = resolve_rack(o);
  const OrbitVectorFamily family(site_action(rack), o.trinkets);
  if (action == "count") {
    out << to_string(count_decorations(rack, o.trinkets)) << '\n';
  } else if (action == "list") {
    family.for_each([&](const DecorationVector& v) { out << format_vector(v) << '\n'; });
  } else if (action == "unrank") {
    const BigInt index = parse_index(o.index);
    if (index < 0 || index >= family.size()) {
      throw DomainError("index " + o.index + " out of range (cardinality " +
                        to_string(family.size()) + ")");
    }
    out << format_vector(family.unrank(index)) << '\n';
  } else {
    out << format_vector(family.sample_uniform(o.seed)) << '\n';
  }
  return 0;
}

int cmd_decorate(const Options& o, std::ostream& out) {
  const Lattice rack = resolve_rack(o);
  std::vector<int> counts;
  std::stringstream in(o.vector);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      counts.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw DomainError("bad decoration vector \"" + o.vector + "\"");
    }
  }
  out << format_lattice(decorate(rack, counts), o.format);
  return 0;
}

int cmd_render(const Options& o, std::ostream& out) {
  out << render_dot(parse_lattice(read_input(o.input)));
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const RackDecomposition d = decoration_vector_of(parse_lattice(read_input(o.input)));
  out << "# decoration vector " << format_vector(d.counts) << '\n';
  out << format_lattice(d.rack, o.format);
  return 0;
}

// verify ---------------------------------------------------------------------

class Verifier {
 public:
  Verifier(const RackStore& racks, int max_n, std::ostream& out)
      : racks_(racks), max_n_(max_n), out_(out) {}

  bool ok() const { return ok_; }

  void report(const std::string& check, int n, const std::string& problem) {
    out_ << check << '\t' << n << '\t' << (problem.empty() ? "ok" : "FAIL: " + problem) << '\n';
    if (!problem.empty()) ok_ = false;
  }

  void duality() {
    for (int n = 1; n <= max_n_; ++n) {
      const std::vector<CanonicalForm> forms = racks_.read_all(n);
      const std::set<CanonicalForm> known(forms.begin(), forms.end());
      std::map<std::vector<int>, int> tally;
      std::string problem;
      for (const CanonicalForm& f : forms) {
        const Lattice l = lattice_of(f);
        if (!known.count(canonical_form(dual(l)))) problem = "dual of " + f.bytes + " missing";
        ++tally[rank_sequence(l).counts];
      }
      for (const auto& [seq, count] : tally) {
        const std::vector<int> rev(seq.rbegin(), seq.rend());
        if (tally.count(rev) == 0 || tally.at(rev) != count) problem = "rank tally not symmetric";
      }
      report("duality", n, problem);
    }
  }

  void rack_closure(int jobs) {
    const auto vi = generate_up_to(Family::kModularVi, max_n_, jobs);
    Census census(racks_);
    for (int n = 1; n <= max_n_; ++n) {
      std::map<int, std::set<CanonicalForm>> stored;
      std::string problem;
      for (const CanonicalForm& f : vi[n]) {
        const Lattice r = rack_of(lattice_of(f));
        auto& known = stored[r.size()];
        if (known.empty()) {
          const auto all = racks_.read_all(r.size());
          known.insert(all.begin(), all.end());
        }
        if (!known.count(canonical_form(r))) problem = "rack of " + f.bytes + " not stored";
      }
      if (census.mv_count(n) != BigInt(vi[n].size())) {
        problem = "census gives " + to_string(census.mv_count(n)) + " vi-lattices, generation " +
                  std::to_string(vi[n].size());
      }
      report("rack-closure", n, problem);
    }
  }

  void roundtrip(int jobs) {
    const auto fresh = generate_up_to(Family::kModularViRack, max_n_, jobs);
    for (int n = 1; n <= max_n_; ++n) {
      const std::vector<CanonicalForm> streamed = racks_.read_all(n);
      std::string problem;
      if (streamed != fresh[n]) problem = "records differ from a fresh generation";
      for (std::size_t i = 0; i < streamed.size() && problem.empty(); ++i) {
        const CanonicalForm seek = racks_.record(n, i);
        if (seek != streamed[i]) {
          problem = "record " + std::to_string(i) + " differs between seek and stream";
          break;
        }
        try {
          const Lattice l = lattice_of(seek);
          if (canonical_form(l) != seek) problem = "record " + std::to_string(i) + " not canonical";
          else if (!is_modular(l) || !is_vertically_indecomposable(l) || !is_rack(l))
            problem = "record " + std::to_string(i) + " is not a modular vi-rack";
          const RecordMeta meta = compute_meta(l);
          const RecordMeta& stored = racks_.meta(n, i);
          if (meta.sites != stored.sites || meta.cycle_index != stored.cycle_index)
            problem = "metadata of record " + std::to_string(i) + " does not match";
        } catch (const std::exception& e) {
          problem = "record " + std::to_string(i) + ": " + e.what();
        }
      }
      report("roundtrip", n, problem);
    }
  }

 private:
  const RackStore& racks_;
  int max_n_;
  std::ostream& out_;
  bool ok_ = true;
};

int cmd_verify(const Options& o, std::ostream& out) {
  std::optional<fs::path> scratch;
  RackStore racks = [&] {
    if (!o.store.empty()) return RackStore::open(o.store, "rack");
    scratch = fs::temp_directory_path() /
              ("modlat-verify-" + std::to_string(std::random_device{}()));
    return RackStore::write(*scratch, "rack",
                            generate_up_to(Family::kModularViRack, o.max_n, o.jobs));
  }();
  struct Cleanup {
    std::optional<fs::path>& dir;
    ~Cleanup() {
      std::error_code ec;
      if (dir) fs::remove_all(*dir, ec);
    }
  } cleanup{scratch};

  for (int k = 1; k <= o.max_n; ++k) racks.require_size(k);
  Verifier verifier(racks, o.max_n, out);
  for (const std::string& check : o.checks) {
    try {
      if (check == "duality") verifier.duality();
      if (check == "rack-closure") verifier.rack_closure(o.jobs);
      if (check == "roundtrip") verifier.roundtrip(o.jobs);
    } catch (const std::exception& e) {
      verifier.report(check, 0, e.what());
    }
  }
  out << (verifier.ok() ? "all checks passed" : "verification failed") << '\n';
  return verifier.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Modular lattices through racks and decorations"};
  app.name("modlat");
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> formats{"covers", "d6", "dot"};
  auto add_store = [&](CLI::App* cmd) {
    cmd->add_option("--store", o.store, "Rack store directory (default: generate in memory)");
  };
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  };
  auto add_size = [&](CLI::App* cmd) {
    cmd->add_option("--n", o.n, "Lattice size")->required()->check(CLI::Range(1, kMaxElements));
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a store of canonical forms");
  gen->add_option("--family", o.family, "mv, rack or m")
      ->required()
      ->check(CLI::IsMember({"mv", "rack", "m"}));
  add_size(gen);
  gen->add_option("--out", o.out_dir, "Output directory")->required();
  gen->add_option("--budget", o.budget, "Cap on expanded partial structures (0: none)");
  add_jobs(gen);

  CLI::App* count = app.add_subcommand("count", "Count racks, vi-lattices and lattices");
  add_size(count);
  count->add_flag("--table", o.table, "Print every row up to n with a header");
  add_store(count);
  add_jobs(count);

  CLI::App* unrank = app.add_subcommand("unrank", "Lattice at an index of a virtual listing");
  unrank->add_option("--family", o.family)->required()->check(CLI::IsMember({"mv", "m"}));
  add_size(unrank);
  unrank->add_option("--index", o.index)->required();
  unrank->add_option("--format", o.format)->check(CLI::IsMember(formats));
  add_store(unrank);
  add_jobs(unrank);

  CLI::App* sample = app.add_subcommand("sample", "Uniform random members of a virtual listing");
  sample->add_option("--family", o.family)->required()->check(CLI::IsMember({"mv", "m"}));
  add_size(sample);
  sample->add_option("--seed", o.seed)->required();
  sample->add_option("--count", o.count, "Draws; draw i uses seed + i")->check(CLI::NonNegativeNumber);
  sample->add_option("--format", o.format)->check(CLI::IsMember(formats));
  add_store(sample);
  add_jobs(sample);

  CLI::App* verify = app.add_subcommand("verify", "Consistency checks on a rack store");
  verify->add_option("--checks", o.checks)
      ->delimiter(',')
      ->check(CLI::IsMember({"duality", "rack-closure", "roundtrip"}));
  verify->add_option("--max-n", o.max_n)->check(CLI::Range(1, kMaxElements));
  add_store(verify);
  add_jobs(verify);

  CLI::App* decorations = app.add_subcommand("decorations", "Decorations of one rack");
  decorations->require_subcommand(1);
  std::string decoration_action;
  const std::pair<const char*, const char*> decoration_actions[] = {
      {"count", "Number of decorations"},
      {"list", "Representative vectors in decreasing lex order"},
      {"unrank", "Vector at an index of the list"},
      {"sample", "Uniform random vector"}};
  for (const auto& [name, help] : decoration_actions) {
    CLI::App* sub = decorations->add_subcommand(name, help);
    sub->add_option("--rack", o.rack, "Store id k.i or a lattice file")->required();
    sub->add_option("--trinkets", o.trinkets, "Number of trinkets")->required()->check(CLI::NonNegativeNumber);
    if (std::string(name) == "unrank") sub->add_option("--index", o.index)->required();
    if (std::string(name) == "sample") sub->add_option("--seed", o.seed)->required();
    add_store(sub);
    sub->callback([&decoration_action, name] { decoration_action = name; });
  }

  CLI::App* decorate_cmd = app.add_subcommand("decorate", "Add trinkets to a rack");
  decorate_cmd->add_option("--rack", o.rack, "Store id k.i or a lattice file")->required();
  decorate_cmd->add_option("--vector", o.vector, "Comma-separated trinket counts")->required();
  decorate_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  add_store(decorate_cmd);

  CLI::App* render = app.add_subcommand("render", "DOT diagram of a lattice");
  render->add_option("--input", o.input, "Lattice file, - for stdin");

  CLI::App* reduce = app.add_subcommand("reduce", "Rack and decoration vector of a lattice");
  reduce->add_option("--input", o.input, "Lattice file, - for stdin");
  reduce->add_option("--format", o.format)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "modlat: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*count) return cmd_count(o, out);
    if (*unrank) return cmd_unrank(o, out);
    if (*sample) return cmd_sample(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*decorations) return cmd_decorations(decoration_action, o, out);
    if (*decorate_cmd) return cmd_decorate(o, out);
    if (*render) return cmd_render(o, out);
    if (*reduce) return cmd_reduce(o, out);
  } catch (const std::exception& e) {
    err << "modlat: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace modlat::cli
