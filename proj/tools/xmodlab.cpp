#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xmodlab/crossed_module.hpp"
#include "xmodlab/errors.hpp"
#include "xmodlab/group_ops.hpp"
#include "xmodlab/induced.hpp"
#include "xmodlab/isomorphism.hpp"

namespace {

using namespace xmodlab;

enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kInputError = 2,
  kLimitExceeded = 3,
  kInternalError = 4,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ParseError tied to the command-line argument it came from.
struct ArgumentError {
  std::string flag;
  std::string text;
  ParseError error;
};

std::vector<Permutation> parse_generators(const std::string& flag, const std::string& text,
                                          std::size_t degree) {
  try {
    return parse_permutation_list(text, degree);
  } catch (const ParseError& e) {
    throw ArgumentError{flag, text, e};
  }
}

std::size_t inferred_degree(const std::string& flag, const std::vector<std::string>& specs,
                            std::size_t degree) {
  for (const auto& s : specs)
    for (const auto& p : parse_generators(flag, s, 0)) degree = std::max(degree, p.degree());
  return degree;
}

PermGroup parse_group(const std::string& flag, const std::string& text, std::size_t degree) {
  return group_from_generators(parse_generators(flag, text, degree), degree);
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string describe(const std::string& name, const Fingerprint& f) {
  if (!name.empty()) return name;
  std::ostringstream os;
  os << "order " << f.order << ", centre " << f.center_order << ", G/G' "
     << cyclic_product_name(f.abelianization);
  return os.str();
}

void print_fingerprint(std::ostream& os, const Fingerprint& f) {
  os << "order:          " << f.order << "\n"
     << "abelianization: " << join(f.abelianization) << " ("
     << cyclic_product_name(f.abelianization) << ")\n"
     << "centre order:   " << f.center_order << "\n"
     << "derived order:  " << f.derived_order << "\n"
     << "element orders:";
  for (const auto& [o, c] : f.element_orders) os << ' ' << o << ':' << c;
  os << "\n";
}

void print_report(std::ostream& os, const Report& r) {
  os << "subgroup P:     " << r.subgroup << "\n"
     << "|i*P|:          " << r.order << "\n"
     << "i*P:            " << describe(r.name, r.fingerprint) << "\n"
     << "pi2:            " << join(r.pi2) << " (" << cyclic_product_name(r.pi2) << ")\n"
     << "pi1:            " << describe(r.pi1_name, r.pi1) << "\n"
     << "normal closure: " << r.normal_closure_order << "\n"
     << "presentation:   " << r.generators << " generators, " << r.relators << " relators\n"
     << "cosets defined: " << r.cosets_defined << "\n";
}

void print_table(std::ostream& os, const TableResult& t) {
  os << std::left << std::setw(16) << "P" << std::setw(8) << "|i*P|" << std::setw(36) << "i*P"
     << std::setw(14) << "pi2" << "pi1\n";
  for (const auto& ind : t.induced) {
    const Report& r = ind.report;
    os << std::left << std::setw(16) << r.subgroup << std::setw(8) << r.order << std::setw(36)
       << describe(r.name, r.fingerprint) << std::setw(14) << cyclic_product_name(r.pi2)
       << describe(r.pi1_name, r.pi1) << "\n";
  }
}

// Generator images, skipping identities and repeats.
void print_group_hom(std::ostream& os, const GroupHom& h) {
  const auto& gens = h.source().generators();
  std::vector<Permutation> shown;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_identity() || std::find(shown.begin(), shown.end(), gens[i]) != shown.end())
      continue;
    shown.push_back(gens[i]);
    os << "  " << gens[i] << " -> " << h.generator_images()[i] << "\n";
  }
}

CrossedModule read_xmod(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what(),
                     static_cast<std::size_t>(e.byte));
  }
  return crossed_module_from_json(j);
}

struct Options {
  std::size_t degree = 0;
  std::vector<std::string> groups;
  std::vector<std::string> subs;
  std::size_t limit = kDefaultMaxCosets;
  bool json = false;
  bool verify = false;
  std::vector<std::size_t> rows;
  std::uint32_t seed = 1;
  std::vector<std::string> files;
};

std::size_t degree_for(const Options& o) {
  if (o.degree != 0) return o.degree;
  return inferred_degree("--sub", o.subs, inferred_degree("--group", o.groups, 1));
}

int cmd_induce(const Options& o) {
  if (o.groups.size() != 1 || o.subs.size() != 1)
    throw UsageError("induce needs exactly one --group and one --sub");
  std::size_t degree = degree_for(o);
  PermGroup q = parse_group("--group", o.groups[0], degree);
  PermGroup p = parse_group("--sub", o.subs[0], degree);
  Induced result = induce_subgroup(q, p, o.limit);
  if (o.json)
    std::cout << result.report.to_json().dump(2) << "\n";
  else
    print_report(std::cout, result.report);
  return kOk;
}

int cmd_table(const Options& o) {
  std::vector<std::size_t> rows;
  for (std::size_t r : o.rows) {
    if (r < 1 || r > table_rows().size())
      throw UsageError("--row must be between 1 and " + std::to_string(table_rows().size()));
    rows.push_back(r - 1);
  }
  TableResult t = run_table(o.limit, rows);
  if (o.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& ind : t.induced) arr.push_back(ind.report.to_json());
    std::cout << arr.dump(2) << "\n";
  } else {
    print_table(std::cout, t);
  }
  if (!o.verify) return kOk;

  std::vector<std::string> diffs = verify_table(t);
  // Recompute the first row with a transversal drawn from the seed.
  std::mt19937 rng(o.seed);
  const TableRow& row = table_rows()[t.rows.front()];
  PermGroup s4 = symmetric(4);
  PermGroup p(4, parse_permutation_list(row.generators, 4));
  Induced again = induce_subgroup(s4, p, o.limit, random_transversal(s4, p, rng));
  if (!xmod_isomorphic(t.induced.front().xmod, again.xmod))
    diffs.push_back("row " + std::to_string(t.rows.front() + 1) +
                    ": a random transversal gives a different crossed module");

  for (const auto& d : diffs) std::cerr << "mismatch: " << d << "\n";
  if (!o.json) std::cout << (diffs.empty() ? "verified\n" : "verification FAILED\n");
  return diffs.empty() ? kOk : kMismatch;
}

int cmd_check(const Options& o) {
  if (o.files.size() != 1) throw UsageError("check needs one crossed module file");
  CrossedModule x = read_xmod(o.files[0]);
  ValidationReport r = validate(x);
  if (o.json) {
    nlohmann::ordered_json j;
    j["cm1"] = r.cm1;
    j["cm2"] = r.cm2;
    j["kernel_central"] = r.kernel_central;
    j["image_normal"] = r.image_normal;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << r.summary() << "\n";
  }
  return r.ok() ? kOk : kMismatch;
}

int cmd_identify(const Options& o) {
  if (o.groups.size() != 1) throw UsageError("identify needs exactly one --group");
  PermGroup g = parse_group("--group", o.groups[0], degree_for(o));
  Fingerprint f = fingerprint(g);
  std::string name = group_name(g);
  if (o.json) {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["fingerprint"] = to_json(f);
    std::cout << j.dump(2) << "\n";
  } else {
    print_fingerprint(std::cout, f);
    std::cout << "name:           " << (name.empty() ? "unknown" : name) << "\n";
  }
  return kOk;
}

int cmd_iso(const Options& o) {
  if (o.files.size() == 2) {
    CrossedModule x = read_xmod(o.files[0]);
    CrossedModule y = read_xmod(o.files[1]);
    auto phi = xmod_isomorphic(x, y);
    if (!phi) {
      std::cout << "not isomorphic\n";
      return kMismatch;
    }
    std::cout << "isomorphic\nsource map:\n";
    print_group_hom(std::cout, phi->source_map);
    std::cout << "range map:\n";
    print_group_hom(std::cout, phi->range_map);
    return kOk;
  }
  std::size_t degree = degree_for(o);
  if (o.groups.size() == 1 && o.subs.size() == 2) {
    PermGroup q = parse_group("--group", o.groups[0], degree);
    Induced a = induce_subgroup(q, parse_group("--sub", o.subs[0], degree), o.limit);
    Induced b = induce_subgroup(q, parse_group("--sub", o.subs[1], degree), o.limit);
    auto phi = xmod_isomorphic(a.xmod, b.xmod);
    if (!phi) {
      std::cout << "induced crossed modules are not isomorphic\n";
      return kMismatch;
    }
    std::cout << "induced crossed modules are isomorphic (order " << a.report.order
              << ")\nsource map:\n";
    print_group_hom(std::cout, phi->source_map);
    std::cout << "range map:\n";
    print_group_hom(std::cout, phi->range_map);
    return kOk;
  }
  if (o.groups.size() == 2 && o.subs.empty()) {
    PermGroup g = parse_group("--group", o.groups[0], degree);
    PermGroup h = parse_group("--group", o.groups[1], degree);
    auto phi = isomorphic(g, h);
    if (!phi) {
      std::cout << "not isomorphic\n";
      return kMismatch;
    }
    std::cout << "isomorphic\n";
    print_group_hom(std::cout, *phi);
    return kOk;
  }
  throw UsageError("iso needs two files, one --group with two --sub, or two --group");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced crossed modules of permutation groups"};
  app.require_subcommand(1);
  Options o;

  auto add_group_flags = [&](CLI::App* cmd, bool subs) {
    cmd->add_option("--degree", o.degree, "Degree of the permutations (default: largest point)");
    cmd->add_option("--group", o.groups, "Generators in cycle notation, e.g. \"(1,2),(1,2,3,4)\"");
    if (subs) cmd->add_option("--sub", o.subs, "Subgroup generators in cycle notation");
  };
  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", o.limit, "Maximum number of cosets")
        ->envname("XMODLAB_LIMIT")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* induce = app.add_subcommand("induce", "Induce the identity crossed module of P <= Q");
  add_group_flags(induce, true);
  add_limit(induce);
  induce->add_flag("--json", o.json, "Print the report as JSON");

  CLI::App* table = app.add_subcommand("table", "Induced crossed modules over S4");
  add_limit(table);
  table->add_flag("--json", o.json, "Print the reports as a JSON array");
  table->add_flag("--verify", o.verify, "Compare with the expected values");
  table->add_option("--row", o.rows, "Row to compute (1-7); repeatable");
  table->add_option("--seed", o.seed, "Seed for the random transversal used by --verify");

  CLI::App* check = app.add_subcommand("check", "Validate a crossed module file");
  check->add_option("file", o.files, "Crossed module JSON")->required();
  check->add_flag("--json", o.json, "Print the result as JSON");

  CLI::App* identify = app.add_subcommand("identify", "Fingerprint a permutation group");
  add_group_flags(identify, false);
  identify->add_flag("--json", o.json, "Print the fingerprint as JSON");

  CLI::App* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("files", o.files, "Two crossed module JSON files");
  add_group_flags(iso, true);
  add_limit(iso);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*induce) return cmd_induce(o);
    if (*table) return cmd_table(o);
    if (*check) return cmd_check(o);
    if (*identify) return cmd_identify(o);
    return cmd_iso(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.flag << ": " << e.error.what() << "\n  " << e.text << "\n  "
              << std::string(e.error.position(), ' ') << "^\n";
    return kInputError;
  } catch (const CosetLimitExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --limit or XMODLAB_LIMIT)\n";
    return kLimitExceeded;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimitExceeded;
  } catch (const ValidationFailed& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
