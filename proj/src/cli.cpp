#include "permtree/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "permtree/errors.hpp"
#include "permtree/generators_io.hpp"
#include "permtree/group_ops.hpp"
#include "permtree/oracles.hpp"
#include "permtree/serialize.hpp"
#include "permtree/verify.hpp"

namespace permtree {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string in, out, format;
  std::string constants;
  std::string sub, set;
  std::size_t r = 3;
  std::uint64_t seed = 1;
  std::uint64_t max_cosets = kDefaultMaxCosets;
  std::size_t c3_threshold = 5;
  std::uint64_t threshold = kExhaustiveThreshold;
  std::size_t samples = 20;
  std::size_t alt_limit = 6;
  bool alt7 = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Writes to a sibling temporary and renames it into place.
void write_atomic(const std::string& path, const std::string& data) {
  std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << data;
  }
  std::filesystem::rename(tmp, target);
}

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

PermGroup read_group(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  auto gf = parse_generators(read_file(path));
  return PermGroup(gf.degree, gf.generators);
}

/// A generator file builds a fresh augmented tree; a JSON document is read back.
TreeDocument read_tree(const RunConfig& rc, const ConstantConfig& cc) {
  if (rc.in.empty()) throw UsageError("--in is required");
  auto text = read_file(rc.in);
  if (looks_like_json(text)) return document_from_json(Json::parse(text));
  auto gf = parse_generators(text);
  PermGroup g(gf.degree, gf.generators);
  return {augment_tree(build_structure_tree(g, cc.tree_config(rc.c3_threshold))), std::nullopt};
}

std::string format_of(const RunConfig& rc, const std::string& fallback, std::initializer_list<const char*> allowed) {
  std::string f = rc.format.empty() ? fallback : rc.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("format '" + f + "' is not available for " + rc.command);
}

std::string fixed(const Real& x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << x.convert_to<double>();
  return os.str();
}

std::string header(const RunConfig& rc, const ConstantConfig& cc) {
  std::ostringstream os;
  os << "# permtree " << rc.command << "  seed=" << rc.seed << "  log=natural  constants:";
  for (const auto& [k, v] : cc.entries()) os << ' ' << k << '=' << v;
  os << '\n';
  return os.str();
}

bool giant_root(const StructureTree& t) {
  const auto& root = t.node(t.root());
  return is_transitive(root.group, root.domain) && is_giant(root.group, root.domain) != Giant::NEITHER;
}

struct Output {
  std::string text;
  int code = kExitOk;
};

Output cmd_tree(const RunConfig& rc, const ConstantConfig& cc, std::ostream& err) {
  auto doc = read_tree(rc, cc);
  auto rep = validate_tree(doc.tree, cc.tree_config(rc.c3_threshold));
  Output o;
  if (!rep.passed()) {
    err << rep.summary();
    o.code = kExitValidation;
  }
  auto f = format_of(rc, "json", {"json", "dot", "text"});
  if (f == "json") o.text = dump(tree_json(doc.tree));
  else if (f == "dot") o.text = tree_to_dot(doc.tree);
  else o.text = header(rc, cc) + rep.summary();
  return o;
}

CutSystem cuts_for(const TreeDocument& doc, const RunConfig& rc) {
  if (doc.cuts && doc.cuts->r == rc.r) return *doc.cuts;
  return assemble_cuts(doc.tree, rc.r);
}

std::string cuts_text(const CutSystem& sys) {
  std::ostringstream os;
  for (std::size_t k = 0; k < sys.cuts.size(); ++k) {
    const auto& c = sys.cuts[k];
    os << "cut " << k << "  " << to_string(c.kind) << "  " << c.origin_string() << "  m=" << c.m << "  nodes="
       << c.nodes.size() << " edges=" << c.edges.size() << '\n';
  }
  return os.str();
}

Output cmd_cuts(const RunConfig& rc, const ConstantConfig& cc, std::ostream& err) {
  auto doc = read_tree(rc, cc);
  auto sys = cuts_for(doc, rc);
  Output o;
  auto v = validate_cuts(doc.tree, sys);
  auto mc = verify_mc_bounds(sys, doc.tree.degree(), giant_root(doc.tree));
  if (!v.passed() || !mc.passed()) {
    err << v.summary() << mc.summary();
    o.code = kExitValidation;
  }
  auto f = format_of(rc, "json", {"json", "text"});
  o.text = f == "json" ? dump(document_json(doc.tree, &sys)) : header(rc, cc) + cuts_text(sys);
  return o;
}

std::string ledger_text(const BoundReport& rep) {
  std::ostringstream os;
  os << "ledger (natural log of each factor)\n";
  for (const auto& e : rep.ledger) {
    os << "  cut " << e.cut << "  " << std::left << std::setw(8) << to_string(e.kind) << std::setw(10) << e.origin
       << " m=" << std::setw(4) << e.m << " log=" << fixed(e.log_factor);
    if (!e.alt_source.empty()) os << "  alt:" << e.alt_source;
    os << '\n';
  }
  os << "total log-bound        " << fixed(rep.total_log) << '\n';
  os << "consolidated form      " << fixed(rep.paper_form_log) << '\n';
  if (rep.closed_form_log) os << "closed form            " << fixed(*rep.closed_form_log) << '\n';
  else os << "closed form            undefined for n < 16\n";
  if (rep.n >= 2) {
    os << "Babai 1982             " << fixed(rep.babai82_log) << '\n';
    os << "Babai-Seress 1988      " << fixed(rep.bs88_log) << "  (o(1) in the exponent dropped)\n";
  }
  for (const auto& [m, b] : rep.alt_used) os << "alt diam " << m << ": log " << fixed(b.log_value) << " from " << b.source << '\n';
  return os.str();
}

BoundReport bound_for(const RunConfig& rc, const ConstantConfig& cc, TreeDocument& doc, CutSystem& sys) {
  doc = read_tree(rc, cc);
  sys = cuts_for(doc, rc);
  auto table = alt_diam_table(rc.alt_limit, rc.seed, rc.samples, rc.threshold);
  return total_bound(sys, doc.tree.degree(), cc, table);
}

Output cmd_bound(const RunConfig& rc, const ConstantConfig& cc) {
  TreeDocument doc;
  CutSystem sys;
  auto rep = bound_for(rc, cc, doc, sys);
  auto f = format_of(rc, "json", {"json", "text"});
  Output o;
  if (f == "json") {
    auto j = bound_json(rep);
    j["seed"] = rc.seed;
    o.text = dump(j);
  } else {
    o.text = header(rc, cc) + ledger_text(rep);
  }
  return o;
}

Output cmd_report(const RunConfig& rc, const ConstantConfig& cc) {
  TreeDocument doc;
  CutSystem sys;
  auto rep = bound_for(rc, cc, doc, sys);
  const auto& t = doc.tree;
  std::ostringstream os;
  os << header(rc, cc);
  std::size_t colors[3] = {0, 0, 0};
  for (const auto& e : t.edges()) ++colors[static_cast<int>(e.color)];
  os << "degree " << t.degree() << ", |G| = " << t.node(t.root()).group.order() << '\n';
  os << "tree: " << t.nodes().size() << " nodes, " << colors[0] << " C1 / " << colors[1] << " C2 / " << colors[2]
     << " C3 edges, augmented=" << (t.augmented() ? "yes" : "no") << '\n';
  auto tv = validate_tree(t, cc.tree_config(rc.c3_threshold));
  os << "tree invariants: " << tv.summary();
  auto cv = validate_cuts(t, sys);
  auto mc = verify_mc_bounds(sys, t.degree(), giant_root(t));
  os << "cut system (r=" << sys.r << "): " << sys.cuts.size() << " cuts, " << sys.thick_count() << " thick, "
     << sys.thin_count() << " thin\n";
  os << cuts_text(sys);
  os << "cut invariants: " << cv.summary() << mc.summary();
  os << ledger_text(rep);
  Output o{os.str(), tv.passed() && cv.passed() && mc.passed() ? kExitOk : kExitValidation};
  return o;
}

Output cmd_diam_exact(const RunConfig& rc) {
  auto g = read_group(rc.in);
  auto rec = group_diameter_exact(g, std::filesystem::path(rc.in).stem().string(), rc.threshold);
  auto f = format_of(rc, "json", {"json", "text"});
  Output o;
  if (f == "json") {
    o.text = to_json_line(rec) + "\n";
  } else {
    std::ostringstream os;
    os << "diameter " << rec.diameter << " (" << to_string(rec.mode) << ", " << rec.sets_examined
       << " minimal generating sets)\nwitness:";
    for (const auto& s : rec.generators) os << ' ' << s.to_string();
    os << '\n';
    o.text = os.str();
  }
  return o;
}

Output cmd_schreier(const RunConfig& rc) {
  auto g = read_group(rc.in);
  if (rc.sub.empty()) throw UsageError("--sub is required");
  auto h = read_group(rc.sub);
  std::vector<Permutation> s = g.generators();
  if (!rc.set.empty()) s = parse_generators(read_file(rc.set)).generators;
  s = with_inverses(s);
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("H is not a subgroup of G");
  if (!generates(g, s)) throw std::invalid_argument("S does not generate G");
  auto space = std::make_shared<const CosetSpace>(g, h, rc.max_cosets);
  auto graph = schreier_graph(space, s);
  auto diam = bfs::diameter_parallel(graph.undirected());
  auto f = format_of(rc, "json", {"json", "dot", "text"});
  Output o;
  if (f == "dot") {
    o.text = to_dot(graph);
  } else if (f == "json") {
    Json j;
    j["index"] = space->index();
    j["diameter"] = diam;
    Json labels = Json::array();
    for (const auto& x : s) labels.push_back(x.to_string());
    j["labels"] = labels;
    o.text = dump(j);
  } else {
    o.text = "index " + std::to_string(space->index()) + "\ndiameter " + std::to_string(diam) + "\n";
  }
  return o;
}

std::vector<Permutation> perms_from(const Json& arr, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& s : arr) out.push_back(Permutation::parse(s.get<std::string>(), degree));
  return out;
}

std::vector<ConjectureInstance> read_instances(const std::string& path, std::uint64_t threshold) {
  std::istringstream in(read_file(path));
  std::vector<ConjectureInstance> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = Json::parse(line);
    std::vector<ConjectureFactor> factors;
    std::size_t total = 0;
    for (const auto& f : j.at("factors")) {
      auto d = f.at("degree").get<std::size_t>();
      factors.push_back({PermGroup(d, perms_from(f.at("G"), d)), PermGroup(d, perms_from(f.at("Gprime"), d))});
      total += d;
    }
    std::optional<PermGroup> h;
    if (j.contains("H")) h = PermGroup(total, perms_from(j.at("H"), total));
    out.push_back(make_instance(j.value("name", "instance " + std::to_string(out.size())), std::move(factors), h, threshold));
  }
  return out;
}

Output cmd_conjecture(const RunConfig& rc) {
  std::vector<ConjectureInstance> instances;
  if (rc.in.empty()) {
    instances = k1_fixtures();
    for (auto& i : k2_fixtures()) instances.push_back(std::move(i));
  } else {
    instances = read_instances(rc.in, rc.threshold);
  }
  Output o;
  for (const auto& i : instances)
    if (i.factors.size() == 1 && !conjecture_k1_check(i)) o.code = kExitValidation;
  auto rep = conjecture_harness(std::move(instances));
  auto f = format_of(rc, "csv", {"csv", "json", "text"});
  if (f == "csv") {
    o.text = ratio_csv(rep);
  } else if (f == "json") {
    for (const auto& i : rep.instances) o.text += to_json_line(i) + "\n";
  } else {
    std::ostringstream os;
    os << ratio_csv(rep) << "empirical constants:";
    for (const auto& [c, v] : rep.empirical_constants) os << "  c=" << c << ": " << v;
    os << "\nk = 1 bound " << (o.code == kExitOk ? "holds on every instance" : "VIOLATED") << '\n';
    o.text = os.str();
  }
  return o;
}

Output cmd_verify(const RunConfig& rc) {
  VerifyOptions opt;
  opt.seed = rc.seed;
  opt.include_alt7 = rc.alt7;
  auto rep = run_verify(opt);
  return {"# permtree verify  seed=" + std::to_string(rc.seed) + "\n" + rep.text(),
          rep.passed() ? kExitOk : kExitValidation};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CLI::App app{"Structure trees, cut systems and diameter bounds for permutation groups", "permtree"};
  app.set_config("--config", "", "INI/TOML file with option defaults")->envname("PERMTREE_CONFIG");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--in", rc.in, "generator file, tree JSON or instance file");
  app.add_option("--out", rc.out, "output path (default stdout)");
  app.add_option("--format", rc.format, "json | dot | csv | text");
  auto* r_opt = app.add_option("--r", rc.r, "thick recursion depth")->check(CLI::Range(1, 16));
  app.add_option("--constants", rc.constants, "constant overrides k=v,...");
  app.add_option("--seed", rc.seed, "seed for sampled diameters");
  app.add_option("--max-cosets", rc.max_cosets, "coset enumeration limit");
  app.add_option("--c3-threshold", rc.c3_threshold, "least alternating degree for a C3 edge");
  app.add_option("--threshold", rc.threshold, "largest group order for exhaustive diameters");
  app.add_option("--samples", rc.samples, "random generating sets per sampled diameter");
  app.add_option("--alt-limit", rc.alt_limit, "largest degree in the alternating diameter table");
  const std::pair<const char*, const char*> commands[] = {
      {"tree", "build, augment and validate the structure tree"},
      {"cuts", "assemble the horizontal cut system"},
      {"bound", "diameter bound ledger with closed-form comparisons"},
      {"diam-exact", "exact group diameter over all generating sets"},
      {"schreier", "Schreier coset graph and its diameter"},
      {"conjecture", "product conjecture harness"},
      {"verify", "run every invariant suite over the fixture corpus"},
      {"report", "human-readable summary with the ledger"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&rc, name = std::string(name)] { rc.command = name; });
    if (std::string(name) == "schreier") {
      sub->add_option("--sub", rc.sub, "generators of H");
      sub->add_option("--set", rc.set, "generating set S (default: generators of G)");
    }
    if (std::string(name) == "verify") sub->add_flag("--alt7", rc.alt7, "include the Alt(7) subgroup enumeration");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    ConstantConfig cc;
    cc.apply(rc.constants);
    // an explicit --r wins over r= in --constants
    if (r_opt->count() > 0) cc.r = rc.r;
    rc.r = cc.r;
    Output o;
    if (rc.command == "tree") o = cmd_tree(rc, cc, err);
    else if (rc.command == "cuts") o = cmd_cuts(rc, cc, err);
    else if (rc.command == "bound") o = cmd_bound(rc, cc);
    else if (rc.command == "report") o = cmd_report(rc, cc);
    else if (rc.command == "diam-exact") o = cmd_diam_exact(rc);
    else if (rc.command == "schreier") o = cmd_schreier(rc);
    else if (rc.command == "conjecture") o = cmd_conjecture(rc);
    else if (rc.command == "verify") o = cmd_verify(rc);
    if (rc.out.empty()) out << o.text;
    else write_atomic(rc.out, o.text);
    return o.code;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace permtree
