#include "permtree/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace permtree {

namespace {

Json big_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected a non-negative integer");
}

double real_json(const Real& x) { return x.convert_to<double>(); }

}  // namespace

Json tree_json(const StructureTree& t) {
  Json j;
  j["degree"] = t.degree();
  j["augmented"] = t.augmented();
  j["root"] = t.root();
  Json nodes = Json::array();
  for (const auto& v : t.nodes()) {
    Json node;
    node["id"] = v.id;
    node["parent"] = v.parent ? Json(*v.parent) : Json(nullptr);
    node["depth"] = v.depth;
    node["domain"] = v.domain.points();
    Json gens = Json::array();
    for (const auto& s : v.group.generators()) gens.push_back(s.to_string());
    node["generators"] = gens;
    node["order"] = big_json(v.group.order());
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : t.edges()) {
    Json edge;
    edge["id"] = e.id;
    edge["parent"] = e.parent;
    edge["child"] = e.child;
    edge["color"] = to_string(e.color);
    edge["payload"] = big_json(e.payload);
    if (e.color == Color::C3) edge["blocks"] = e.blocks;
    edges.push_back(edge);
  }
  j["edges"] = edges;
  return j;
}

StructureTree tree_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("degree").get<std::size_t>();
    const auto& nodes = j.at("nodes");
    const auto& edges = j.at("edges");
    if (j.at("root").get<std::size_t>() != 0) throw std::invalid_argument("root must be node 0");
    if (!nodes.empty() && edges.size() + 1 != nodes.size()) throw std::invalid_argument("edge count must be node count - 1");
    StructureTree::Builder b(n);
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      const auto& v = nodes[id];
      if (v.at("id").get<std::size_t>() != id) throw std::invalid_argument("node ids must be 0, 1, ...");
      std::vector<Permutation> gens;
      for (const auto& s : v.at("generators")) gens.push_back(Permutation::parse(s.get<std::string>(), n));
      PermGroup g(n, std::move(gens));
      if (g.order() != big_from_json(v.at("order")))
        throw std::invalid_argument("node " + std::to_string(id) + ": stored order does not match generators");
      DomainSubset domain(n, v.at("domain").get<std::vector<Point>>());
      if (id == 0) {
        if (!v.at("parent").is_null()) throw std::invalid_argument("root has a parent");
        b.add_root(std::move(g), std::move(domain));
        continue;
      }
      const auto& e = edges.at(id - 1);
      auto parent = v.at("parent").get<std::size_t>();
      if (e.at("id").get<std::size_t>() != id - 1 || e.at("child").get<std::size_t>() != id ||
          e.at("parent").get<std::size_t>() != parent)
        throw std::invalid_argument("edge " + std::to_string(id - 1) + " does not match node " + std::to_string(id));
      Color color = color_from_string(e.at("color").get<std::string>());
      std::vector<std::vector<Point>> blocks;
      if (color == Color::C3) blocks = e.at("blocks").get<std::vector<std::vector<Point>>>();
      b.add_child(parent, std::move(g), std::move(domain), color, big_from_json(e.at("payload")), std::move(blocks));
    }
    b.set_augmented(j.at("augmented").get<bool>());
    auto t = b.finish();
    for (const auto& v : t.nodes())
      if (nodes[v.id].at("depth").get<std::size_t>() != v.depth) throw std::invalid_argument("depth mismatch");
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed tree JSON: ") + e.what());
  }
}

Json cuts_json(const CutSystem& sys) {
  Json cuts = Json::array();
  for (const auto& c : sys.cuts) {
    Json cut;
    cut["kind"] = to_string(c.kind);
    cut["origin"] = c.origin_string();
    cut["members"] = {{"nodes", c.nodes}, {"edges", c.edges}};
    cut["m"] = c.m;
    cut["governing"] = c.governing;
    cuts.push_back(cut);
  }
  return cuts;
}

CutSystem cuts_from_json(const Json& cuts, std::size_t r) {
  CutSystem sys;
  sys.r = r;
  try {
    for (const auto& c : cuts) {
      HorizontalCut cut;
      cut.kind = cut_kind_from_string(c.at("kind").get<std::string>());
      auto origin = c.at("origin").get<std::string>();
      if (origin == "THIN") {
        cut.origin = CutOrigin::THIN;
      } else if (origin == "PLAIN") {
        cut.origin = CutOrigin::PLAIN;
      } else if (origin.starts_with("THICK(") && origin.ends_with(")")) {
        cut.origin = CutOrigin::THICK;
        cut.thick_index = std::stoul(origin.substr(6, origin.size() - 7));
      } else {
        throw std::invalid_argument("unknown cut origin '" + origin + "'");
      }
      cut.nodes = c.at("members").at("nodes").get<std::vector<std::size_t>>();
      cut.edges = c.at("members").at("edges").get<std::vector<std::size_t>>();
      cut.m = c.at("m").get<std::uint64_t>();
      cut.governing = c.at("governing").get<std::vector<std::size_t>>();
      sys.cuts.push_back(std::move(cut));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed cut JSON: ") + e.what());
  }
  return sys;
}

Json document_json(const StructureTree& t, const CutSystem* cuts) {
  Json j = tree_json(t);
  if (cuts) {
    j["r"] = cuts->r;
    j["cuts"] = cuts_json(*cuts);
  }
  return j;
}

TreeDocument document_from_json(const Json& j) {
  TreeDocument doc{tree_from_json(j), std::nullopt};
  if (j.contains("cuts")) doc.cuts = cuts_from_json(j.at("cuts"), j.at("r").get<std::size_t>());
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json bound_json(const BoundReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["log_base"] = "e";
  Json constants;
  for (const auto& [k, v] : rep.constants.entries()) constants[k] = v;
  j["constants"] = constants;
  Json ledger = Json::array();
  for (const auto& e : rep.ledger) {
    Json entry;
    entry["cut"] = e.cut;
    entry["kind"] = to_string(e.kind);
    entry["origin"] = e.origin;
    entry["m"] = e.m;
    entry["log_factor"] = real_json(e.log_factor);
    entry["alt_source"] = e.alt_source.empty() ? Json(nullptr) : Json(e.alt_source);
    ledger.push_back(entry);
  }
  j["ledger"] = ledger;
  j["total_log"] = real_json(rep.total_log);
  j["audit_total_log"] = rep.audit_total_log.str(40);
  j["paper_form_log"] = real_json(rep.paper_form_log);
  j["closed_form_log"] = rep.closed_form_log ? Json(real_json(*rep.closed_form_log)) : Json(nullptr);
  j["comparisons"] = {{"babai82", real_json(rep.babai82_log)},
                      {"bs88", real_json(rep.bs88_log)},
                      {"bs88_caveat", "o(1) term in the exponent dropped"}};
  Json alt = Json::object();
  for (const auto& [m, b] : rep.alt_used) alt[std::to_string(m)] = {{"log_value", real_json(b.log_value)}, {"source", b.source}};
  j["alt_diam"] = alt;
  return j;
}

}  // namespace permtree
