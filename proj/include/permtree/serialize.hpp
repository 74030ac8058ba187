#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "permtree/bounds.hpp"
#include "permtree/cuts.hpp"
#include "permtree/tree.hpp"

namespace permtree {

using Json = nlohmann::ordered_json;

/// {degree, augmented, root, nodes, edges}; group generators in cycle
/// notation, payloads as numbers (strings beyond 64 bits), blocks on C3 edges.
Json tree_json(const StructureTree& t);
/// Rebuilds the tree; groups are recomputed from their generators and checked
/// against the stored orders. Throws std::invalid_argument on malformed input.
StructureTree tree_from_json(const Json& j);

Json cuts_json(const CutSystem& sys);
CutSystem cuts_from_json(const Json& cuts, std::size_t r);

/// A tree, optionally with its cut system under "r" and "cuts".
struct TreeDocument {
  StructureTree tree;
  std::optional<CutSystem> cuts;
};
Json document_json(const StructureTree& t, const CutSystem* cuts = nullptr);
TreeDocument document_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

Json bound_json(const BoundReport& rep);

}  // namespace permtree
