#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "permtree/permutation.hpp"

namespace permtree {

/// Generator file: first non-comment line "degree n", then one permutation
/// per line in cycle notation. '#' starts a comment anywhere on a line.
struct GeneratorFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GeneratorFile parse_generators(std::string_view text);
GeneratorFile read_generators(const std::filesystem::path& path);
std::string format_generators(std::size_t degree, const std::vector<Permutation>& gens,
                              std::string_view comment = {});

}  // namespace permtree
