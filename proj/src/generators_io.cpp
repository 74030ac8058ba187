#include "permtree/generators_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace permtree {

namespace {

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GeneratorFile parse_generators(std::string_view text) {
  GeneratorFile file;
  bool have_degree = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_degree) {
      std::istringstream in{std::string(line)};
      std::string keyword;
      long long n = -1;
      if (!(in >> keyword >> n) || keyword != "degree" || n <= 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'degree n'");
      file.degree = static_cast<std::size_t>(n);
      have_degree = true;
      continue;
    }
    try {
      file.generators.push_back(Permutation::parse(line, file.degree));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) throw std::invalid_argument("generator file has no 'degree' line");
  return file;
}

GeneratorFile read_generators(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_generators(buffer.str());
}

std::string format_generators(std::size_t degree, const std::vector<Permutation>& gens,
                              std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "degree " << degree << '\n';
  for (const auto& g : gens) out << g.to_string() << '\n';
  return out.str();
}

}  // namespace permtree
