#include "blockpd/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "blockpd/error.hpp"

namespace blockpd {
namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t number)
      : rest_(line), number_(number) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(number_) + ": " + what);
  }

  std::string_view token() {
    skip_spaces();
    const std::size_t end = rest_.find_first_of(" \t\r");
    std::string_view tok = rest_.substr(0, end);
    rest_.remove_prefix(tok.size());
    return tok;
  }

  std::uint64_t number(const char* what) {
    const std::string_view tok = token();
    if (tok.empty()) fail(std::string("missing ") + what);
    if (tok.front() == '-') fail(std::string(what) + " must be nonnegative");
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(std::string("bad ") + what + " '" + std::string(tok) + "'");
    }
    return value;
  }

  void expect_end() {
    skip_spaces();
    if (!rest_.empty()) fail("unexpected trailing text");
  }

 private:
  void skip_spaces() {
    const std::size_t start = rest_.find_first_not_of(" \t\r");
    rest_.remove_prefix(start == std::string_view::npos ? rest_.size() : start);
  }

  std::string_view rest_;
  std::size_t number_;
};

}  // namespace

WeightedGraph parse_instance(std::istream& in) {
  std::optional<std::size_t> n, m;
  std::vector<Weight> weights;
  std::vector<char> has_weight;
  std::size_t weight_lines = 0;
  std::vector<Edge> edges;

  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    LineParser p(line, number);
    const std::string_view kind = p.token();
    if (kind.empty() || kind.front() == 'c') continue;

    if (kind == "p") {
      if (n) p.fail("duplicate problem line");
      if (p.token() != "pdom") p.fail("expected 'p pdom <n> <m>'");
      n = p.number("vertex count");
      m = p.number("edge count");
      p.expect_end();
      if (*n > kMaxVertices) p.fail("vertex count too large");
      weights.assign(*n, 0);
      has_weight.assign(*n, 0);
      continue;
    }
    if (!n) p.fail("expected problem line before '" + std::string(kind) + "'");

    if (kind == "w") {
      const std::uint64_t v = p.number("vertex");
      const std::uint64_t w = p.number("weight");
      p.expect_end();
      if (v < 1 || v > *n) p.fail("vertex " + std::to_string(v) + " out of range");
      if (has_weight[v - 1]) p.fail("vertex " + std::to_string(v) + " weighted twice");
      has_weight[v - 1] = 1;
      weights[v - 1] = w;
      ++weight_lines;
    } else if (kind == "e") {
      const std::uint64_t u = p.number("vertex");
      const std::uint64_t v = p.number("vertex");
      p.expect_end();
      if (u < 1 || u > *n || v < 1 || v > *n) {
        p.fail("edge (" + std::to_string(u) + ", " + std::to_string(v) +
               ") out of range");
      }
      if (edges.size() == *m) p.fail("more than " + std::to_string(*m) + " edges");
      edges.emplace_back(static_cast<VertexId>(u - 1),
                         static_cast<VertexId>(v - 1));
    } else {
      p.fail("unknown line type '" + std::string(kind) + "'");
    }
  }

  if (!n) throw Error(ErrorCode::kParseError, "missing problem line");
  if (weight_lines != *n) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(*n) + " weight lines, got " +
                    std::to_string(weight_lines));
  }
  if (edges.size() != *m) {
    throw Error(ErrorCode::kParseError,
                "expected " + std::to_string(*m) + " edge lines, got " +
                    std::to_string(edges.size()));
  }
  return WeightedGraph::build(*n, std::move(weights), edges);
}

WeightedGraph parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

WeightedGraph read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const WeightedGraph& g,
                    const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p pdom " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace blockpd
