#include "kplex/ingest.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace kplex {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view next_token(std::string_view& rest) {
  std::size_t i = 0;
  while (i < rest.size() && is_space(rest[i])) ++i;
  std::size_t j = i;
  while (j < rest.size() && !is_space(rest[j])) ++j;
  std::string_view tok = rest.substr(i, j - i);
  rest.remove_prefix(j);
  return tok;
}

ExternalId parse_id(std::string_view tok, std::size_t line_no) {
  if (tok.empty()) throw ParseError(line_no, "expected two vertex ids");
  ExternalId value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line_no, "vertex id out of range: '" + std::string(tok) + "'");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "not a non-negative integer: '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::pair<ExternalId, ExternalId>> parse_edge_list(std::string_view text) {
  std::vector<std::pair<ExternalId, ExternalId>> pairs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    std::string_view rest = line;
    std::string_view first = next_token(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    ExternalId a = parse_id(first, line_no);
    ExternalId b = parse_id(next_token(rest), line_no);
    pairs.emplace_back(a, b);
  }
  return pairs;
}

std::vector<std::pair<ExternalId, ExternalId>> parse_edge_list(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_edge_list(std::string_view(text));
}

Graph load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on '" + path.string() + "'");
  auto pairs = parse_edge_list(std::string_view(buf.view()));
  return build_graph(pairs);
}

GraphStats stats(const Graph& g) {
  return GraphStats{g.num_vertices(), g.num_edges(), g.max_degree(),
                    degeneracy_order(g).degeneracy};
}

}  // namespace kplex
