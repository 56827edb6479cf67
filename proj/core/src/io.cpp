#include "biis/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace biis {

namespace {

// Line-oriented tokenizer that strips '#' comments and blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line as tokens; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

long parse_long(const LineReader& r, const std::string& tok,
                const std::string& what) {
  try {
    std::size_t pos = 0;
    const long value = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(r.line(), "expected " + what + ", got '" + tok + "'");
  }
}

std::vector<std::string> expect_line(LineReader& r, const std::string& what) {
  std::vector<std::string> tokens;
  if (!r.next(tokens))
    throw ParseError(r.line() + 1, "unexpected end of input, expected " + what);
  return tokens;
}

long expect_keyword_count(LineReader& r, const std::string& keyword) {
  const std::vector<std::string> tokens = expect_line(r, "'" + keyword + " <count>'");
  if (tokens.size() != 2 || tokens[0] != keyword)
    throw ParseError(r.line(), "expected '" + keyword + " <count>'");
  const long count = parse_long(r, tokens[1], "a count");
  if (count < 0) throw ParseError(r.line(), keyword + " count is negative");
  return count;
}

}  // namespace

ChromaticComplex read_complex(std::istream& in) {
  LineReader r(in);
  const long processes = expect_keyword_count(r, "processes");
  const long vertex_count = expect_keyword_count(r, "vertices");

  std::vector<VertexInfo> vertices(static_cast<std::size_t>(vertex_count));
  std::vector<char> seen(static_cast<std::size_t>(vertex_count), 0);
  for (long i = 0; i < vertex_count; ++i) {
    const std::vector<std::string> tokens = expect_line(r, "a vertex line");
    if (tokens.size() < 2 || tokens.size() > 3)
      throw ParseError(r.line(), "expected '<id> <color> [label]'");
    const long id = parse_long(r, tokens[0], "a vertex id");
    const long color = parse_long(r, tokens[1], "a color");
    if (id < 0 || id >= vertex_count)
      throw ParseError(r.line(), "vertex id " + std::to_string(id) +
                                     " outside [0, " +
                                     std::to_string(vertex_count) + ")");
    if (seen[static_cast<std::size_t>(id)])
      throw ParseError(r.line(), "duplicate vertex id " + std::to_string(id));
    seen[static_cast<std::size_t>(id)] = 1;
    if (color < 0 || color >= processes)
      throw ParseError(r.line(), "color " + std::to_string(color) +
                                     " outside [0, " +
                                     std::to_string(processes) + ")");
    VertexInfo& v = vertices[static_cast<std::size_t>(id)];
    v.color = static_cast<Color>(color);
    if (tokens.size() == 3) v.label = tokens[2];
  }

  const long facet_count = expect_keyword_count(r, "facets");
  std::vector<Simplex> facets;
  facets.reserve(static_cast<std::size_t>(facet_count));
  for (long i = 0; i < facet_count; ++i) {
    const std::vector<std::string> tokens = expect_line(r, "a facet line");
    Simplex f;
    std::vector<char> color_seen(static_cast<std::size_t>(processes), 0);
    for (const std::string& tok : tokens) {
      const long id = parse_long(r, tok, "a vertex id");
      if (id < 0 || id >= vertex_count)
        throw ParseError(r.line(), "facet references vertex " +
                                       std::to_string(id) +
                                       " outside the table");
      const Color color = vertices[static_cast<std::size_t>(id)].color;
      if (color_seen[static_cast<std::size_t>(color)])
        throw ParseError(r.line(),
                         "facet is not chromatic: color " +
                             std::to_string(color) + " appears twice");
      color_seen[static_cast<std::size_t>(color)] = 1;
      f.push_back(static_cast<VertexId>(id));
    }
    facets.push_back(make_simplex(std::move(f)));
  }

  std::vector<std::string> trailing;
  if (r.next(trailing))
    throw ParseError(r.line(), "unexpected content after the facet list");

  return ChromaticComplex(static_cast<int>(processes), std::move(vertices),
                          std::move(facets));
}

ChromaticComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_complex(in);
}

void write_complex(std::ostream& out, const ChromaticComplex& c) {
  out << "processes " << c.num_processes() << "\n";
  out << "vertices " << c.num_vertices() << "\n";
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    const VertexInfo& info = c.vertex(v);
    out << v << " " << info.color;
    if (!info.label.empty()) out << " " << info.label;
    out << "\n";
  }
  out << "facets " << c.facets().size() << "\n";
  for (const Simplex& f : c.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out << " ";
      out << f[i];
    }
    out << "\n";
  }
}

void write_complex_file(const std::string& path, const ChromaticComplex& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_complex(out, c);
}

std::map<VertexId, int> read_encoding(std::istream& in) {
  LineReader r(in);
  std::map<VertexId, int> codes;
  std::vector<std::string> tokens;
  while (r.next(tokens)) {
    if (tokens.size() != 2)
      throw ParseError(r.line(), "expected '<vertex_id> <code>'");
    const long id = parse_long(r, tokens[0], "a vertex id");
    const long code = parse_long(r, tokens[1], "a code");
    if (id < 0) throw ParseError(r.line(), "negative vertex id");
    if (code < 1) throw ParseError(r.line(), "codes start at 1");
    if (!codes.emplace(static_cast<VertexId>(id), static_cast<int>(code)).second)
      throw ParseError(r.line(), "duplicate vertex id " + std::to_string(id));
  }
  return codes;
}

std::map<VertexId, int> read_encoding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_encoding(in);
}

void write_encoding(std::ostream& out, const std::map<VertexId, int>& codes) {
  for (const auto& [v, code] : codes) out << v << " " << code << "\n";
}

void write_encoding_file(const std::string& path,
                         const std::map<VertexId, int>& codes) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_encoding(out, codes);
}

}  // namespace biis
