#pragma once

#include "biis/complex.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace biis {

/// Parse failure carrying the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads the complex file format:
///
///   # comment (anywhere; rest of line ignored)
///   processes <n+1>
///   vertices <count>
///   <id> <color> [label]          (one line per vertex, ids 0..count-1)
///   facets <count>
///   <id> <id> ...                 (one line per facet)
///
/// Non-chromatic facets, out-of-range ids or colors, and malformed structure
/// raise ParseError with the offending line number.
ChromaticComplex read_complex(std::istream& in);
ChromaticComplex read_complex_file(const std::string& path);

/// Writes the same format deterministically: vertices by ascending id,
/// facets in normalized (lexicographic) order.
void write_complex(std::ostream& out, const ChromaticComplex& c);
void write_complex_file(const std::string& path, const ChromaticComplex& c);

/// Encoding tables: one `<vertex_id> <code>` pair per line, codes >= 1.
std::map<VertexId, int> read_encoding(std::istream& in);
std::map<VertexId, int> read_encoding_file(const std::string& path);
void write_encoding(std::ostream& out, const std::map<VertexId, int>& codes);
void write_encoding_file(const std::string& path,
                         const std::map<VertexId, int>& codes);

}  // namespace biis
