#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperconn/core.hpp"

namespace hyperconn {

/// Malformed HGR text. line() is 1-based, 0 when the problem is the file as a whole.
class HgrParseError : public InputError {
 public:
  HgrParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct HgrDocument {
  std::vector<std::string> comments;  // text after "c ", in order
  Hypergraph hypergraph;
};

/// Grammar:
///   c <text>            comment, allowed anywhere
///   p hgr <n> <m>       exactly once, before any edge line
///   <i> <j> ...         m edge lines of 1-based indices; repeats are
///                       multiplicities, a blank line is an empty edge
/// Blank lines after the m-th edge line are ignored.
HgrDocument parse_hgr_document(std::string_view text);
Hypergraph parse_hgr(std::string_view text);

/// Inverse of parse_hgr: one line per edge, members in ascending order with
/// each vertex repeated by its multiplicity.
std::string serialize_hgr(const Hypergraph& h, const std::vector<std::string>& comments = {});

}  // namespace hyperconn
