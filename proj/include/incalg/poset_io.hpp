#pragma once

#include <string>
#include <string_view>

#include "incalg/poset.hpp"

namespace incalg {

/// A poset together with a display name.
struct NamedPoset {
  std::string name;
  Poset poset;
};

/// `{"name": str, "elements": [str...], "covers": [[a, b]...]}`, [a, b] meaning
/// a is covered by b. Throws ParseError with line and column.
NamedPoset parse_poset_json(std::string_view text);
std::string poset_to_json(const Poset& p, const std::string& name, int indent = 2);

/// One `a < b` cover per line; `#` starts a comment. A line holding a single
/// label declares an element (needed for isolated points). Throws ParseError.
NamedPoset parse_poset_text(std::string_view text, std::string name = "poset");
std::string poset_to_text(const Poset& p);

/// Dispatches on the first non-blank character: `{` means JSON.
NamedPoset parse_poset(std::string_view text, std::string fallback_name = "poset");

/// Graphviz digraph with one edge per cover, same-height elements ranked together.
std::string poset_to_dot(const Poset& p, const std::string& name);

}  // namespace incalg
