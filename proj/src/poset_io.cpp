#include "incalg/poset_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "incalg/errors.hpp"

namespace incalg {

namespace {

using json = nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// JSON values carry no positions; point at the key instead.
[[noreturn]] void schema_error(std::string_view text, const std::string& key, const std::string& what) {
  const auto at = text.find("\"" + key + "\"");
  const auto [line, column] = line_column(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(what, line, column);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::vector<std::size_t> heights(const Poset& p) {
  std::vector<std::size_t> h(p.size(), 0);
  for (Element y = 0; y < p.size(); ++y) {
    for (const Element x : p.lower_covers(y)) h[y] = std::max(h[y], h[x] + 1);
  }
  return h;
}

}  // namespace

NamedPoset parse_poset_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1, 1);
  std::string name = "poset";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) schema_error(text, "name", "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    schema_error(text, "elements", "\"elements\" must be an array of strings");
  }
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) schema_error(text, "elements", "\"elements\" must be an array of strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) schema_error(text, "covers", "\"covers\" must be an array of pairs");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        schema_error(text, "covers", "each cover must be a pair of element labels");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  try {
    return {name, Poset::from_covers(elements, covers)};
  } catch (const UnknownElement& e) {
    schema_error(text, "covers", e.what());
  }
}

std::string poset_to_json(const Poset& p, const std::string& name, int indent) {
  json doc;
  doc["name"] = name;
  doc["elements"] = p.names();
  json covers = json::array();
  for (const auto& [a, b] : transitive_reduction(p)) covers.push_back({a, b});
  doc["covers"] = covers;
  return doc.dump(indent);
}

NamedPoset parse_poset_text(std::string_view text, std::string name) {
  std::vector<std::string> elements;
  std::map<std::string, bool> seen;
  std::vector<std::pair<std::string, std::string>> covers;
  auto declare = [&](const std::string& label) {
    if (seen.emplace(label, true).second) elements.push_back(label);
  };
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    // Tokenise into labels and '<' separators, remembering columns.
    std::vector<std::pair<std::string, std::size_t>> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
      } else if (line[i] == '<') {
        tokens.emplace_back("<", i + 1);
        ++i;
      } else {
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '<') ++j;
        tokens.emplace_back(std::string(line.substr(i, j - i)), i + 1);
        i = j;
      }
    }
    if (tokens.size() == 1) {
      if (tokens[0].first == "<") throw ParseError("expected an element label", line_no, tokens[0].second);
      declare(tokens[0].first);
    } else if (!tokens.empty()) {
      if (tokens.size() != 3 || tokens[1].first != "<" || tokens[0].first == "<" || tokens[2].first == "<") {
        const std::size_t col = tokens.size() > 1 && tokens[1].first != "<" ? tokens[1].second
                                : tokens.size() > 3                        ? tokens[3].second
                                                                           : tokens.back().second;
        throw ParseError("expected 'a < b'", line_no, col);
      }
      declare(tokens[0].first);
      declare(tokens[2].first);
      covers.emplace_back(tokens[0].first, tokens[2].first);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return {std::move(name), Poset::from_covers(elements, covers)};
}

std::string poset_to_text(const Poset& p) {
  std::ostringstream os;
  // declaring every element first keeps the index order on reparse
  for (Element x = 0; x < p.size(); ++x) os << p.name(x) << "\n";
  for (const auto& [a, b] : transitive_reduction(p)) os << a << " < " << b << "\n";
  return os.str();
}

NamedPoset parse_poset(std::string_view text, std::string fallback_name) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_poset_json(text);
  return parse_poset_text(text, std::move(fallback_name));
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  os << "  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x) os << "  " << quote(p.name(x)) << ";\n";
  const auto h = heights(p);
  const std::size_t top = h.empty() ? 0 : *std::max_element(h.begin(), h.end());
  for (std::size_t level = 0; level <= top && !h.empty(); ++level) {
    std::vector<Element> same;
    for (Element x = 0; x < p.size(); ++x) {
      if (h[x] == level) same.push_back(x);
    }
    if (same.size() < 2) continue;
    os << "  { rank=same;";
    for (const Element x : same) os << " " << quote(p.name(x)) << ";";
    os << " }\n";
  }
  for (const auto& [a, b] : p.covers()) os << "  " << quote(p.name(a)) << " -> " << quote(p.name(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace incalg
