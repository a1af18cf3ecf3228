#include "stonekit/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stonekit/error.hpp"
#include "stonekit/order.hpp"
#include "stonekit/topology.hpp"

namespace stonekit {

namespace {

using nlohmann::json;

struct Field {
  std::size_t line = 0;
  json value;
};

class Parser {
 public:
  Parser(std::string_view text, std::string_view source) : source_(source) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
      ++line;
      const std::string s = trim(raw);
      if (s.empty() || s.front() == '#') continue;
      const auto colon = s.find(':');
      if (colon == std::string::npos) fail(line, "expected 'key: value'");
      const std::string key = trim(s.substr(0, colon));
      if (key.empty()) fail(line, "missing key");
      if (fields_.count(key)) fail(line, "duplicate key '" + key + "'");
      json value;
      try {
        value = json::parse(s.substr(colon + 1));
      } catch (const json::parse_error&) {
        fail(line, "value of '" + key + "' is not valid JSON");
      }
      fields_[key] = Field{line, std::move(value)};
      order_.push_back(key);
    }
  }

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ParseError(std::string(source_) + ":" + std::to_string(line) + ": " + message);
  }

  bool has(const std::string& key) const { return fields_.count(key) != 0; }
  std::size_t line_of(const std::string& key) const { return fields_.at(key).line; }
  const std::vector<std::string>& keys() const { return order_; }

  std::string string(const std::string& key) const {
    const Field& f = require(key);
    if (!f.value.is_string()) fail(f.line, "'" + key + "' must be a string");
    return f.value.get<std::string>();
  }

  std::vector<std::string> strings(const std::string& key) const {
    const Field& f = require(key);
    return strings_of(f.value, f.line, "'" + key + "'");
  }

  std::vector<std::vector<std::string>> string_lists(const std::string& key) const {
    const Field& f = require(key);
    if (!f.value.is_array()) fail(f.line, "'" + key + "' must be a list of lists");
    std::vector<std::vector<std::string>> out;
    for (const json& item : f.value) out.push_back(strings_of(item, f.line, "each entry of '" + key + "'"));
    return out;
  }

  std::size_t end_line() const {
    std::size_t n = 0;
    for (const auto& [k, f] : fields_) n = std::max(n, f.line);
    return n;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  const Field& require(const std::string& key) const {
    auto it = fields_.find(key);
    if (it == fields_.end()) fail(end_line() + 1, "missing key '" + key + "'");
    return it->second;
  }

  std::vector<std::string> strings_of(const json& v, std::size_t line, const std::string& what) const {
    if (!v.is_array()) fail(line, what + " must be a list of strings");
    std::vector<std::string> out;
    for (const json& item : v) {
      if (!item.is_string()) fail(line, what + " must contain only strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  }

  std::string source_;
  std::map<std::string, Field> fields_;
  std::vector<std::string> order_;
};

void require_distinct(const Parser& p, const std::string& key, const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const std::string& n : names)
    if (!seen.insert(n).second) p.fail(p.line_of(key), "duplicate name '" + n + "' in '" + key + "'");
}

void require_known(const Parser& p, const std::string& key, const std::set<std::string>& known,
                   const std::string& name) {
  if (!known.count(name)) p.fail(p.line_of(key), "'" + key + "' mentions undeclared '" + name + "'");
}

std::string json_quote(std::string_view s) { return json(std::string(s)).dump(); }

}  // namespace

Document parse_document(std::string_view text, std::string_view source) {
  const Parser p(text, source);
  const std::set<std::string> lattice_keys = {"name", "elements", "leq"};
  const std::set<std::string> space_keys = {"name", "points", "opens"};
  const bool lattice = p.has("elements") || p.has("leq");
  const bool space = p.has("points") || p.has("opens");
  if (lattice && space) p.fail(p.line_of(p.has("points") ? "points" : "opens"), "mixes lattice and space keys");
  if (!lattice && !space) p.fail(p.end_line() + 1, "neither 'elements' nor 'points' is present");
  const auto& allowed = lattice ? lattice_keys : space_keys;
  for (const std::string& k : p.keys())
    if (!allowed.count(k)) p.fail(p.line_of(k), "unknown key '" + k + "'");

  if (lattice) {
    LatticeDocument doc;
    doc.name = p.string("name");
    doc.elements = p.strings("elements");
    require_distinct(p, "elements", doc.elements);
    if (p.has("leq")) {
      const std::set<std::string> known(doc.elements.begin(), doc.elements.end());
      for (const auto& pair : p.string_lists("leq")) {
        if (pair.size() != 2) p.fail(p.line_of("leq"), "each entry of 'leq' must be a pair");
        require_known(p, "leq", known, pair[0]);
        require_known(p, "leq", known, pair[1]);
        doc.leq.emplace_back(pair[0], pair[1]);
      }
    }
    return doc;
  }
  SpaceDocument doc;
  doc.name = p.string("name");
  doc.points = p.strings("points");
  require_distinct(p, "points", doc.points);
  if (p.has("opens")) {
    const std::set<std::string> known(doc.points.begin(), doc.points.end());
    doc.opens = p.string_lists("opens");
    for (const auto& open : doc.opens)
      for (const std::string& x : open) require_known(p, "opens", known, x);
  }
  return doc;
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path);
}

LatticeRef load_lattice(const LatticeDocument& doc) {
  return share(DistLattice::from_order(order_closure(doc.elements, doc.leq)));
}

SpaceRef load_space(const SpaceDocument& doc) {
  std::vector<std::string> points = doc.points;
  std::sort(points.begin(), points.end());
  std::vector<Mask> generators;
  for (const auto& open : doc.opens) {
    Mask m = 0;
    for (const std::string& x : open)
      m |= bit(static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), x) - points.begin()));
    generators.push_back(m);
  }
  return share(FinSpace::generated_by(std::move(points), generators));
}

std::string save_lattice(std::string_view name, const Lattice& l) {
  json elements = json::array();
  for (const std::string& n : l.order().names()) elements.push_back(n);
  json leq = json::array();
  for (const auto& [a, b] : l.order().covers()) leq.push_back({l.name(a), l.name(b)});
  return "name: " + json_quote(name) + "\nelements: " + elements.dump() + "\nleq: " + leq.dump() + "\n";
}

std::string save_space(std::string_view name, const FinSpace& x) {
  json points = json::array();
  for (const std::string& n : x.names()) points.push_back(n);
  json opens = json::array();
  for (Mask u : x.opens()) {
    json open = json::array();
    for_each_member(u, [&](std::size_t p) { open.push_back(x.name(p)); });
    opens.push_back(open);
  }
  return "name: " + json_quote(name) + "\npoints: " + points.dump() + "\nopens: " + opens.dump() + "\n";
}

std::string lattice_dot(std::string_view name, const Lattice& l) {
  std::string out = "digraph " + json_quote(name) + " {\n  rankdir=BT;\n";
  for (const std::string& n : l.order().names()) out += "  " + json_quote(n) + ";\n";
  for (const auto& [a, b] : l.order().covers()) out += "  " + json_quote(l.name(a)) + " -> " + json_quote(l.name(b)) + ";\n";
  return out + "}\n";
}

std::string space_dot(std::string_view name, const FinSpace& x) {
  const Preorder spec = specialization_order(x);
  std::string out = "digraph " + json_quote(name) + " {\n  rankdir=BT;\n";
  for (const std::string& n : x.names()) out += "  " + json_quote(n) + ";\n";
  const std::size_t n = x.size();
  auto strictly = [&](std::size_t a, std::size_t b) { return spec.leq(a, b) && !spec.leq(b, a); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a < b && spec.leq(a, b) && spec.leq(b, a)) {
        out += "  " + json_quote(x.name(a)) + " -> " + json_quote(x.name(b)) + " [dir=both];\n";
        continue;
      }
      if (!strictly(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(strictly(a, c) && strictly(c, b));
      if (cover) out += "  " + json_quote(x.name(a)) + " -> " + json_quote(x.name(b)) + ";\n";
    }
  std::string legend = "opens:";
  for (Mask u : x.opens()) legend += " " + subset_name(x.names(), u);
  out += "  legend [shape=box, label=" + json_quote(legend) + "];\n";
  return out + "}\n";
}

}  // namespace stonekit
