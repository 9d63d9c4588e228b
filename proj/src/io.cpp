#include "patterncount/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "patterncount/errors.hpp"

namespace patterncount {

using nlohmann::json;

std::string to_string(TreeSpecType t) {
  switch (t) {
    case TreeSpecType::CornerTree: return "corner_tree";
    case TreeSpecType::SNPolytree: return "sn_polytree";
    case TreeSpecType::DoublePoset: return "double_poset";
    case TreeSpecType::ArboNE: return "arbo_ne";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  fail(ErrorCode::ParseError, field + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) bad(ctx.empty() ? key : ctx + "." + key, "missing field");
  return j.at(key);
}

std::string node_key(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_string()) return j.get<std::string>();
  bad(ctx, "node identifiers must be integers or strings");
}

struct NodeTable {
  std::map<std::string, int> index;
  std::vector<std::string> names;

  explicit NodeTable(const json& nodes) {
    if (!nodes.is_array() || nodes.empty()) bad("nodes", "expected a non-empty array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string ctx = "nodes[" + std::to_string(i) + "]";
      std::string k = node_key(nodes[i], ctx);
      if (!index.emplace(k, static_cast<int>(names.size())).second) bad(ctx, "duplicate node '" + k + "'");
      names.push_back(k);
    }
  }

  int at(const json& j, const std::string& ctx) const {
    std::string k = node_key(j, ctx);
    auto it = index.find(k);
    if (it == index.end()) bad(ctx, "unknown node '" + k + "'");
    return it->second;
  }
};

const json& triple(const json& edges, std::size_t i) {
  const json& e = edges[i];
  if (!e.is_array() || e.size() != 3) bad("edges[" + std::to_string(i) + "]", "expected a 3-element array");
  return e;
}

std::string label_text(const json& j, const std::string& ctx) {
  if (!j.is_string()) bad(ctx, "label must be a string");
  return j.get<std::string>();
}

std::vector<std::pair<int, int>> pair_list(const json& j, int n, const std::string& ctx) {
  if (!j.is_array()) bad(ctx, "expected an array of pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string c = ctx + "[" + std::to_string(i) + "]";
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      bad(c, "expected [i, j] with integer elements");
    }
    int a = p[0].get<int>(), b = p[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n) bad(c, "element out of range 0.." + std::to_string(n - 1));
    out.emplace_back(a, b);
  }
  return out;
}

DoublePoset parse_dp_body(const json& j) {
  const json& jn = field(j, "n", "");
  if (!jn.is_number_integer() || jn.get<long long>() < 0 || jn.get<long long>() > 64) bad("n", "expected an integer in 0..64");
  const int n = jn.get<int>();
  auto w = pair_list(field(j, "west", ""), n, "west");
  auto s = pair_list(field(j, "south", ""), n, "south");
  try {
    return {StrictPoset::from_relation(n, w), StrictPoset::from_relation(n, s)};
  } catch (const Error& e) {
    bad("west/south", e.what());
  }
}

int anchor(const json& a, const std::string& key) {
  const json& v = field(a, key, "anchors");
  if (!v.is_number_integer()) bad("anchors." + key, "expected an integer element");
  return v.get<int>();
}

}  // namespace

TreeSpec parse_tree_spec(std::string_view text, bool validate_arbo) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  const json& jt = field(j, "type", "");
  if (!jt.is_string()) bad("type", "expected a string");
  const std::string type = jt.get<std::string>();
  TreeSpec spec;
  if (type == "corner_tree") {
    NodeTable nodes(field(j, "nodes", ""));
    const int root = nodes.at(field(j, "root", ""), "root");
    const json& edges = field(j, "edges", "");
    if (!edges.is_array()) bad("edges", "expected an array");
    std::vector<CornerEdge> es;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const json& e = triple(edges, i);
      const std::string ctx = "edges[" + std::to_string(i) + "]";
      CornerLabel l;
      try {
        l = parse_corner_label(label_text(e[2], ctx + "[2]"));
      } catch (const Error& err) {
        bad(ctx + "[2]", err.what());
      }
      es.push_back({nodes.at(e[0], ctx + "[0]"), nodes.at(e[1], ctx + "[1]"), l});
    }
    try {
      spec.corner = CornerTree(static_cast<int>(nodes.names.size()), root, es);
    } catch (const Error& e) {
      bad("edges", e.what());
    }
    spec.type = TreeSpecType::CornerTree;
    spec.dp = corner_tree_to_dp(*spec.corner);
    spec.node_names = nodes.names;
  } else if (type == "sn_polytree") {
    NodeTable nodes(field(j, "nodes", ""));
    const json& edges = field(j, "edges", "");
    if (!edges.is_array()) bad("edges", "expected an array");
    std::vector<SNEdge> es;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const json& e = triple(edges, i);
      const std::string ctx = "edges[" + std::to_string(i) + "]";
      std::string l = label_text(e[2], ctx + "[2]");
      if (l != "S" && l != "N") bad(ctx + "[2]", "label must be S or N");
      es.push_back({nodes.at(e[0], ctx + "[0]"), nodes.at(e[1], ctx + "[1]"), l == "S" ? SNLabel::S : SNLabel::N});
    }
    try {
      spec.polytree = SNPolytree(static_cast<int>(nodes.names.size()), es);
    } catch (const Error& e) {
      bad("edges", e.what());
    }
    spec.type = TreeSpecType::SNPolytree;
    spec.dp = snpolytree_to_dp(*spec.polytree);
    spec.node_names = nodes.names;
  } else if (type == "double_poset" || type == "arbo_ne") {
    spec.dp = parse_dp_body(j);
    for (int i = 0; i < spec.dp.size(); ++i) spec.node_names.push_back(std::to_string(i));
    spec.type = TreeSpecType::DoublePoset;
    if (type == "arbo_ne") {
      const json& a = field(j, "anchors", "");
      ArboAnchors an;
      an.one = anchor(a, "one");
      an.three = anchor(a, "three");
      an.four = anchor(a, "four");
      const json& two = field(a, "two", "anchors");
      if (!two.is_null()) an.two = anchor(a, "two");
      spec.anchors = an;
      spec.type = TreeSpecType::ArboNE;
      if (validate_arbo) spec.arbo = ArboNE::validate(spec.dp, an);
    }
  } else {
    bad("type", "unknown tree type '" + type + "'");
  }
  return spec;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json node_ids(int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(i);
  return a;
}

json dp_body(const DoublePoset& d) {
  json j;
  j["n"] = d.size();
  j["west"] = json::array();
  j["south"] = json::array();
  for (auto [a, b] : d.west.covers()) j["west"].push_back({a, b});
  for (auto [a, b] : d.south.covers()) j["south"].push_back({a, b});
  return j;
}

}  // namespace

TreeSpec load_tree_spec(const std::string& path, bool validate_arbo) {
  return parse_tree_spec(read_file(path), validate_arbo);
}

std::string serialize(const CornerTree& ct) {
  json j;
  j["type"] = "corner_tree";
  j["nodes"] = node_ids(ct.size());
  j["root"] = ct.root();
  j["edges"] = json::array();
  for (const auto& e : ct.edges()) j["edges"].push_back({e.parent, e.child, to_string(e.label)});
  return j.dump() + "\n";
}

std::string serialize(const SNPolytree& t) {
  json j;
  j["type"] = "sn_polytree";
  j["nodes"] = node_ids(t.size());
  j["edges"] = json::array();
  for (const auto& e : t.edges()) j["edges"].push_back({e.tail, e.head, to_string(e.label)});
  return j.dump() + "\n";
}

std::string serialize(const DoublePoset& d) {
  json j = dp_body(d);
  j["type"] = "double_poset";
  return j.dump() + "\n";
}

std::string serialize(const ArboNE& a) {
  json j = dp_body(a.dp());
  j["type"] = "arbo_ne";
  json an;
  an["one"] = a.anchors().one;
  an["two"] = a.anchors().two ? json(*a.anchors().two) : json(nullptr);
  an["three"] = a.anchors().three;
  an["four"] = a.anchors().four;
  j["anchors"] = an;
  return j.dump() + "\n";
}

std::string serialize(const TreeSpec& spec) {
  switch (spec.type) {
    case TreeSpecType::CornerTree: return serialize(*spec.corner);
    case TreeSpecType::SNPolytree: return serialize(*spec.polytree);
    case TreeSpecType::ArboNE:
      if (spec.arbo) return serialize(*spec.arbo);
      break;
    case TreeSpecType::DoublePoset: break;
  }
  return serialize(spec.dp);
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> v;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    if (j == i) fail(ErrorCode::ParseError, "unexpected character '" + std::string(1, c) + "' in permutation");
    if (j - i > 9) fail(ErrorCode::ParseError, "permutation entry too large");
    v.push_back(std::stoi(std::string(text.substr(i, j - i))));
    i = j;
  }
  try {
    return Permutation(std::move(v));
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Permutation load_permutation(const std::string& path) { return parse_permutation(read_file(path)); }

std::string format_permutation(const Permutation& p) { return p.to_string() + "\n"; }

}  // namespace patterncount
