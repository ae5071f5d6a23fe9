#include "tri/network.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tri {

std::optional<int> Network::find_vertex(const std::string& vname) const {
  for (const Vertex& v : vertices)
    if (v.name == vname) return v.id;
  return std::nullopt;
}

bool Network::is_parent(int p, int v) const {
  const std::vector<int>& pa = vertices.at(v).parents;
  return std::find(pa.begin(), pa.end(), p) != pa.end();
}

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '|')
      return false;
  return true;
}

void check_acyclic(const Network& net) {
  // Kahn over the parent -> child relation.
  const int n = net.size();
  std::vector<int> indeg(n, 0);
  for (const Vertex& v : net.vertices)
    indeg[v.id] = static_cast<int>(v.parents.size());
  std::deque<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int done = 0;
  std::vector<std::vector<int>> children(n);
  for (const Vertex& v : net.vertices)
    for (int p : v.parents) children[p].push_back(v.id);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    ++done;
    for (int c : children[v])
      if (--indeg[c] == 0) ready.push_back(c);
  }
  if (done != n) throw Error("cycle detected in parent relation");
}

}  // namespace

void validate_network(const Network& net) {
  if (!valid_token(net.name)) throw Error("invalid network name");
  const int n = net.size();
  std::unordered_set<std::string> names;
  for (int i = 0; i < n; ++i) {
    const Vertex& v = net.vertices[i];
    if (v.id != i) throw Error("vertex ids must be 0..n-1 in order");
    if (!valid_token(v.name)) throw Error("invalid vertex name");
    if (!names.insert(v.name).second)
      throw Error("duplicate name '" + v.name + "'");
    if (v.cardinality < 1)
      throw Error("cardinality of '" + v.name + "' must be >= 1");
    std::unordered_set<int> seen;
    for (int p : v.parents) {
      if (p < 0 || p >= n) throw Error("parent id out of range");
      if (p == v.id) throw Error("vertex '" + v.name + "' is its own parent");
      if (!seen.insert(p).second)
        throw Error("duplicate parent of '" + v.name + "'");
    }
  }
  check_acyclic(net);
  for (const Vertex& v : net.vertices)
    for (int p : v.parents)
      if (p > v.id)
        throw Error("parent '" + net.vertices[p].name +
                    "' declared after child '" + v.name + "'");
}

Network parse_network(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Network net;
  std::unordered_map<std::string, int> index;

  auto fail = [&lineno](const std::string& msg) -> void {
    throw Error("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok[0] != "net" || tok.size() != 2)
        fail("expected 'net <name>' header");
      if (!valid_token(tok[1])) fail("invalid network name");
      net.name = tok[1];
      have_header = true;
      continue;
    }

    if (tok[0] != "var") fail("expected 'var' line");
    if (tok.size() < 4) fail("expected 'var <name> <cardinality> <flags>'");
    Vertex v;
    v.id = net.size();
    v.name = tok[1];
    if (!valid_token(v.name)) fail("invalid name '" + tok[1] + "'");
    try {
      std::size_t used = 0;
      v.cardinality = std::stoll(tok[2], &used);
      if (used != tok[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail("cardinality must be an integer");
    }
    if (v.cardinality < 1) fail("cardinality must be >= 1");

    if (tok[3] != "-") {
      std::istringstream fs(tok[3]);
      std::string flag;
      while (std::getline(fs, flag, ',')) {
        if (flag == "det" && !v.deterministic)
          v.deterministic = true;
        else if (flag == "obs" && !v.observed)
          v.observed = true;
        else
          fail("bad flags '" + tok[3] + "'");
      }
    }

    if (tok.size() > 4) {
      if (tok[4] != "|") fail("expected '|' before parent list");
      if (tok.size() == 5) fail("empty parent list after '|'");
      for (std::size_t i = 5; i < tok.size(); ++i) {
        auto it = index.find(tok[i]);
        if (it == index.end()) fail("unknown parent '" + tok[i] + "'");
        if (std::find(v.parents.begin(), v.parents.end(), it->second) !=
            v.parents.end())
          fail("duplicate parent '" + tok[i] + "'");
        v.parents.push_back(it->second);
      }
    }

    if (index.count(v.name)) fail("duplicate name '" + v.name + "'");
    index[v.name] = v.id;
    net.vertices.push_back(std::move(v));
  }
  if (!have_header) throw Error("missing 'net <name>' header");
  validate_network(net);
  return net;
}

std::string serialize_network(const Network& net) {
  std::ostringstream out;
  out << "net " << net.name << "\n";
  for (const Vertex& v : net.vertices) {
    out << "var " << v.name << ' ' << v.cardinality << ' ';
    if (v.deterministic && v.observed)
      out << "det,obs";
    else if (v.deterministic)
      out << "det";
    else if (v.observed)
      out << "obs";
    else
      out << '-';
    if (!v.parents.empty()) {
      out << " |";
      for (int p : v.parents) out << ' ' << net.vertices[p].name;
    }
    out << "\n";
  }
  return out.str();
}

MoralGraph moralize(const Network& net) {
  MoralGraph m;
  m.graph = UGraph(net.size());
  std::map<Edge, std::pair<bool, bool>> tags;  // (child edge, marriage)
  for (const Vertex& v : net.vertices) {
    for (int p : v.parents) {
      m.graph.add_edge(p, v.id);
      tags[make_edge(p, v.id)].first = true;
    }
    for (std::size_t i = 0; i < v.parents.size(); ++i)
      for (std::size_t j = i + 1; j < v.parents.size(); ++j) {
        m.graph.add_edge(v.parents[i], v.parents[j]);
        tags[make_edge(v.parents[i], v.parents[j])].second = true;
      }
  }
  for (const auto& [e, t] : tags)
    m.edge_provenance[e] = t.first && t.second ? EdgeTag::both
                           : t.first           ? EdgeTag::directed_child
                                               : EdgeTag::moral;
  return m;
}

}  // namespace tri
