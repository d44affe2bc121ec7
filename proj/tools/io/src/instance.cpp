#include "graphstab/io/instance.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "graphstab/error.hpp"

namespace graphstab::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::string as_string(const nlohmann::json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  fail(std::string(what) + " must be a string");
}

VertexId vertex(const WeightedGraph& g, const nlohmann::json& label) {
  auto v = g.find_vertex(as_string(label, "vertex label"));
  if (!v) fail("unknown vertex " + label.dump());
  return *v;
}

Rational weight(const nlohmann::json& w) {
  if (w.is_number_integer()) return Rational(w.get<std::int64_t>());
  if (!w.is_string()) fail("weights must be decimal or fraction strings");
  return parse_rational(w.get<std::string>());
}

}  // namespace

Instance parse_instance(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("instance must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) fail("missing \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) fail("missing \"edges\" array");
  std::vector<std::string> names;
  for (const auto& label : doc["vertices"]) names.push_back(as_string(label, "vertex label"));

  Instance out{WeightedGraph(names.size(), names), std::nullopt};
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("w")) {
      fail("edges need \"u\", \"v\" and \"w\"");
    }
    out.graph.add_edge(vertex(out.graph, e["u"]), vertex(out.graph, e["v"]), weight(e["w"]));
  }
  if (doc.contains("matching")) out.matching = parse_matching(out.graph, doc["matching"]);
  return out;
}

Instance parse_instance(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
  return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

nlohmann::json emit_instance(const Instance& instance) {
  const WeightedGraph& g = instance.graph;
  nlohmann::json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back({{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"w", fraction(e.weight)}});
  }
  if (instance.matching) doc["matching"] = matching_pairs(g, *instance.matching);
  return doc;
}

std::string instance_hash(const Instance& instance) {
  const std::string text = emit_instance(instance).dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int size = 0;
  EVP_Digest(text.data(), text.size(), digest.data(), &size, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string fraction(const Rational& value) { return to_string(value); }

nlohmann::json labels(const WeightedGraph& g, const std::vector<VertexId>& vertices) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexId v : vertices) out.push_back(g.label(v));
  return out;
}

nlohmann::json edge_pairs(const WeightedGraph& g, const std::vector<EdgeId>& edges) {
  nlohmann::json out = nlohmann::json::array();
  for (EdgeId e : edges) out.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
  return out;
}

nlohmann::json matching_pairs(const WeightedGraph& g, const Matching& m) {
  return edge_pairs(g, m.edges(g));
}

nlohmann::json cover_map(const WeightedGraph& g, const FractionalVertexCover& y) {
  nlohmann::json out = nlohmann::json::object();
  for (VertexId v = 0; v < y.y.size(); ++v) out[g.label(v)] = fraction(y.y[v]);
  return out;
}

nlohmann::json edge_values(const WeightedGraph& g, const EdgeValues& x) {
  nlohmann::json out = nlohmann::json::array();
  for (EdgeId e = 0; e < x.size(); ++e) {
    if (x[e] == 0) continue;
    out.push_back({{"u", g.label(g.edge(e).u)}, {"v", g.label(g.edge(e).v)}, {"x", fraction(x[e])}});
  }
  return out;
}

Matching parse_matching(const WeightedGraph& g, const nlohmann::json& pairs) {
  std::vector<EdgeId> edges = parse_edges(g, pairs);
  return Matching::from_edges(g, edges);
}

FractionalVertexCover parse_cover(const WeightedGraph& g, const nlohmann::json& map) {
  if (!map.is_object()) fail("cover must be an object keyed by vertex label");
  FractionalVertexCover y{std::vector<Rational>(g.vertex_count())};
  for (const auto& [label, value] : map.items()) y.y[vertex(g, label)] = weight(value);
  return y;
}

std::vector<VertexId> parse_vertices(const WeightedGraph& g, const nlohmann::json& list) {
  if (!list.is_array()) fail("vertex list must be an array");
  std::vector<VertexId> out;
  for (const auto& label : list) out.push_back(vertex(g, label));
  return out;
}

std::vector<EdgeId> parse_edges(const WeightedGraph& g, const nlohmann::json& pairs) {
  if (!pairs.is_array()) fail("edge list must be an array of pairs");
  std::vector<EdgeId> out;
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2) fail("edge entries must be [u, v] pairs");
    auto e = g.find_edge(vertex(g, pair[0]), vertex(g, pair[1]));
    if (!e) fail("no edge " + pair.dump());
    out.push_back(*e);
  }
  return out;
}

}  // namespace graphstab::io
