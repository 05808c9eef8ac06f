#include "subshift/io.hpp"

#include <algorithm>
#include <fstream>

namespace subshift::io {

GroupSpec group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("group spec must be an object with a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "zd") return GroupSpec::lattice(j.at("d").get<int>());
  if (kind == "free") return GroupSpec::free_group(j.at("rank").get<int>());
  if (kind == "finite")
    return GroupSpec::finite(j.at("table").get<std::vector<std::vector<int>>>());
  if (kind == "product")
    return GroupSpec::product(group_from_json(j.at("left")), group_from_json(j.at("right")));
  throw ParseError("unknown group kind: " + kind);
}

json group_to_json(const GroupSpec& spec) {
  json j;
  switch (spec.kind()) {
    case GroupSpec::Kind::Lattice:
      j["kind"] = "zd";
      j["d"] = spec.lattice_dim();
      break;
    case GroupSpec::Kind::Free:
      j["kind"] = "free";
      j["rank"] = spec.free_rank();
      break;
    case GroupSpec::Kind::Finite: {
      j["kind"] = "finite";
      // Rebuild the table through the multiplication.
      std::int64_t n = spec.finite_order();
      std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n)));
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
          table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(
              spec.multiply(GroupElement::finite(a), GroupElement::finite(b)).as_finite());
      j["table"] = table;
      break;
    }
    case GroupSpec::Kind::Product:
      j["kind"] = "product";
      j["left"] = group_to_json(spec.left());
      j["right"] = group_to_json(spec.right());
      break;
  }
  return j;
}

PatternCoding coding_from_json(const json& j) {
  return PatternCoding(j.at("support").get<std::vector<std::string>>(),
                       j.at("values").get<std::vector<int>>());
}

json coding_to_json(const PatternCoding& c) {
  json j;
  j["support"] = c.support;
  j["values"] = c.values;
  return j;
}

SftPresentation sft_from_json(const json& j) {
  SftPresentation x;
  x.group = group_from_json(j.at("group"));
  x.alphabet = Alphabet(j.at("alphabet").get<std::vector<int>>());
  for (const auto& c : j.at("forbidden")) x.forbidden.push_back(coding_from_json(c));
  x.check();
  return x;
}

json sft_to_json(const SftPresentation& x) {
  json j;
  j["group"] = group_to_json(x.group);
  j["alphabet"] = x.alphabet.symbols;
  j["forbidden"] = json::array();
  for (const auto& c : x.forbidden) j["forbidden"].push_back(coding_to_json(c));
  return j;
}

SoficPresentation sofic_from_json(const json& j) {
  SoficPresentation y;
  y.base = sft_from_json(j);
  y.local_support = j.at("local_support").get<std::vector<std::string>>();
  std::vector<int> target_syms;
  for (const auto& entry : j.at("local_map")) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("local_map entries must be [values, out_symbol]");
    y.local_map.emplace_back(entry.at(0).get<std::vector<int>>(), entry.at(1).get<int>());
  }
  if (j.contains("target")) {
    y.target = Alphabet(j.at("target").get<std::vector<int>>());
  } else {
    std::vector<int> syms;
    for (const auto& [key, out] : y.local_map)
      if (std::find(syms.begin(), syms.end(), out) == syms.end()) syms.push_back(out);
    std::sort(syms.begin(), syms.end());
    y.target = Alphabet(std::move(syms));
  }
  y.check();
  return y;
}

json sofic_to_json(const SoficPresentation& y) {
  json j = sft_to_json(y.base);
  j["local_support"] = y.local_support;
  j["local_map"] = json::array();
  for (const auto& [key, out] : y.local_map) j["local_map"].push_back(json::array({key, out}));
  j["target"] = y.target.symbols;
  return j;
}

GraphFile graph_from_json(const json& j) {
  GraphFile gf;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cayley") {
    gf.kind = GraphFile::Kind::Cayley;
    gf.group = group_from_json(j.at("group"));
    return gf;
  }
  if (kind == "finite") {
    gf.kind = GraphFile::Kind::Finite;
    std::int64_t n = j.at("vertices").get<std::int64_t>();
    std::vector<Vertex> vertices;
    for (std::int64_t v = 0; v < n; ++v) vertices.push_back(v);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs");
      edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    }
    gf.finite = FiniteGraph(std::move(vertices), std::move(edges));
    return gf;
  }
  throw ParseError("unknown graph kind: " + kind);
}

TxSpec tx_from_json(const json& j) {
  TxSpec spec;
  spec.group = group_from_json(j.at("group"));
  const auto& h = j.at("h");
  for (const auto& g : h.at("generators")) {
    if (!g.is_array() || g.size() != 2)
      throw ParseError("h generators must be [name, inverse] pairs");
    spec.h.generators.emplace_back(g.at(0).get<std::string>(), g.at(1).get<std::string>());
  }
  if (h.contains("relators"))
    spec.h.relators = h.at("relators").get<std::vector<std::string>>();
  for (const auto& w : j.at("f"))
    spec.displacements.push_back(spec.group.evaluate(w.get<std::string>()));
  return spec;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace subshift::io
