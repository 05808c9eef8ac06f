#ifndef SUBSHIFT_IO_HPP
#define SUBSHIFT_IO_HPP

#include <string>

#include <json.hpp>

#include "subshift/bounded_actions.hpp"
#include "subshift/graph.hpp"
#include "subshift/sft.hpp"

namespace subshift::io {

using nlohmann::json;

GroupSpec group_from_json(const json& j);
json group_to_json(const GroupSpec& spec);

PatternCoding coding_from_json(const json& j);
json coding_to_json(const PatternCoding& c);

SftPresentation sft_from_json(const json& j);
json sft_to_json(const SftPresentation& x);

SoficPresentation sofic_from_json(const json& j);
json sofic_to_json(const SoficPresentation& y);

/// Graph file: {"kind":"cayley","group":...} or
/// {"kind":"finite","vertices":n,"edges":[[u,v],...]}.
struct GraphFile {
  enum class Kind { Cayley, Finite };
  Kind kind = Kind::Cayley;
  GroupSpec group;         // Cayley
  FiniteGraph finite;      // Finite
};
GraphFile graph_from_json(const json& j);

/// Bounded-action spec: {"group":..., "h":{"generators":[[name,inv],...],
/// "relators":[...]}, "f":["x1",...]} with f given by words over the
/// group's generators.
struct TxSpec {
  GroupSpec group;
  HPresentation h;
  std::vector<GroupElement> displacements;
};
TxSpec tx_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace subshift::io

#endif
