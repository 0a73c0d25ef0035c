#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tolspace/group_check.hpp"
#include "tolspace/homology.hpp"
#include "tolspace/hopf.hpp"
#include "tolspace/lattice_embed.hpp"
#include "tolspace/moves.hpp"
#include "tolspace/spheres.hpp"

namespace tolspace::json {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Readers. All throw ParseError whose where() is a JSON pointer into the
// document ("/edges/3/1") or "line L, column C" for syntax errors. An optional
// "schema_version" key must equal kSchemaVersion; any other unknown key is
// rejected.

Json parse(std::string_view text);
ToleranceSpace graph_from_json(const Json& j, const std::string& where = "");
ToleranceMap map_from_json(const Json& j);
MultiplicationTable table_from_json(const Json& j);

ToleranceSpace read_graph(std::string_view text);
ToleranceMap read_map(std::string_view text);
MultiplicationTable read_table(std::string_view text);

// Writers. Key order is fixed so identical inputs give identical bytes.

Json to_json(const ToleranceSpace& x, bool versioned = true);
Json to_json(const ToleranceMap& f);
Json to_json(const MultiplicationTable& t);
/// {"0": {"betti": 0, "torsion": []}, ...}
Json to_json(const HomologyProfile& h);
Json to_json(const Move& m);
Json to_json(const MoveTrace& t);
Json to_json(const EquivalenceVerdict& v, bool with_trace);
Json to_json(const ContractibilityResult& r, bool with_trace);
Json to_json(const CoreReduction& r, bool with_trace);
Json to_json(const SphereReport& r, bool with_trace);
Json to_json(const BundleReport& r, bool with_trace);
Json to_json(const GroupCheck& g);
Json to_json(const LatticeEmbedding& e);

/// Graphviz rendering, for looking at a space by eye.
std::string to_dot(const ToleranceSpace& x, std::string_view name = "X");

}  // namespace tolspace::json
