#pragma once

#include <string>

#include <json.hpp>

#include "ocsp/cospan.hpp"
#include "ocsp/fincat.hpp"
#include "ocsp/finset.hpp"
#include "ocsp/graph.hpp"
#include "ocsp/structured.hpp"

namespace ocsp {

using nlohmann::json;

// Finite-set cospan with graph apex over the discrete structuring: the file
// format for open graphs, with legs given on vertices.
using OpenGraph = StructuredCospan<FinSetCat, GraphCat>;

json to_json(const FinSet& a);
json to_json(const FinFunction& f);
json to_json(const Graph& g);
json to_json(const FinCat& c);
json to_json(const Cospan<FinSetCat>& m);
json to_json(const OpenGraph& g);

FinSet finset_from_json(const json& j);
FinFunction finfunction_from_json(const json& j);
Graph graph_from_json(const json& j);
FinCat fincat_from_json(const json& j);
Cospan<FinSetCat> cospan_from_json(const json& j);
OpenGraph open_graph_from_json(const json& j);

// Canonical text form: two-space indent, keys sorted, trailing newline.
// Reading a canonical file and writing it back is byte-identical.
std::string canonical(const json& j);

}  // namespace ocsp
