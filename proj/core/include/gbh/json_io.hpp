#pragma once

#include <string>

#include "gbh/abelian.hpp"
#include "gbh/blowup.hpp"
#include "gbh/fi_family.hpp"
#include "gbh/graph.hpp"

namespace gbh {

// Graph file format:
//   {"vertices": ["a","b"], "edges": [{"id":"e1","ends":["a","b"]}]}
Graph graph_from_json_text(const std::string& text, const std::string& context);
Graph load_graph(const std::string& path);
std::string graph_to_json_text(const Graph& g);

// Family file format:
//   {"base": <graph>, "copy": <graph>, "overlap": <graph>,
//    "embed_base": {"h":"g",...}, "embed_copy": {...}, "n_min": 0}
FIGraphFamily family_from_json_text(const std::string& text, const std::string& context);
FIGraphFamily load_family(const std::string& path);
std::string family_to_json_text(const FIGraphFamily& f);

std::string abelian_to_json_text(const AbelianGroup& g);
std::string les_report_to_json_text(const LesReport& r);
std::string stabilization_report_to_json_text(const StabilizationReport& r);
std::string star_regression_to_json_text(const StarRegressionReport& r);

}  // namespace gbh
