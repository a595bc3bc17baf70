#include "gbh/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gbh {

using nlohmann::json;

namespace {

json parse(const std::string& text, const std::string& context) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(Errc::ParseError, context + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph graph_from_json(const json& j, const std::string& context) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    fail(Errc::ParseError, context + ": expected an object with 'vertices' and 'edges'");
  std::vector<std::string> verts;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) fail(Errc::ParseError, context + ".vertices: ids must be strings");
    verts.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < j.at("edges").size(); ++i) {
    const auto& e = j.at("edges")[i];
    std::string where = context + ".edges[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("id") || !e.contains("ends") || !e.at("ends").is_array() ||
        e.at("ends").size() != 2 || !e.at("id").is_string() || !e.at("ends")[0].is_string() ||
        !e.at("ends")[1].is_string())
      fail(Errc::ParseError, where + ": expected {\"id\": str, \"ends\": [str, str]}");
    edges.push_back({e.at("id").get<std::string>(),
                     {e.at("ends")[0].get<std::string>(), e.at("ends")[1].get<std::string>()}});
  }
  try {
    return build_graph(verts, edges);
  } catch (const Error& err) {
    throw Error(err.code(), context + ": " + err.what());
  }
}

json graph_to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertex_ids();
  j["edges"] = json::array();
  for (const auto& e : g.edges())
    j["edges"].push_back({{"id", e.id}, {"ends", {g.vertex_id(e.u), g.vertex_id(e.v)}}});
  return j;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& context) {
  if (!j.is_object()) fail(Errc::ParseError, context + ": expected an object of vertex ids");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) fail(Errc::ParseError, context + "." + k + ": expected a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

Graph graph_from_json_text(const std::string& text, const std::string& context) {
  return graph_from_json(parse(text, context), context);
}

Graph load_graph(const std::string& path) { return graph_from_json_text(read_file(path), path); }

std::string graph_to_json_text(const Graph& g) { return graph_to_json(g).dump(2); }

FIGraphFamily family_from_json_text(const std::string& text, const std::string& context) {
  json j = parse(text, context);
  for (const char* key : {"base", "copy", "overlap", "embed_base", "embed_copy"})
    if (!j.contains(key)) fail(Errc::ParseError, context + ": missing '" + key + "'");
  Graph base = graph_from_json(j.at("base"), context + ".base");
  Graph copy = graph_from_json(j.at("copy"), context + ".copy");
  Graph overlap = graph_from_json(j.at("overlap"), context + ".overlap");
  auto eb = string_map(j.at("embed_base"), context + ".embed_base");
  auto ec = string_map(j.at("embed_copy"), context + ".embed_copy");
  int n_min = j.value("n_min", 0);
  try {
    return make_family(std::move(base), std::move(copy), std::move(overlap), std::move(eb),
                       std::move(ec), n_min);
  } catch (const Error& err) {
    throw Error(err.code(), context + ": " + err.what());
  }
}

FIGraphFamily load_family(const std::string& path) {
  return family_from_json_text(read_file(path), path);
}

std::string family_to_json_text(const FIGraphFamily& f) {
  json j;
  j["base"] = graph_to_json(f.base);
  j["copy"] = graph_to_json(f.copy);
  j["overlap"] = graph_to_json(f.overlap);
  j["embed_base"] = f.embed_base;
  j["embed_copy"] = f.embed_copy;
  j["n_min"] = f.n_min;
  return j.dump(2);
}

std::string abelian_to_json_text(const AbelianGroup& g) {
  json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = json::array();
  for (const auto& d : g.torsion) j["torsion"].push_back(d.get_str());
  return j.dump();
}

std::string les_report_to_json_text(const LesReport& r) {
  json j;
  j["vertex"] = r.vertex;
  j["mu"] = r.mu;
  j["ok"] = r.ok;
  j["exactness"] = json::array();
  for (const auto& e : r.exactness)
    j["exactness"].push_back({{"q", e.q},
                              {"n", e.n},
                              {"dim_sub", e.dim_sub},
                              {"dim_mid", e.dim_mid},
                              {"dim_quot", e.dim_quot},
                              {"exact", e.exact}});
  j["weights"] = json::array();
  for (const auto& w : r.weights)
    j["weights"].push_back({{"n", w.n},
                            {"betti_graph", w.betti_graph},
                            {"betti_blowup", w.betti_blowup},
                            {"alternating_sum_zero", w.alternating_sum_zero},
                            {"segments_consistent", w.segments_consistent}});
  return j.dump(2);
}

std::string stabilization_report_to_json_text(const StabilizationReport& r) {
  json j;
  j["target"] = r.target;
  j["n_values"] = r.n_values;
  j["stabilized"] = r.stabilized;
  if (!r.values.empty()) j["values"] = r.values;
  if (!r.polynomial.empty()) {
    j["polynomial"] = json::array();
    for (const auto& c : r.polynomial) j["polynomial"].push_back(c.get_str());
  }
  if (!r.holdouts.empty()) {
    j["holdouts"] = json::array();
    for (const auto& [n, okay] : r.holdouts) j["holdouts"].push_back({{"n", n}, {"matched", okay}});
  }
  if (!r.supports.empty()) {
    j["supports"] = json::array();
    for (const auto& s : r.supports) j["supports"].push_back(s);
    j["stable_support"] = r.stable_support;
    j["stable_run"] = r.stable_run;
  }
  return j.dump(2);
}

std::string star_regression_to_json_text(const StarRegressionReport& r) {
  json j;
  j["ok"] = r.ok;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json rj;
    rj["n"] = row.n;
    rj["cyclic_element_in_kernel"] = row.cyclic_element_in_kernel;
    rj["kernel_dim_degree3"] = row.kernel_dim_degree3;
    rj["h1_weight2"] = row.h1_weight2;
    rj["ok"] = row.ok;
    rj["kernel_new_generators"] = json::object();
    for (const auto& [deg, count] : row.kernel_new_generators)
      rj["kernel_new_generators"][std::to_string(deg)] = count;
    rj["h1_generator_degrees"] = json::object();
    for (const auto& [deg, count] : row.h1_generator_degrees)
      rj["h1_generator_degrees"][std::to_string(deg)] = count;
    j["rows"].push_back(std::move(rj));
  }
  return j.dump(2);
}

}  // namespace gbh
