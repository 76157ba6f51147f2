#pragma once

// JSON wire formats:
//   Hypergraph  {"r":int,"n":int,"edges":[[int,...],...]}
//   Cover       {"r":int,"blocks":[{"parts":[[int,...],...]},...]}
//   BoundReport {"name":str,"inputs":{...},"value":float,"direction":"lower"|"upper"|"exact"}
// Output is canonical (sorted vertices, sorted edges, block order kept), so a
// canonical document round-trips byte for byte.

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "hypercover/hypergraph.hpp"

namespace hypercover {

using Json = nlohmann::ordered_json;

inline Json to_json(const Hypergraph& h) {
    Json out;
    out["r"] = h.uniformity();
    out["n"] = h.vertex_count();
    Json edges = Json::array();
    for (const Edge& e : h.edges())
        edges.push_back(e);
    out["edges"] = std::move(edges);
    return out;
}

inline Json to_json(const Cover& c) {
    Json out;
    out["r"] = c.uniformity();
    Json blocks = Json::array();
    for (const auto& b : c.blocks()) {
        Json block;
        block["parts"] = b.parts();
        blocks.push_back(std::move(block));
    }
    out["blocks"] = std::move(blocks);
    return out;
}

inline Json to_json(const BoundReport& b) {
    if (!std::isfinite(b.value))
        throw std::invalid_argument("BoundReport '" + b.name + "' has a non-finite value");
    Json out;
    out["name"] = b.name;
    Json inputs = Json::object();
    for (const auto& [key, value] : b.inputs)
        inputs[key] = value;
    out["inputs"] = std::move(inputs);
    out["value"] = b.value;
    out["direction"] = to_string(b.direction);
    return out;
}

namespace detail {

inline const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("JSON: missing field '") + key + "'");
    return j.at(key);
}

inline int require_int(const Json& j, const char* key) {
    const Json& v = require(j, key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("JSON: field '") + key + "' must be an integer");
    return v.get<int>();
}

inline std::vector<Vertex> vertex_list(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("JSON: expected an array of vertices");
    std::vector<Vertex> out;
    for (const Json& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw std::invalid_argument("JSON: vertices must be non-negative integers");
        out.push_back(v.get<Vertex>());
    }
    return out;
}

}  // namespace detail

inline Hypergraph hypergraph_from_json(const Json& j) {
    int r = detail::require_int(j, "r");
    int n = detail::require_int(j, "n");
    if (n < 0)
        throw std::invalid_argument("JSON: n must be non-negative");
    const Json& edges = detail::require(j, "edges");
    if (!edges.is_array())
        throw std::invalid_argument("JSON: 'edges' must be an array");
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Json& e : edges)
        out.push_back(detail::vertex_list(e));
    return Hypergraph(r, static_cast<std::size_t>(n), std::move(out));
}

inline Cover cover_from_json(const Json& j) {
    int r = detail::require_int(j, "r");
    const Json& blocks = detail::require(j, "blocks");
    if (!blocks.is_array())
        throw std::invalid_argument("JSON: 'blocks' must be an array");
    Cover out(r);
    for (const Json& b : blocks) {
        const Json& parts = detail::require(b, "parts");
        if (!parts.is_array())
            throw std::invalid_argument("JSON: 'parts' must be an array");
        std::vector<std::vector<Vertex>> ps;
        for (const Json& p : parts)
            ps.push_back(detail::vertex_list(p));
        out.add(RPartiteBlock(std::move(ps)));
    }
    return out;
}

inline std::string dump(const Json& j) { return j.dump(); }

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump() << '\n';
}

}  // namespace hypercover
