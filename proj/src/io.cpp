#include "qface/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qface {

namespace {

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

Quiver parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw Error(Errc::UnknownFormat, "expected an object with 'vertices' and 'edges'");

    auto id_of = [](const nlohmann::json& v) -> VertexId {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw Error(Errc::ParseError, "vertex ids must be strings or integers");
    };

    std::vector<VertexId> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(id_of(v));
    if (verts.empty()) throw Error(Errc::EmptyVertexSet, "the vertex list is empty");
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t k = i + 1; k < verts.size(); ++k)
            if (verts[i] == verts[k])
                throw Error(Errc::ParseError, "vertex '" + verts[i] + "' listed twice");

    auto index_of = [&](const VertexId& id) {
        auto it = std::find(verts.begin(), verts.end(), id);
        if (it == verts.end())
            throw Error(Errc::UnknownVertex, "edge endpoint '" + id + "' is not a listed vertex");
        return static_cast<int>(it - verts.begin());
    };

    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw Error(Errc::ParseError, "each edge must be a [tail, head] pair");
        edges.emplace_back(index_of(id_of(e[0])), index_of(id_of(e[1])));
    }
    return Quiver(std::move(verts), std::move(edges));
}

Quiver parse_edge_list(const std::string& text) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        VertexId a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (!(ls >> b) || (ls >> extra))
            throw Error(Errc::ParseError,
                        "line " + std::to_string(lineno) + ": expected 'tail head'");
        if (a == b)
            throw Error(Errc::LoopEdge, "line " + std::to_string(lineno) + ": loop at '" + a + "'");
        for (const auto& [pa, pb] : pairs)
            if (pa == a && pb == b)
                throw Error(Errc::DuplicateEdge,
                            "line " + std::to_string(lineno) + ": edge '" + a + " " + b +
                                "' appears twice");
        pairs.emplace_back(std::move(a), std::move(b));
    }
    if (pairs.empty()) throw Error(Errc::EmptyVertexSet, "no edges; the vertex set would be empty");
    return Quiver::from_pairs(pairs);
}

} // namespace

Quiver parse_quiver(const std::string& text) {
    if (looks_like_json(text)) return parse_json(text);
    return parse_edge_list(text);
}

std::vector<std::pair<VertexId, VertexId>> parse_edge_pairs(const std::string& text) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',' || c == ';') c = '\n';
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::istringstream in(normalized);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        VertexId a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra))
            throw Error(Errc::ParseError, "expected 'tail head' in '" + line + "'");
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
}

std::string to_edge_list(const Quiver& q) {
    std::ostringstream os;
    for (const Edge& e : q.edges())
        os << q.vertex(e.tail) << " " << q.vertex(e.head) << "\n";
    return os.str();
}

namespace {

std::vector<std::pair<VertexId, VertexId>> sorted_id_edges(const Quiver& q) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(static_cast<size_t>(q.edge_count()));
    for (const Edge& e : q.edges()) out.emplace_back(q.vertex(e.tail), q.vertex(e.head));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::string to_json_text(const Quiver& q) {
    nlohmann::json j;
    std::vector<VertexId> verts = q.vertices();
    std::sort(verts.begin(), verts.end());
    j["vertices"] = verts;
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : sorted_id_edges(q)) edges.push_back({a, b});
    j["edges"] = edges;
    return j.dump();
}

std::string canonical_text(const Quiver& q) {
    std::vector<VertexId> verts = q.vertices();
    std::sort(verts.begin(), verts.end());
    std::ostringstream os;
    os << "v";
    for (const auto& v : verts) os << " " << v;
    os << "\ne";
    for (const auto& [a, b] : sorted_id_edges(q)) os << " " << a << ">" << b;
    os << "\n";
    return os.str();
}

std::string input_digest(const Quiver& q) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_text(q)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace qface
