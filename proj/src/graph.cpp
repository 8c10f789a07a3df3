#include "oqs/graph.hpp"

#include <json.hpp>

#include "oqs/state.hpp"

namespace oqs {

GraphInstance generate_er(int n, double edge_prob, std::uint64_t seed) {
    if (n < 2) throw ContractError("generate_er: need at least 2 vertices");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw ContractError("generate_er: edge_prob must be in [0, 1]");
    GraphInstance g;
    g.n_vertices = n;
    g.seed = seed;
    g.edge_prob = edge_prob;
    Rng rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < edge_prob) g.edges.emplace_back(i, j);
    return g;
}

int cut_value(const GraphInstance& g, std::uint32_t z) {
    int cut = 0;
    for (const auto& [i, j] : g.edges)
        cut += bit_of(z, i, g.n_vertices) != bit_of(z, j, g.n_vertices);
    return cut;
}

int cut_value(const GraphInstance& g, const std::vector<int>& z) {
    if (static_cast<int>(z.size()) != g.n_vertices)
        throw SizeError("cut_value: bitstring length != vertex count");
    int cut = 0;
    for (const auto& [i, j] : g.edges) cut += (z[i] != 0) != (z[j] != 0);
    return cut;
}

std::vector<int> cut_table(const GraphInstance& g) {
    if (g.n_vertices > 24) throw GuardError("cut_table: vertex count above enumeration guard");
    const std::uint32_t nz = 1u << g.n_vertices;
    std::vector<int> table(nz, 0);
    for (std::uint32_t z = 0; z < nz; ++z) table[z] = cut_value(g, z);
    return table;
}

MaxCutResult max_cut_bruteforce(const GraphInstance& g) {
    if (g.n_vertices > 24)
        throw GuardError("max_cut_bruteforce: vertex count above enumeration guard (24)");
    MaxCutResult res;
    const std::vector<int> table = cut_table(g);
    for (int c : table) res.c_max = std::max(res.c_max, c);
    for (std::uint32_t z = 0; z < table.size(); ++z)
        if (table[z] == res.c_max) res.optimal.push_back(z);
    return res;
}

std::string graph_to_json(const GraphInstance& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n_vertices;
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    j["seed"] = g.seed;
    j["edge_prob"] = g.edge_prob;
    return j.dump();
}

GraphInstance graph_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GraphInstance g;
    g.n_vertices = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a == b) throw ContractError("graph_from_json: self-loop");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= g.n_vertices) throw ContractError("graph_from_json: vertex out of range");
        g.edges.emplace_back(a, b);
    }
    g.seed = j.value("seed", std::uint64_t{0});
    g.edge_prob = j.value("edge_prob", 0.0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (std::size_t k = i + 1; k < g.edges.size(); ++k)
            if (g.edges[i] == g.edges[k]) throw ContractError("graph_from_json: duplicate edge");
    return g;
}

}  // namespace oqs
