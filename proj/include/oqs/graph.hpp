#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "oqs/common.hpp"

namespace oqs {

struct GraphInstance {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // unordered pairs stored i < j
    std::uint64_t seed = 0;
    double edge_prob = 0.0;
};

// G(n, p): candidate edges enumerated in lexicographic (i < j) order, one
// uniform draw each from mt19937_64 (53-bit mapping); edge kept when the
// draw is < edge_prob. Deterministic per (n, edge_prob, seed).
GraphInstance generate_er(int n, double edge_prob, std::uint64_t seed);

// Number of edges (i, j) with z_i != z_j. Bit i of z is the vertex-i
// label, vertex 0 most significant (bit_of convention).
int cut_value(const GraphInstance& g, std::uint32_t z);
int cut_value(const GraphInstance& g, const std::vector<int>& z);

// Cut values for all 2^n bitstrings, indexed by z.
std::vector<int> cut_table(const GraphInstance& g);

struct MaxCutResult {
    int c_max = 0;
    std::vector<std::uint32_t> optimal;  // all maximizing bitstrings, ascending
};

// Exact maximum over all 2^n bitstrings; refuses n > 24.
MaxCutResult max_cut_bruteforce(const GraphInstance& g);

std::string graph_to_json(const GraphInstance& g);
GraphInstance graph_from_json(const std::string& text);

}  // namespace oqs
