#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgespec/graph.hpp"
#include "edgespec/int_linalg.hpp"

namespace edgespec {

// One representative per isomorphism class of free trees on n vertices,
// 1 <= n <= 16. Rooted level sequences (Beyer-Hedetniemi order) filtered by
// the centroid canonical code; the order is deterministic.
std::vector<Graph> enumerate_free_trees(int n);

struct CensusRecord {
    int n = 0;
    std::string canonical_code;
    IntPolynomial laplacian_charpoly;
    // Present only for members of Laplacian-cospectral classes of size >= 2.
    std::optional<IntPolynomial> charpoly_22;
    int class_id = 0;  // equal iff laplacian_charpoly equal; first-occurrence order
};

struct CensusSummary {
    int n = 0;
    long long tree_count = 0;
    long long cospectral_class_count = 0;  // classes of size >= 2
    long long trees_in_classes = 0;
    long long unresolved_by_22 = 0;

    bool operator==(const CensusSummary&) const = default;
};

struct CensusResult {
    CensusSummary summary;
    std::vector<CensusRecord> records;  // enumeration order
};

// Groups trees by exact Laplacian charpoly, then splits classes of size >= 2
// by the exact restricted-operator charpoly. jobs > 1 parallelizes the
// per-tree work; collection order stays deterministic.
CensusResult run_census(int n, int jobs = 1);

// One record per line, fixed field order, big integers as decimal strings.
void write_census_jsonl(const CensusResult& result, std::ostream& out);
std::string census_summary_csv_row(const CensusSummary& s);  // n,trees,classes,members,unresolved

// Godsil-McKay switching on the subset c: requires the subgraph induced by c
// to be regular and every outside vertex to have 0, |c|/2, or |c| neighbors
// in c; vertices with |c|/2 neighbors get their edges into c complemented.
Graph gm_switch(const Graph& g, const std::vector<int>& c);

// All valid switching subsets of size <= max_size (brute force; small n only).
std::vector<std::vector<int>> find_switching_sets(const Graph& g, int max_size);

struct GMVerdict {
    bool adjacency_cospectral = false;
    bool laplacian_cospectral = false;
    bool isomorphic = false;
    std::optional<int> first_differing_moment;
    std::map<int, std::pair<Int, Int>> moment_values;  // r -> (M_r(G), M_r(G'))
};

// Checks the embedded 4-regular pair on 10 vertices: cospectral,
// non-isomorphic, restricted moments equal through r = 5 and split at r = 6.
GMVerdict verify_gm_example();

}  // namespace edgespec
