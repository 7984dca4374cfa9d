#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profilekit/graph.hpp"
#include "profilekit/guarding.hpp"

namespace profilekit {

// Tree plus one bag of graph vertices per node; equivalently, a connected
// model subtree per graph vertex. Nodes are 1..node_count.
struct TreeRepresentation {
    int node_count = 0;
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<std::vector<int>> bags; // bags[node], index 0 unused, sorted
    std::optional<int> root;

    const std::vector<int> & bag(int node) const { return bags[static_cast<std::size_t>(node)]; }
    void check_node(int t) const;
    // Nodes whose bags contain v (the model of v), sorted.
    std::vector<int> model_of(int v) const;
};

struct ValidationReport {
    bool valid = false;
    int width = -1;
    int length = 0; // kInfinity when some bag spans several components
    std::vector<std::string> violations;
};

// Checks the representation axioms: tree shape, nonempty connected models,
// edge coverage. Width and length are computed even when invalid, as far as
// the structure allows.
ValidationReport validate_representation(const Graph & g, const TreeRepresentation & rep);

// Chordal representations additionally have models intersecting exactly for
// adjacent vertex pairs.
bool models_match_adjacency(const Graph & g, const TreeRepresentation & rep);

// Rooted-tree view used by the guarding construction and the case partition.
struct RootedTree {
    int node_count = 0;
    int root = 1;
    std::vector<std::vector<int>> adj;
    std::vector<int> parent; // parent[root] = 0
    std::vector<int> depth;

    static RootedTree of(int node_count, const std::vector<std::pair<int, int>> & edges, int root);
    int lca(int a, int b) const;
};

// For each requested vertex, the unique node of its model closest to the
// root. Throws StructureError for a vertex whose model is empty.
std::map<int, int> highest_nodes(const TreeRepresentation & rep, const std::vector<int> & vertices);

// All least common ancestors of pairs (possibly identical) from m.
std::vector<int> lca_closure(const RootedTree & tree, const std::vector<int> & m);

// Merges tree-adjacent nodes with identical bags; models and validity are
// preserved.
TreeRepresentation normalize_representation(const TreeRepresentation & rep);

// Guarding family from the LCA-closure of the highest model nodes of the
// target: at most 4|A| members, each of size at most 2(width+1).
GuardingFamily tw_guarding_family(const Graph & g, const TreeRepresentation & rep,
                                  const TargetSet & a_set, int radius);

// Clique tree of a chordal graph: bags are the maximal cliques, length 1.
// Non-chordal input raises DomainError naming a chordless cycle.
TreeRepresentation clique_tree(const Graph & g);

// Perfect elimination order if one exists.
std::optional<std::vector<int>> perfect_elimination_ordering(const Graph & g);
bool is_chordal(const Graph & g);

struct CasePartition {
    // Vertices whose model touches a closure node, keyed nowhere: one set.
    std::vector<int> bag_vertices;
    struct SinglePart {
        int anchor = 0; // the unique closure neighbour t
        std::vector<int> vertices;
    };
    struct DoublePart {
        int anchor_low = 0;   // t
        int anchor_high = 0;  // t'
        std::vector<int> path_nodes; // tree path between the two attachment nodes
        std::vector<int> vertices;
    };
    std::vector<int> closure_nodes;
    std::vector<SinglePart> single_neighbour;
    std::vector<DoublePart> double_neighbour;
};

// Splits V(G) by where each vertex's model lives relative to the LCA-closure
// of the target's highest nodes. Requires a valid representation of length
// at most 1.
CasePartition chordal_case_partition(const Graph & g, const TreeRepresentation & rep,
                                     const TargetSet & a_set, int root = 1);

struct SeparatorReport {
    long long profile_count = 0;
    long long bound = 0;
    bool ok = false;
    bool one_separator = false;
};

// Counts distinct r-profiles of x_set vertices and compares against the
// separator bound: (r+2)(ell+1)^|A| when s1 == s2, else (r+2)^2 (ell+1)^|A|.
// Preconditions (checked): s1 ∪ s2 separates x_set from the rest, both
// separator sides have pairwise distance at most ell, and target vertices
// inside x_set lie in the separator.
SeparatorReport separator_profile_bound_check(const Graph & g, const std::vector<int> & x_set,
                                              const std::vector<int> & s1, const std::vector<int> & s2,
                                              const TargetSet & a_set, int radius, int ell);

} // namespace profilekit
