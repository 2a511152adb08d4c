#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mouldlab/operad.hpp"

namespace mouldlab {

// Rooted planar binary tree; degree = number of internal vertices.
// Text form: leaf `L`, node `(left,right)`.
class BinaryTree {
public:
    BinaryTree() = default; // the leaf
    static BinaryTree leaf() { return {}; }
    static BinaryTree node(const BinaryTree &left, const BinaryTree &right);
    static BinaryTree parse(std::string_view text);
    static BinaryTree left_comb(int degree);
    static BinaryTree right_comb(int degree);

    bool is_leaf() const { return !node_; }
    const BinaryTree &left() const;
    const BinaryTree &right() const;
    int degree() const;

    std::string to_string() const;
    std::strong_ordering operator<=>(const BinaryTree &o) const;
    bool operator==(const BinaryTree &o) const { return (*this <=> o) == 0; }

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

// Planar tree whose internal vertices have at least two children.
// Text form: leaf `L`, node `(c1,c2,...,ck)`. Degree = leaves - 1.
class PlanarTree {
public:
    PlanarTree() = default; // the leaf
    static PlanarTree node(std::vector<PlanarTree> children);
    static PlanarTree corolla(int leaves);
    static PlanarTree from_binary(const BinaryTree &t);
    static PlanarTree parse(std::string_view text);

    bool is_leaf() const { return children_.empty(); }
    const std::vector<PlanarTree> &children() const { return children_; }
    int leaves() const;
    int degree() const { return leaves() - 1; }

    std::string to_string() const;
    std::strong_ordering operator<=>(const PlanarTree &o) const;
    bool operator==(const PlanarTree &o) const { return (*this <=> o) == 0; }

private:
    std::vector<PlanarTree> children_;
};

// Catalan numbers by the recurrence c_n = sum_k c_k c_{n-1-k}.
unsigned long long catalan(int n);

std::vector<BinaryTree> enumerate_binary_trees(int n);
std::vector<PlanarTree> enumerate_planar_trees(int n);

// One interval of leaf gaps per internal vertex, listed by gap 1..n.
std::vector<std::pair<int, int>> vertex_intervals(const BinaryTree &t);
std::vector<std::pair<int, int>> vertex_intervals(const PlanarTree &t);

// 1 / prod_v u_{interval(v)}
MouldComponent psi_tree(const BinaryTree &t);
MouldComponent psi_planar_tree(const PlanarTree &t);
// The ternary generator 1/(u1+u2).
MouldComponent tridend_bottom();

// A vertex whose two children are leaves, and the tree left after turning
// it into a leaf. If the vertex sits at gap k and is a left child then
// T = reduced o_k (left comb); if it is a right child T = reduced o_{k-1}
// (right comb).
struct TopVertex {
    int gap;
    bool left_child; // false for a right child or the root
    bool is_root;
    BinaryTree reduced;
};
std::vector<TopVertex> top_vertices(const BinaryTree &t);

using Permutation = std::vector<int>;

bool is_permutation(const Permutation &sigma);
// The tree whose vertex order is extended by sigma: sigma(1) is the root gap.
BinaryTree pi(const Permutation &sigma);
// Iterated residues at 0 in u_{sigma(n)}, ..., u_{sigma(1)}.
RatFun multi_residue(const MouldComponent &f, const Permutation &sigma);

struct Expansion {
    std::vector<std::pair<BinaryTree, Rational>> terms; // nonzero coefficients, tree order
};

struct ExpandOptions {
    unsigned long long seed = 1;
    int max_retries = 8;
    int extra_checks = 3; // random-point checks used above the symbolic limit
    int symbolic_limit = 4;
};

// Coefficients of f in the basis {psi(T)}. Throws DomainError if f is not
// in the span (verification fails) or the system stays singular.
Expansion expand_in_tree_basis(const MouldComponent &f, const ExpandOptions &opts = {});
// Like expand_in_tree_basis but returns nullopt when f is not in the span.
std::optional<Expansion> try_expand_in_tree_basis(const MouldComponent &f, const ExpandOptions &opts = {});

// Tamari order on trees of one degree; covering relation is the rotation
// ((A,B),C) -> (A,(B,C)), so the left comb is the minimum.
class TamariPoset {
public:
    explicit TamariPoset(int degree);

    int degree() const { return degree_; }
    const std::vector<BinaryTree> &trees() const { return trees_; }
    int index_of(const BinaryTree &t) const;
    bool leq(const BinaryTree &a, const BinaryTree &b) const;
    std::vector<BinaryTree> interval(const BinaryTree &a, const BinaryTree &b) const;
    // Whether the set equals [min, max] for some min <= max.
    bool is_interval(const std::vector<BinaryTree> &set) const;
    std::vector<std::pair<BinaryTree, BinaryTree>> covers() const;

private:
    int degree_;
    std::vector<BinaryTree> trees_;
    std::vector<std::vector<bool>> above_; // above_[i][j]: trees_[i] <= trees_[j]
};

// Right rotations at every possible vertex.
std::vector<BinaryTree> rotations(const BinaryTree &t);

} // namespace mouldlab
