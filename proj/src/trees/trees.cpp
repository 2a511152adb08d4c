#include "mouldlab/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "mouldlab/errors.hpp"

namespace mouldlab {

namespace {

class TextReader {
public:
    explicit TextReader(std::string_view s) : s_(s) {}

    char peek()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t'))
            ++pos_;
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c)
    {
        if (peek() != c)
            fail({std::string("'") + c + "'"});
        ++pos_;
    }
    bool done() { return peek() == '\0'; }
    [[noreturn]] void fail(std::vector<std::string> expected)
    {
        std::string found = pos_ < s_.size() ? std::string(1, s_[pos_]) : "";
        throw ParseError(pos_, std::move(expected), found);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

BinaryTree parse_binary(TextReader &r)
{
    char c = r.peek();
    if (c == 'L') {
        r.expect('L');
        return BinaryTree::leaf();
    }
    if (c != '(')
        r.fail({"'L'", "'('"});
    r.expect('(');
    BinaryTree left = parse_binary(r);
    r.expect(',');
    BinaryTree right = parse_binary(r);
    r.expect(')');
    return BinaryTree::node(left, right);
}

PlanarTree parse_planar(TextReader &r)
{
    char c = r.peek();
    if (c == 'L') {
        r.expect('L');
        return PlanarTree();
    }
    if (c != '(')
        r.fail({"'L'", "'('"});
    r.expect('(');
    std::vector<PlanarTree> children;
    children.push_back(parse_planar(r));
    while (r.peek() == ',') {
        r.expect(',');
        children.push_back(parse_planar(r));
    }
    r.expect(')');
    return PlanarTree::node(std::move(children));
}

void binary_intervals(const BinaryTree &t, int offset, std::vector<std::pair<int, int>> &out)
{
    if (t.is_leaf())
        return;
    binary_intervals(t.left(), offset, out);
    out.emplace_back(offset + 1, offset + t.degree());
    binary_intervals(t.right(), offset + t.left().degree() + 1, out);
}

// Every vertex spans strictly more gaps than its children, so the intervals
// are pairwise distinct.
void planar_intervals(const PlanarTree &t, int offset, std::vector<std::pair<int, int>> &out)
{
    if (t.is_leaf())
        return;
    out.emplace_back(offset + 1, offset + t.degree());
    int pos = offset;
    for (const auto &c : t.children()) {
        planar_intervals(c, pos, out);
        pos += c.leaves();
    }
}

MouldComponent psi_of_intervals(int degree, const std::vector<std::pair<int, int>> &iv)
{
    std::vector<std::pair<Polynomial, unsigned>> den;
    den.reserve(iv.size());
    for (auto [lo, hi] : iv)
        den.emplace_back(Polynomial::interval(lo, hi), 1);
    return MouldComponent(degree, RatFun::from_factors(Polynomial(1), den));
}

void collect_top(const BinaryTree &t, int offset, bool left_child, bool is_root, std::vector<TopVertex> &out,
                 const std::function<BinaryTree(const BinaryTree &)> &rebuild)
{
    if (t.is_leaf())
        return;
    int gap = offset + t.left().degree() + 1;
    if (t.degree() == 1)
        out.push_back(TopVertex{gap, left_child, is_root, rebuild(BinaryTree::leaf())});
    collect_top(
        t.left(), offset, true, false, out,
        [&](const BinaryTree &x) { return rebuild(BinaryTree::node(x, t.right())); });
    collect_top(
        t.right(), gap, false, false, out,
        [&](const BinaryTree &x) { return rebuild(BinaryTree::node(t.left(), x)); });
}

} // namespace

struct BinaryTree::Node {
    BinaryTree left, right;
    int degree;
};

int BinaryTree::degree() const
{
    return node_ ? node_->degree : 0;
}

BinaryTree BinaryTree::node(const BinaryTree &left, const BinaryTree &right)
{
    BinaryTree t;
    t.node_ = std::make_shared<const Node>(Node{left, right, left.degree() + right.degree() + 1});
    return t;
}

BinaryTree BinaryTree::parse(std::string_view text)
{
    TextReader r(text);
    BinaryTree t = parse_binary(r);
    if (!r.done())
        r.fail({"end of input"});
    return t;
}

BinaryTree BinaryTree::left_comb(int degree)
{
    BinaryTree t;
    for (int k = 0; k < degree; ++k)
        t = node(t, leaf());
    return t;
}

BinaryTree BinaryTree::right_comb(int degree)
{
    BinaryTree t;
    for (int k = 0; k < degree; ++k)
        t = node(leaf(), t);
    return t;
}

const BinaryTree &BinaryTree::left() const
{
    if (!node_)
        throw InvalidArgument("a leaf has no children");
    return node_->left;
}

const BinaryTree &BinaryTree::right() const
{
    if (!node_)
        throw InvalidArgument("a leaf has no children");
    return node_->right;
}

std::string BinaryTree::to_string() const
{
    if (is_leaf())
        return "L";
    return "(" + left().to_string() + "," + right().to_string() + ")";
}

std::strong_ordering BinaryTree::operator<=>(const BinaryTree &o) const
{
    if (node_ == o.node_)
        return std::strong_ordering::equal;
    if (degree() != o.degree())
        return degree() <=> o.degree();
    if (is_leaf())
        return std::strong_ordering::equal;
    auto c = left() <=> o.left();
    if (c != 0)
        return c;
    return right() <=> o.right();
}

PlanarTree PlanarTree::node(std::vector<PlanarTree> children)
{
    if (children.size() < 2)
        throw InvalidArgument("a planar tree vertex needs at least two children");
    PlanarTree t;
    t.children_ = std::move(children);
    return t;
}

PlanarTree PlanarTree::corolla(int leaves)
{
    return node(std::vector<PlanarTree>(static_cast<std::size_t>(leaves)));
}

PlanarTree PlanarTree::from_binary(const BinaryTree &t)
{
    if (t.is_leaf())
        return {};
    return node({from_binary(t.left()), from_binary(t.right())});
}

PlanarTree PlanarTree::parse(std::string_view text)
{
    TextReader r(text);
    PlanarTree t = parse_planar(r);
    if (!r.done())
        r.fail({"end of input"});
    return t;
}

int PlanarTree::leaves() const
{
    if (is_leaf())
        return 1;
    int n = 0;
    for (const auto &c : children_)
        n += c.leaves();
    return n;
}

std::string PlanarTree::to_string() const
{
    if (is_leaf())
        return "L";
    std::string s = "(";
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i)
            s += ",";
        s += children_[i].to_string();
    }
    return s + ")";
}

std::strong_ordering PlanarTree::operator<=>(const PlanarTree &o) const
{
    if (leaves() != o.leaves())
        return leaves() <=> o.leaves();
    if (children_.size() != o.children_.size())
        return children_.size() <=> o.children_.size();
    for (std::size_t i = 0; i < children_.size(); ++i) {
        auto c = children_[i] <=> o.children_[i];
        if (c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

unsigned long long catalan(int n)
{
    if (n < 0)
        throw InvalidArgument("catalan: negative index");
    std::vector<unsigned long long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 0; k < m; ++k)
            c[m] += c[k] * c[m - 1 - k];
    return c[n];
}

std::vector<BinaryTree> enumerate_binary_trees(int n)
{
    if (n < 0)
        throw InvalidArgument("negative degree");
    std::vector<std::vector<BinaryTree>> by_degree(static_cast<std::size_t>(n) + 1);
    by_degree[0] = {BinaryTree::leaf()};
    for (int m = 1; m <= n; ++m)
        for (int k = m - 1; k >= 0; --k)
            for (const auto &l : by_degree[k])
                for (const auto &r : by_degree[m - 1 - k])
                    by_degree[m].push_back(BinaryTree::node(l, r));
    return by_degree[n];
}

std::vector<PlanarTree> enumerate_planar_trees(int n)
{
    if (n < 0)
        throw InvalidArgument("negative degree");
    // by_leaves[l]: all planar trees with l leaves.
    std::vector<std::vector<PlanarTree>> by_leaves(static_cast<std::size_t>(n) + 2);
    by_leaves[1] = {PlanarTree()};
    for (int l = 2; l <= n + 1; ++l) {
        // Sequences of at least two subtrees whose leaves add up to l.
        std::function<void(int, std::vector<PlanarTree> &)> extend = [&](int remaining, std::vector<PlanarTree> &acc) {
            if (remaining == 0) {
                if (acc.size() >= 2)
                    by_leaves[l].push_back(PlanarTree::node(acc));
                return;
            }
            for (int first = remaining; first >= 1; --first) {
                if (first == l)
                    continue;
                for (const auto &c : by_leaves[first]) {
                    acc.push_back(c);
                    extend(remaining - first, acc);
                    acc.pop_back();
                }
            }
        };
        std::vector<PlanarTree> acc;
        extend(l, acc);
    }
    return by_leaves[n + 1];
}

std::vector<std::pair<int, int>> vertex_intervals(const BinaryTree &t)
{
    std::vector<std::pair<int, int>> out;
    binary_intervals(t, 0, out);
    return out;
}

std::vector<std::pair<int, int>> vertex_intervals(const PlanarTree &t)
{
    std::vector<std::pair<int, int>> out;
    planar_intervals(t, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

MouldComponent psi_tree(const BinaryTree &t)
{
    if (t.degree() < 1)
        throw InvalidArgument("psi is defined on trees of degree at least one");
    return psi_of_intervals(t.degree(), vertex_intervals(t));
}

MouldComponent psi_planar_tree(const PlanarTree &t)
{
    if (t.degree() < 1)
        throw InvalidArgument("psi is defined on trees of degree at least one");
    return psi_of_intervals(t.degree(), vertex_intervals(t));
}

MouldComponent tridend_bottom()
{
    return MouldComponent(2, RatFun::from_factors(Polynomial(1), {{Polynomial::interval(1, 2), 1}}));
}

std::vector<TopVertex> top_vertices(const BinaryTree &t)
{
    std::vector<TopVertex> out;
    collect_top(t, 0, false, true, out, [](const BinaryTree &x) { return x; });
    return out;
}

bool is_permutation(const Permutation &sigma)
{
    std::vector<bool> seen(sigma.size() + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

BinaryTree pi(const Permutation &sigma)
{
    if (!is_permutation(sigma))
        throw InvalidArgument("not a permutation");
    std::function<BinaryTree(const std::vector<int> &)> build = [&](const std::vector<int> &seq) {
        if (seq.empty())
            return BinaryTree::leaf();
        int root = seq.front();
        std::vector<int> lo, hi;
        for (int v : seq)
            if (v < root)
                lo.push_back(v);
            else if (v > root)
                hi.push_back(v);
        return BinaryTree::node(build(lo), build(hi));
    };
    return build(sigma);
}

RatFun multi_residue(const MouldComponent &f, const Permutation &sigma)
{
    if (!is_permutation(sigma) || static_cast<int>(sigma.size()) != f.arity())
        throw InvalidArgument("multi_residue needs a permutation of 1.." + std::to_string(f.arity()));
    RatFun r = f.value();
    for (std::size_t k = sigma.size(); k-- > 0;)
        r = r.residue_at_zero(Var::u(sigma[k]));
    return r;
}

TamariPoset::TamariPoset(int degree) : degree_(degree), trees_(enumerate_binary_trees(degree))
{
    std::sort(trees_.begin(), trees_.end());
    std::size_t n = trees_.size();
    std::vector<std::vector<int>> up(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &r : rotations(trees_[i]))
            up[i].push_back(index_of(r));
    above_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        std::queue<int> q;
        q.push(static_cast<int>(i));
        above_[i][i] = true;
        while (!q.empty()) {
            int j = q.front();
            q.pop();
            for (int k : up[j])
                if (!above_[i][k]) {
                    above_[i][k] = true;
                    q.push(k);
                }
        }
    }
}

int TamariPoset::index_of(const BinaryTree &t) const
{
    auto it = std::lower_bound(trees_.begin(), trees_.end(), t);
    if (it == trees_.end() || !(*it == t))
        throw InvalidArgument("tree " + t.to_string() + " does not have degree " + std::to_string(degree_));
    return static_cast<int>(it - trees_.begin());
}

bool TamariPoset::leq(const BinaryTree &a, const BinaryTree &b) const
{
    return above_[index_of(a)][index_of(b)];
}

std::vector<BinaryTree> TamariPoset::interval(const BinaryTree &a, const BinaryTree &b) const
{
    int i = index_of(a), j = index_of(b);
    std::vector<BinaryTree> out;
    for (std::size_t k = 0; k < trees_.size(); ++k)
        if (above_[i][k] && above_[k][j])
            out.push_back(trees_[k]);
    return out;
}

bool TamariPoset::is_interval(const std::vector<BinaryTree> &set) const
{
    if (set.empty())
        return false;
    std::vector<int> idx;
    for (const auto &t : set)
        idx.push_back(index_of(t));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    int lo = -1, hi = -1;
    for (int a : idx) {
        bool is_min = true, is_max = true;
        for (int b : idx) {
            is_min = is_min && above_[a][b];
            is_max = is_max && above_[b][a];
        }
        if (is_min)
            lo = a;
        if (is_max)
            hi = a;
    }
    if (lo < 0 || hi < 0)
        return false;
    std::size_t count = 0;
    for (std::size_t k = 0; k < trees_.size(); ++k)
        if (above_[lo][k] && above_[k][hi])
            ++count;
    return count == idx.size();
}

std::vector<std::pair<BinaryTree, BinaryTree>> TamariPoset::covers() const
{
    std::vector<std::pair<BinaryTree, BinaryTree>> out;
    for (const auto &t : trees_)
        for (const auto &r : rotations(t))
            out.emplace_back(t, r);
    return out;
}

std::vector<BinaryTree> rotations(const BinaryTree &t)
{
    std::vector<BinaryTree> out;
    if (t.is_leaf())
        return out;
    if (!t.left().is_leaf()) {
        const BinaryTree &a = t.left().left(), &b = t.left().right(), &c = t.right();
        out.push_back(BinaryTree::node(a, BinaryTree::node(b, c)));
    }
    for (const auto &l : rotations(t.left()))
        out.push_back(BinaryTree::node(l, t.right()));
    for (const auto &r : rotations(t.right()))
        out.push_back(BinaryTree::node(t.left(), r));
    return out;
}

} // namespace mouldlab
