#include "postlie/forest_algebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace postlie;

namespace {

// Independent model: a planar tree as a node with an ordered child list.
struct Node
{
    std::vector<Node> kids;
};

std::string show(const Node& n)
{
    if (n.kids.empty())
        return "o";
    std::string s = "o(";
    for (std::size_t i = 0; i < n.kids.size(); ++i)
        s += (i ? " " : "") + show(n.kids[i]);
    return s + ")";
}

std::vector<std::vector<Node>> nested_forests(int n);

std::vector<Node> nested_trees(int n)
{
    std::vector<Node> out;
    for (auto& f : nested_forests(n - 1))
        out.push_back(Node{f});
    return out;
}

// First tree of degree k, then any forest of degree n - k.
std::vector<std::vector<Node>> nested_forests(int n)
{
    if (n == 0)
        return {{}};
    std::vector<std::vector<Node>> out;
    for (int k = 1; k <= n; ++k)
        for (const auto& t : nested_trees(k))
            for (const auto& rest : nested_forests(n - k)) {
                std::vector<Node> f{t};
                f.insert(f.end(), rest.begin(), rest.end());
                out.push_back(f);
            }
    return out;
}

int count_vertices(const Node& n)
{
    int c = 1;
    for (const auto& k : n.kids)
        c += count_vertices(k);
    return c;
}

// Every way of inserting `branch` as the leftmost child of one vertex.
void graft_everywhere(const Node& branch, Node& target, Node& root, std::vector<std::string>& out)
{
    target.kids.insert(target.kids.begin(), branch);
    out.push_back(show(root));
    target.kids.erase(target.kids.begin());
    for (auto& k : target.kids)
        graft_everywhere(branch, k, root, out);
}

// Catalan numbers from the forest recursion F(n) = sum_k T(k) F(n-k),
// T(k) = labels * F(k-1).
std::vector<long> forest_counts(int max, long labels)
{
    std::vector<long> f(static_cast<std::size_t>(max) + 1, 0);
    f[0] = 1;
    for (int n = 1; n <= max; ++n)
        for (int k = 1; k <= n; ++k)
            f[n] += labels * f[k - 1] * f[n - k];
    return f;
}

} // namespace

TEST(Trees, SerializeRoundTripThroughDegreeSix)
{
    for (int n = 0; n <= 6; ++n)
        for (const auto& f : enumerate_forests(n)) {
            const std::string s = serialize(f);
            EXPECT_EQ(parse_forest(s), f) << s;
            EXPECT_EQ(serialize(parse_forest(s)), s);
        }
    EXPECT_EQ(serialize(Forest()), "1");
    EXPECT_EQ(parse_forest("1"), Forest());
}

TEST(Trees, EnumerationMatchesNestedModel)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> expected;
        for (const auto& t : nested_trees(n))
            expected.insert(show(t));
        std::set<std::string> got;
        for (const auto& t : enumerate_trees(n))
            got.insert(serialize(t));
        EXPECT_EQ(got, expected) << "degree " << n;
        EXPECT_EQ(enumerate_trees(n).size(), expected.size());
    }
}

TEST(Trees, ForestCountsAreCatalan)
{
    const auto catalan = forest_counts(7, 1);
    EXPECT_EQ(catalan, (std::vector<long>{1, 1, 2, 5, 14, 42, 132, 429}));
    for (int n = 0; n <= 7; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_forests(n).size()), catalan[n]) << n;
}

TEST(Trees, DecoratedCounts)
{
    const Alphabet ab({"a", "b"});
    const auto counts = forest_counts(5, 2);
    for (int n = 0; n <= 5; ++n)
        EXPECT_EQ(static_cast<long>(enumerate_forests(n, ab).size()), counts[n]) << n;
    EXPECT_EQ(enumerate_forests(2, ab).size(), 8u);
    EXPECT_EQ(serialize(b_plus(parse_forest("a b", ab), 1), ab), "b(a b)");
}

TEST(Trees, CanonicalOrderIsStrict)
{
    for (int n = 1; n <= 5; ++n) {
        const auto fs = enumerate_forests(n);
        EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end(),
                                   [](const Forest& a, const Forest& b) { return canonical_less(a, b); }));
        EXPECT_EQ(std::set<Forest>(fs.begin(), fs.end()).size(), fs.size());
    }
}

TEST(Trees, BPlusBMinus)
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& f : enumerate_forests(n))
            EXPECT_EQ(b_minus(b_plus(f)), f);
    for (int n = 1; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n))
            EXPECT_EQ(b_plus(b_minus(t)), t);
    EXPECT_EQ(serialize(b_plus(Forest())), "o");
    EXPECT_EQ(serialize(b_plus(parse_forest("o(o) o"))), "o(o(o) o)");
}

TEST(Trees, ButcherProductIsLeftmostBranch)
{
    const Tree s = parse_tree("o(o)");
    const Tree t = parse_tree("o(o o)");
    EXPECT_EQ(serialize(butcher_product(s, t)), "o(o(o) o o)");
    EXPECT_EQ(serialize(butcher_product(Tree::leaf(), Tree::leaf())), "o(o)");
}

TEST(Trees, GraftAtIndexesPreorder)
{
    const Tree t = parse_tree("o(o(o) o)");
    const Tree leaf = Tree::leaf();
    EXPECT_EQ(serialize(graft_at(leaf, t, 0)), "o(o o(o) o)");
    EXPECT_EQ(serialize(graft_at(leaf, t, 1)), "o(o(o o) o)");
    EXPECT_EQ(serialize(graft_at(leaf, t, 2)), "o(o(o(o)) o)");
    EXPECT_EQ(serialize(graft_at(leaf, t, 3)), "o(o(o) o(o))");
    EXPECT_THROW(graft_at(leaf, t, 4), std::out_of_range);
}

TEST(Trees, GraftingMatchesBruteForce)
{
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j)
            for (const auto& sigma : nested_trees(i))
                for (auto tau : nested_trees(j)) {
                    std::vector<std::string> expected;
                    graft_everywhere(sigma, tau, tau, expected);
                    EXPECT_EQ(static_cast<int>(expected.size()), count_vertices(tau));

                    std::map<std::string, int> want;
                    for (const auto& s : expected)
                        ++want[s];
                    std::map<std::string, int> got;
                    for_each_graft(Forest(parse_tree(show(sigma))), Forest(parse_tree(show(tau))),
                                   [&](const Forest& h) { ++got[serialize(h)]; });
                    EXPECT_EQ(got, want) << show(sigma) << " |> " << show(tau);
                }
}

TEST(Trees, GraftOfForestOntoEmptyAndUnit)
{
    int calls = 0;
    for_each_graft(parse_forest("o"), Forest(), [&](const Forest&) { ++calls; });
    EXPECT_EQ(calls, 0);
    std::vector<Forest> seen;
    for_each_graft(Forest(), parse_forest("o o"), [&](const Forest& h) { seen.push_back(h); });
    ASSERT_EQ(seen.size(), 1u);
    EXPECT_EQ(seen[0], parse_forest("o o"));
}

TEST(Trees, ParseErrorsCarryPosition)
{
    try {
        parse_tree("o(o");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_tree("o o"), ParseError);
    EXPECT_THROW(parse_forest("o()"), ParseError);
    EXPECT_THROW(parse_forest("o  o"), ParseError);
    EXPECT_THROW(parse_forest("q"), ParseError);
}

TEST(Trees, DepthSumGrowsUnderDeeperGrafts)
{
    const Tree t = parse_tree("o(o o)");
    EXPECT_EQ(Forest(t).depth_sum(), 2);
    EXPECT_EQ(Forest(graft_at(Tree::leaf(), t, 1)).depth_sum(), 4);
    EXPECT_EQ(Forest(graft_at(Tree::leaf(), t, 0)).depth_sum(), 3);
}
