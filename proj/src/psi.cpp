#include "postlie/psi.hpp"

#include <algorithm>

namespace postlie {

namespace {

Series<Rational> psi_memo(const Tree& tree, std::map<Tree, Series<Rational>>& memo)
{
    if (auto it = memo.find(tree); it != memo.end())
        return it->second;
    Series<Rational> value;
    if (tree.degree() == 1) {
        value = Series<Rational>::of(Forest(tree), 1);
    } else {
        auto [branch, rest] = butcher_split(tree);
        value = graft(psi_memo(branch, memo).with_order(tree.degree()),
                      psi_memo(rest, memo).with_order(tree.degree()));
    }
    memo.emplace(tree, value);
    return value;
}

// Grafting a branch anywhere but the root pushes vertices deeper, so psi(t)
// is t plus trees of larger depth sum.
bool triangular_less(const Forest& a, const Forest& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    if (a.depth_sum() != b.depth_sum())
        return a.depth_sum() < b.depth_sum();
    return canonical_less(a, b);
}

} // namespace

std::pair<Tree, Tree> butcher_split(const Tree& tree)
{
    const auto& vs = tree.vertices();
    if (vs.size() < 2)
        throw std::invalid_argument("a single vertex is not a Butcher product");
    std::size_t end = 2;
    while (end < vs.size() && vs[end].depth > 1)
        ++end;
    std::vector<Vertex> branch;
    detail::append_shifted(branch, vs, 1, end, -1);
    std::vector<Vertex> rest{vs.front()};
    rest.insert(rest.end(), vs.begin() + static_cast<std::ptrdiff_t>(end), vs.end());
    return {Tree(std::move(branch)), Tree(std::move(rest))};
}

Series<Rational> psi(const Tree& tree)
{
    std::map<Tree, Series<Rational>> memo;
    return psi_memo(tree, memo);
}

Series<Rational> psi(const Series<Rational>& trees)
{
    std::map<Tree, Series<Rational>> memo;
    Series<Rational> out(trees.order());
    for (const auto& [f, c] : trees.terms())
        out += psi_memo(Tree(f.vertices()), memo) * c;
    return out;
}

Series<Rational> psi_inverse(const Series<Rational>& trees)
{
    std::map<Tree, Series<Rational>> memo;
    Series<Rational> remainder = trees;
    Series<Rational> out(trees.order());
    while (!remainder.is_zero()) {
        auto pivot = std::min_element(remainder.terms().begin(), remainder.terms().end(),
                                      [](const auto& a, const auto& b) { return triangular_less(a.first, b.first); });
        const Forest forest = pivot->first;
        const Rational coeff = pivot->second;
        const Series<Rational> image = psi_memo(Tree(forest.vertices()), memo);
        if (image.coefficient(forest) != 1)
            throw std::logic_error("psi is not unitriangular at " + serialize(forest));
        for (const auto& [g, c] : image.terms())
            if (g != forest && !triangular_less(forest, g))
                throw std::logic_error("psi is not triangular at " + serialize(forest));
        out.add(forest, coeff);
        remainder -= image * coeff;
    }
    return out;
}

} // namespace postlie
