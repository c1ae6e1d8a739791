#ifndef POSTLIE_PSI_HPP
#define POSTLIE_PSI_HPP

// The magma isomorphism between (trees, left Butcher product) and
// (trees, left grafting), and evaluation of tree series in a concrete
// post-Lie algebra through it.

#include "postlie/forest_algebra.hpp"

#include <functional>
#include <map>
#include <vector>

namespace postlie {

/// Splits a tree with at least two vertices as leftmost_branch o-> rest,
/// where rest is the tree with that branch removed from the root.
std::pair<Tree, Tree> butcher_split(const Tree& tree);

/// Psi: sends single vertices to themselves and the left Butcher product to
/// left grafting. Degree-preserving, with leading term the tree itself.
Series<Rational> psi(const Tree& tree);
Series<Rational> psi(const Series<Rational>& trees);

/// Inverse of psi on linear combinations of trees, by a triangular solve
/// ordered by degree, then depth sum. Throws std::logic_error if psi is not
/// unitriangular on a pivot tree.
Series<Rational> psi_inverse(const Series<Rational>& trees);

/// Evaluates forest series in a target where the generator labels are sent
/// to given elements. A tree is expanded as psi of Butcher-product words, and
/// each word is evaluated with the target's post-Lie product; forests map to
/// products of their trees. On Lie elements this is the post-Lie morphism
/// out of the free post-Lie algebra.
template <class E>
class PostLieMorphism
{
  public:
    struct Target
    {
        std::vector<E> generators;                     // image of each label
        std::function<E(const E&, const E&)> graft;    // post-Lie product
        std::function<E(const E&, const E&)> product;  // associative product
        std::function<E(const E&, const Rational&)> scale;
        std::function<E(const E&, const E&)> add;
        E one;
        E zero;
    };

    explicit PostLieMorphism(Target target) : target_(std::move(target)) {}

    const E& tree_image(const Tree& tree)
    {
        if (auto it = trees_.find(tree); it != trees_.end())
            return it->second;
        E value = target_.zero;
        const Series<Rational> words = psi_inverse(Series<Rational>::of(Forest(tree), tree.degree()));
        for (const auto& [f, c] : words.terms())
            value = target_.add(value, target_.scale(word_image(Tree(f.vertices())), c));
        return trees_.emplace(tree, std::move(value)).first->second;
    }

    E forest_image(const Forest& forest)
    {
        E value = target_.one;
        for (const auto& t : forest.trees())
            value = target_.product(value, tree_image(t));
        return value;
    }

    template <Coefficient C, class Scale>
    E operator()(const Series<C>& series, Scale&& scale_by_coefficient)
    {
        E value = target_.zero;
        for (const auto& [f, c] : series.terms())
            value = target_.add(value, scale_by_coefficient(forest_image(f), c));
        return value;
    }

    E operator()(const Series<Rational>& series)
    {
        return (*this)(series, [this](const E& e, const Rational& c) { return target_.scale(e, c); });
    }

  private:
    // Image of a tree read as a Butcher-product word in single vertices.
    const E& word_image(const Tree& tree)
    {
        if (auto it = words_.find(tree); it != words_.end())
            return it->second;
        E value;
        if (tree.degree() == 1) {
            value = target_.generators.at(tree.label());
        } else {
            auto [branch, rest] = butcher_split(tree);
            value = target_.graft(word_image(branch), word_image(rest));
        }
        return words_.emplace(tree, std::move(value)).first->second;
    }

    Target target_;
    std::map<Tree, E> trees_;
    std::map<Tree, E> words_;
};

/// Post-Lie endomorphism of the free algebra sending the single-vertex
/// generator to `image` (which should have zero constant term).
template <Coefficient C>
Series<C> substitute(const Series<C>& series, const Series<C>& image)
{
    const int order = std::min(series.order(), image.order());
    typename PostLieMorphism<Series<C>>::Target target{
        {image},
        [](const Series<C>& a, const Series<C>& b) { return graft(a, b); },
        [](const Series<C>& a, const Series<C>& b) { return concat(a, b); },
        [](const Series<C>& a, const Rational& q) { return a * q; },
        [](const Series<C>& a, const Series<C>& b) { return a + b; },
        Series<C>::unit(order),
        Series<C>(order)};
    PostLieMorphism<Series<C>> phi(std::move(target));
    return phi(series, [](const Series<C>& e, const C& c) { return e * c; });
}

} // namespace postlie

#endif
