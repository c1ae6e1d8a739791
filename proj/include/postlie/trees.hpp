#ifndef POSTLIE_TREES_HPP
#define POSTLIE_TREES_HPP

// Planar decorated rooted trees and forests.
//
// A forest is stored as its depth-first pre-order vertex sequence: each vertex
// carries its depth (roots at depth 0) and its decoration index. Children of a
// vertex follow it left to right, so the sequence determines the planar forest
// uniquely and concatenation of forests is concatenation of sequences. Vertex
// indices used by graft_at refer to positions in this sequence.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace postlie {

/// Finite decoration alphabet; labels are ordered by declaration.
class Alphabet
{
  public:
    /// The undecorated case: a single label "o".
    Alphabet();
    explicit Alphabet(std::vector<std::string> labels);

    static const Alphabet& standard();

    std::size_t size() const { return labels_.size(); }
    const std::string& name(std::uint8_t label) const { return labels_.at(label); }
    std::optional<std::uint8_t> find(const std::string& name) const;

  private:
    std::vector<std::string> labels_;
};

struct Vertex
{
    std::uint8_t depth = 0;
    std::uint8_t label = 0;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

class Tree;

class Forest
{
  public:
    /// The empty (unit) forest.
    Forest() = default;
    explicit Forest(std::vector<Vertex> preorder);
    Forest(const Tree& tree);

    static Forest from_trees(const std::vector<Tree>& trees);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int degree() const { return static_cast<int>(vertices_.size()); }
    bool empty() const { return vertices_.empty(); }
    std::size_t tree_count() const;
    std::vector<Tree> trees() const;
    /// Sum of vertex depths; grows strictly when a branch is grafted deeper.
    int depth_sum() const;

    friend Forest operator*(const Forest& a, const Forest& b);

    /// Internal storage order: degree first, then the vertex sequence.
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
    friend bool operator==(const Forest&, const Forest&) = default;

  private:
    std::vector<Vertex> vertices_;
};

class Tree
{
  public:
    explicit Tree(std::vector<Vertex> preorder);

    static Tree leaf(std::uint8_t label = 0) { return Tree({Vertex{0, label}}); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    int degree() const { return static_cast<int>(vertices_.size()); }
    std::uint8_t label() const { return vertices_.front().label; }
    /// The branches of the root, left to right.
    Forest children() const;

    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
    friend bool operator==(const Tree&, const Tree&) = default;

  private:
    std::vector<Vertex> vertices_;
};

Tree b_plus(const Forest& forest, std::uint8_t label = 0);
Forest b_minus(const Tree& tree);

/// Attaches sigma as the new leftmost branch of tau's root.
Tree butcher_product(const Tree& sigma, const Tree& tau);

/// Attaches sigma as the leftmost branch of the vertex with pre-order index
/// `vertex` in tau. Throws std::out_of_range for an invalid index.
Tree graft_at(const Tree& sigma, const Tree& tau, int vertex);
Forest graft_at(const Tree& sigma, const Forest& target, int vertex);

/// Calls emit(result) once for every way of grafting the trees of `source`
/// onto vertices of `target` (each tree independently, at any vertex of the
/// original target). Trees landing on the same vertex keep their order from
/// `source` and all sit to the left of the existing branches. An empty
/// source yields the target itself; a non-empty source and an empty target
/// yield nothing.
template <class Emit>
void for_each_graft(const Forest& source, const Forest& target, Emit&& emit);

/// Calls emit(left, right) for each of the 2^k ways of splitting the k trees
/// of `forest` into two order-preserving subsequences.
template <class Emit>
void for_each_unshuffle(const Forest& forest, Emit&& emit);

/// All forests of the given degree, in canonical order, without repetition.
std::vector<Forest> enumerate_forests(int degree, const Alphabet& alphabet = Alphabet::standard());
std::vector<Tree> enumerate_trees(int degree, const Alphabet& alphabet = Alphabet::standard());

std::string serialize(const Tree& tree, const Alphabet& alphabet = Alphabet::standard());
std::string serialize(const Forest& forest, const Alphabet& alphabet = Alphabet::standard());

class ParseError : public std::runtime_error
{
  public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

Tree parse_tree(const std::string& text, const Alphabet& alphabet = Alphabet::standard());
Forest parse_forest(const std::string& text, const Alphabet& alphabet = Alphabet::standard());

/// Canonical basis order: by degree, then by serialized string.
bool canonical_less(const Forest& a, const Forest& b, const Alphabet& alphabet = Alphabet::standard());

namespace detail {

/// [begin, end) ranges of the trees of a pre-order sequence.
std::vector<std::pair<std::size_t, std::size_t>> tree_ranges(const std::vector<Vertex>& vertices);

void append_shifted(std::vector<Vertex>& out, const std::vector<Vertex>& from, std::size_t begin,
                    std::size_t end, int shift);

} // namespace detail

template <class Emit>
void for_each_graft(const Forest& source, const Forest& target, Emit&& emit)
{
    if (source.empty()) {
        emit(target);
        return;
    }
    const auto& src = source.vertices();
    const auto& dst = target.vertices();
    if (dst.empty())
        return;
    const auto ranges = detail::tree_ranges(src);
    const std::size_t k = ranges.size();
    const std::size_t m = dst.size();
    std::vector<std::size_t> site(k, 0);
    std::vector<Vertex> out;
    out.reserve(src.size() + dst.size());
    while (true) {
        out.clear();
        for (std::size_t v = 0; v < m; ++v) {
            out.push_back(dst[v]);
            for (std::size_t i = 0; i < k; ++i)
                if (site[i] == v)
                    detail::append_shifted(out, src, ranges[i].first, ranges[i].second,
                                           dst[v].depth + 1);
        }
        emit(Forest(out));
        std::size_t i = 0;
        while (i < k && ++site[i] == m)
            site[i++] = 0;
        if (i == k)
            break;
    }
}

template <class Emit>
void for_each_unshuffle(const Forest& forest, Emit&& emit)
{
    const auto& vs = forest.vertices();
    const auto ranges = detail::tree_ranges(vs);
    const std::size_t k = ranges.size();
    if (k >= 8 * sizeof(unsigned long))
        throw std::length_error("forest has too many trees to unshuffle");
    std::vector<Vertex> left, right;
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        left.clear();
        right.clear();
        for (std::size_t i = 0; i < k; ++i) {
            auto& side = (mask >> i) & 1UL ? left : right;
            side.insert(side.end(), vs.begin() + static_cast<std::ptrdiff_t>(ranges[i].first),
                        vs.begin() + static_cast<std::ptrdiff_t>(ranges[i].second));
        }
        emit(Forest(left), Forest(right));
    }
}

} // namespace postlie

#endif
