#include "postlie/trees.hpp"

#include <algorithm>
#include <numeric>

namespace postlie {

namespace {

bool valid_label_name(const std::string& name)
{
    if (name.empty() || name.front() < 'a' || name.front() > 'z')
        return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
}

void check_forest(const std::vector<Vertex>& vs)
{
    if (vs.empty())
        return;
    if (vs.front().depth != 0)
        throw std::invalid_argument("pre-order sequence must start at depth 0");
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i].depth > vs[i - 1].depth + 1)
            throw std::invalid_argument("pre-order sequence skips a depth level");
}

void write_tree(std::string& out, const std::vector<Vertex>& vs, std::size_t& pos,
                const Alphabet& alphabet)
{
    const int depth = vs[pos].depth;
    out += alphabet.name(vs[pos].label);
    ++pos;
    if (pos < vs.size() && vs[pos].depth > depth) {
        out += '(';
        bool first = true;
        while (pos < vs.size() && vs[pos].depth > depth) {
            if (!first)
                out += ' ';
            first = false;
            write_tree(out, vs, pos, alphabet);
        }
        out += ')';
    }
}

class Parser
{
  public:
    Parser(const std::string& text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    std::vector<Vertex> forest()
    {
        std::vector<Vertex> out;
        if (text_ == "1")
            return out;
        tree(out, 0);
        while (pos_ < text_.size()) {
            expect(' ');
            tree(out, 0);
        }
        return out;
    }

    std::vector<Vertex> single_tree()
    {
        std::vector<Vertex> out;
        tree(out, 0);
        if (pos_ != text_.size())
            throw ParseError(pos_, "trailing input after tree");
        return out;
    }

  private:
    void tree(std::vector<Vertex>& out, int depth)
    {
        if (depth > 255)
            throw ParseError(pos_, "tree too deep");
        out.push_back(Vertex{static_cast<std::uint8_t>(depth), label()});
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            tree(out, depth + 1);
            while (pos_ < text_.size() && text_[pos_] == ' ') {
                ++pos_;
                tree(out, depth + 1);
            }
            expect(')');
        }
    }

    std::uint8_t label()
    {
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z')
            throw ParseError(pos_, "expected a label");
        while (pos_ < text_.size() &&
               ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || (text_[pos_] >= '0' && text_[pos_] <= '9')))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        auto index = alphabet_.find(name);
        if (!index)
            throw ParseError(start, "unknown label '" + name + "'");
        return *index;
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    const std::string& text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Alphabet::Alphabet() : labels_{"o"} {}

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (labels_.empty() || labels_.size() > 256)
        throw std::invalid_argument("alphabet must have between 1 and 256 labels");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!valid_label_name(labels_[i]))
            throw std::invalid_argument("invalid label '" + labels_[i] + "'");
        if (std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(i), labels_[i]) !=
            labels_.begin() + static_cast<std::ptrdiff_t>(i))
            throw std::invalid_argument("duplicate label '" + labels_[i] + "'");
    }
}

const Alphabet& Alphabet::standard()
{
    static const Alphabet instance;
    return instance;
}

std::optional<std::uint8_t> Alphabet::find(const std::string& name) const
{
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<std::uint8_t>(it - labels_.begin());
}

namespace detail {

std::vector<std::pair<std::size_t, std::size_t>> tree_ranges(const std::vector<Vertex>& vs)
{
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].depth == 0) {
            if (!ranges.empty())
                ranges.back().second = i;
            ranges.emplace_back(i, vs.size());
        }
    }
    return ranges;
}

void append_shifted(std::vector<Vertex>& out, const std::vector<Vertex>& from, std::size_t begin,
                    std::size_t end, int shift)
{
    for (std::size_t i = begin; i < end; ++i) {
        const int depth = from[i].depth + shift;
        if (depth > 255)
            throw std::length_error("tree depth exceeds 255");
        out.push_back(Vertex{static_cast<std::uint8_t>(depth), from[i].label});
    }
}

} // namespace detail

Forest::Forest(std::vector<Vertex> preorder) : vertices_(std::move(preorder)) { check_forest(vertices_); }

Forest::Forest(const Tree& tree) : vertices_(tree.vertices()) {}

Forest Forest::from_trees(const std::vector<Tree>& trees)
{
    std::vector<Vertex> vs;
    for (const auto& t : trees)
        vs.insert(vs.end(), t.vertices().begin(), t.vertices().end());
    return Forest(std::move(vs));
}

std::size_t Forest::tree_count() const
{
    return static_cast<std::size_t>(
        std::count_if(vertices_.begin(), vertices_.end(), [](const Vertex& v) { return v.depth == 0; }));
}

std::vector<Tree> Forest::trees() const
{
    std::vector<Tree> out;
    for (auto [b, e] : detail::tree_ranges(vertices_))
        out.emplace_back(std::vector<Vertex>(vertices_.begin() + static_cast<std::ptrdiff_t>(b),
                                             vertices_.begin() + static_cast<std::ptrdiff_t>(e)));
    return out;
}

int Forest::depth_sum() const
{
    return std::accumulate(vertices_.begin(), vertices_.end(), 0,
                           [](int acc, const Vertex& v) { return acc + v.depth; });
}

Forest operator*(const Forest& a, const Forest& b)
{
    std::vector<Vertex> vs = a.vertices_;
    vs.insert(vs.end(), b.vertices_.begin(), b.vertices_.end());
    return Forest(std::move(vs));
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0)
        return c;
    return a.vertices_ <=> b.vertices_;
}

Tree::Tree(std::vector<Vertex> preorder) : vertices_(std::move(preorder))
{
    if (vertices_.empty())
        throw std::invalid_argument("a tree has at least one vertex");
    check_forest(vertices_);
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i].depth == 0)
            throw std::invalid_argument("a tree has exactly one root");
}

Forest Tree::children() const { return b_minus(*this); }

std::strong_ordering operator<=>(const Tree& a, const Tree& b)
{
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0)
        return c;
    return a.vertices_ <=> b.vertices_;
}

Tree b_plus(const Forest& forest, std::uint8_t label)
{
    std::vector<Vertex> vs{Vertex{0, label}};
    detail::append_shifted(vs, forest.vertices(), 0, forest.vertices().size(), 1);
    return Tree(std::move(vs));
}

Forest b_minus(const Tree& tree)
{
    std::vector<Vertex> vs;
    vs.reserve(tree.vertices().size() - 1);
    detail::append_shifted(vs, tree.vertices(), 1, tree.vertices().size(), -1);
    return Forest(std::move(vs));
}

Tree butcher_product(const Tree& sigma, const Tree& tau) { return graft_at(sigma, tau, 0); }

Forest graft_at(const Tree& sigma, const Forest& target, int vertex)
{
    const auto& dst = target.vertices();
    if (vertex < 0 || static_cast<std::size_t>(vertex) >= dst.size())
        throw std::out_of_range("vertex index " + std::to_string(vertex) + " out of range");
    const auto at = static_cast<std::size_t>(vertex);
    std::vector<Vertex> vs(dst.begin(), dst.begin() + static_cast<std::ptrdiff_t>(at) + 1);
    detail::append_shifted(vs, sigma.vertices(), 0, sigma.vertices().size(), dst[at].depth + 1);
    vs.insert(vs.end(), dst.begin() + static_cast<std::ptrdiff_t>(at) + 1, dst.end());
    return Forest(std::move(vs));
}

Tree graft_at(const Tree& sigma, const Tree& tau, int vertex)
{
    return Tree(graft_at(sigma, Forest(tau), vertex).vertices());
}

std::vector<Forest> enumerate_forests(int degree, const Alphabet& alphabet)
{
    if (degree < 0)
        throw std::invalid_argument("degree must be non-negative");
    // by_degree[n] holds every forest of degree n.
    std::vector<std::vector<Forest>> by_degree(static_cast<std::size_t>(degree) + 1);
    by_degree[0].push_back(Forest());
    for (int n = 1; n <= degree; ++n) {
        auto& bucket = by_degree[static_cast<std::size_t>(n)];
        for (int first = 1; first <= n; ++first) {
            for (const auto& branches : by_degree[static_cast<std::size_t>(first - 1)])
                for (std::size_t label = 0; label < alphabet.size(); ++label) {
                    const Forest head(b_plus(branches, static_cast<std::uint8_t>(label)));
                    for (const auto& rest : by_degree[static_cast<std::size_t>(n - first)])
                        bucket.push_back(head * rest);
                }
        }
    }
    auto result = std::move(by_degree.back());
    std::vector<std::pair<std::string, Forest>> keyed;
    keyed.reserve(result.size());
    for (auto& f : result)
        keyed.emplace_back(serialize(f, alphabet), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    result.clear();
    for (auto& [key, f] : keyed)
        result.push_back(std::move(f));
    return result;
}

std::vector<Tree> enumerate_trees(int degree, const Alphabet& alphabet)
{
    std::vector<Tree> out;
    if (degree < 1)
        return out;
    for (const auto& f : enumerate_forests(degree, alphabet))
        if (f.tree_count() == 1)
            out.emplace_back(f.vertices());
    return out;
}

std::string serialize(const Tree& tree, const Alphabet& alphabet) { return serialize(Forest(tree), alphabet); }

std::string serialize(const Forest& forest, const Alphabet& alphabet)
{
    const auto& vs = forest.vertices();
    if (vs.empty())
        return "1";
    std::string out;
    std::size_t pos = 0;
    while (pos < vs.size()) {
        if (pos > 0)
            out += ' ';
        write_tree(out, vs, pos, alphabet);
    }
    return out;
}

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position)
{}

Tree parse_tree(const std::string& text, const Alphabet& alphabet)
{
    return Tree(Parser(text, alphabet).single_tree());
}

Forest parse_forest(const std::string& text, const Alphabet& alphabet)
{
    return Forest(Parser(text, alphabet).forest());
}

bool canonical_less(const Forest& a, const Forest& b, const Alphabet& alphabet)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return serialize(a, alphabet) < serialize(b, alphabet);
}

} // namespace postlie
