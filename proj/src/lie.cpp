#include "postlie/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace postlie::lie {

WordSeries WordSeries::unit(int order)
{
    WordSeries s(order);
    s.add(Word(), 1);
    return s;
}

WordSeries WordSeries::letter(char c, int order, const Rational& coeff)
{
    WordSeries s(order);
    s.add(Word(1, c), coeff);
    return s;
}

void WordSeries::add(const Word& w, const Rational& coeff)
{
    if (static_cast<int>(w.size()) > order_ || postlie::is_zero(coeff))
        return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (postlie::is_zero(it->second))
            terms_.erase(it);
    }
}

Rational WordSeries::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

WordSeries WordSeries::homogeneous(int degree) const
{
    WordSeries s(order_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == degree)
            s.terms_.emplace(w, c);
    return s;
}

WordSeries& WordSeries::operator+=(const WordSeries& other)
{
    order_ = std::max(order_, other.order_);
    for (const auto& [w, c] : other.terms_)
        add(w, c);
    return *this;
}

WordSeries& WordSeries::operator-=(const WordSeries& other)
{
    order_ = std::max(order_, other.order_);
    for (const auto& [w, c] : other.terms_)
        add(w, -c);
    return *this;
}

WordSeries& WordSeries::operator*=(const Rational& scale)
{
    if (postlie::is_zero(scale)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= scale;
    return *this;
}

WordSeries operator*(const WordSeries& a, const WordSeries& b)
{
    WordSeries out(std::min(a.order_, b.order_));
    for (const auto& [u, x] : a.terms_)
        for (const auto& [v, y] : b.terms_)
            if (static_cast<int>(u.size() + v.size()) <= out.order_)
                out.add(u + v, x * y);
    return out;
}

WordSeries exp(const WordSeries& x)
{
    if (!postlie::is_zero(x.coefficient(Word())))
        throw std::domain_error("exp requires zero constant term");
    const auto one = WordSeries::unit(x.order());
    WordSeries acc = one;
    for (int k = x.order(); k >= 1; --k)
        acc = one + (x * acc) * Rational(1, k);
    return acc;
}

WordSeries log(const WordSeries& x)
{
    if (x.coefficient(Word()) != 1)
        throw std::domain_error("log requires unit constant term");
    const int n = x.order();
    if (n == 0)
        return WordSeries(0);
    const auto one = WordSeries::unit(n);
    const WordSeries y = x - one;
    WordSeries acc = one * Rational(1, n);
    for (int k = n - 1; k >= 1; --k)
        acc = one * Rational(1, k) - y * acc;
    return y * acc;
}

Bracket Bracket::letter(char c)
{
    auto node = std::make_shared<Node>();
    node->letter = c;
    node->text = std::string(1, c);
    return Bracket(std::move(node));
}

Bracket Bracket::of(const Bracket& left, const Bracket& right)
{
    auto node = std::make_shared<Node>();
    node->children = std::make_shared<const std::pair<Bracket, Bracket>>(left, right);
    node->degree = left.degree() + right.degree();
    node->text = "[" + left.str() + "," + right.str() + "]";
    return Bracket(std::move(node));
}

Bracket Bracket::right_normed(const Word& w)
{
    if (w.empty())
        throw std::invalid_argument("empty word has no bracket");
    Bracket b = letter(w.back());
    for (auto it = w.rbegin() + 1; it != w.rend(); ++it)
        b = of(letter(*it), b);
    return b;
}

WordSeries Bracket::expand() const
{
    if (is_letter())
        return WordSeries::letter(letter_value(), degree());
    WordSeries l(degree());
    l += left().expand();
    WordSeries r(degree());
    r += right().expand();
    WordSeries lr = l * r;
    WordSeries rl = r * l;
    WordSeries out(degree());
    out += lr;
    out -= rl;
    return out;
}

void BracketExpr::add(const Bracket& b, const Rational& coeff)
{
    if (postlie::is_zero(coeff))
        return;
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first == b; });
    if (it == terms_.end()) {
        terms_.emplace_back(b, coeff);
        return;
    }
    it->second += coeff;
    if (postlie::is_zero(it->second))
        terms_.erase(it);
}

WordSeries BracketExpr::expand(int order) const
{
    WordSeries out(order);
    for (const auto& [b, c] : terms_)
        out += b.expand() * c;
    return out;
}

bool operator==(const BracketExpr& a, const BracketExpr& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (const auto& [m, c] : a.terms_) {
        auto it = std::find_if(b.terms_.begin(), b.terms_.end(), [&](const auto& t) { return t.first == m; });
        if (it == b.terms_.end() || it->second != c)
            return false;
    }
    return true;
}

namespace {

std::vector<Word> words_of_length(int n, const std::string& letters)
{
    std::vector<Word> out{Word()};
    for (int i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (char c : letters)
                next.push_back(w + c);
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Row-echelon basis of the degree-n Lie polynomials spanned by right-normed
// brackets. Each row carries its word expansion and the combination of
// chosen basis brackets that produces it.
struct RightNormedBasis
{
    std::vector<Bracket> brackets;
    struct Row
    {
        Word pivot;
        std::map<Word, Rational> words;
        std::map<std::size_t, Rational> combination;
    };
    std::vector<Row> rows;

    // Reduces v (with its combination) by all rows.
    void reduce(std::map<Word, Rational>& v, std::map<std::size_t, Rational>& combo) const
    {
        for (const auto& row : rows) {
            auto it = v.find(row.pivot);
            if (it == v.end())
                continue;
            const Rational factor = it->second;
            for (const auto& [w, c] : row.words) {
                Rational& slot = v[w];
                slot -= factor * c;
                if (postlie::is_zero(slot))
                    v.erase(w);
            }
            for (const auto& [i, c] : row.combination) {
                Rational& slot = combo[i];
                slot -= factor * c;
                if (postlie::is_zero(slot))
                    combo.erase(i);
            }
        }
    }
};

RightNormedBasis right_normed_basis(int n, const std::string& letters)
{
    RightNormedBasis basis;
    for (const auto& w : words_of_length(n, letters)) {
        // [x,x] = 0 and [y,x] = -[x,y] make other endings redundant.
        if (n >= 2 && !(w[w.size() - 2] < w.back()))
            continue;
        Bracket b = Bracket::right_normed(w);
        std::map<Word, Rational> v = b.expand().terms();
        std::map<std::size_t, Rational> combo{{basis.brackets.size(), Rational(1)}};
        basis.reduce(v, combo);
        if (v.empty())
            continue;
        const Word pivot = v.begin()->first;
        const Rational lead = v.begin()->second;
        for (auto& [word, c] : v)
            c /= lead;
        for (auto& [i, c] : combo)
            c /= lead;
        basis.brackets.push_back(b);
        basis.rows.push_back({pivot, std::move(v), std::move(combo)});
    }
    return basis;
}

} // namespace

BracketExpr dynkin_project(const WordSeries& homogeneous, int degree, const std::string& letters)
{
    BracketExpr raw;
    if (degree < 1)
        throw std::invalid_argument("degree must be positive");
    for (const auto& [w, c] : homogeneous.terms()) {
        if (static_cast<int>(w.size()) != degree)
            throw std::invalid_argument("input is not homogeneous of degree " + std::to_string(degree));
        raw.add(Bracket::right_normed(w), c / degree);
    }
    if (!(raw.expand(degree) == homogeneous.homogeneous(degree)))
        throw std::domain_error("input is not a Lie element");

    // Express the projection in the right-normed basis.
    const RightNormedBasis basis = right_normed_basis(degree, letters);
    std::map<Word, Rational> v = homogeneous.homogeneous(degree).terms();
    std::map<std::size_t, Rational> combo;
    basis.reduce(v, combo);
    if (!v.empty())
        throw std::domain_error("input is not a Lie element");
    BracketExpr out;
    for (const auto& [i, c] : combo)
        out.add(basis.brackets[i], -c);
    return out;
}

BchTable::BchTable(int max_degree, std::vector<BracketExpr> components)
    : max_degree_(max_degree), components_(std::move(components))
{
    if (static_cast<int>(components_.size()) != max_degree_)
        throw std::invalid_argument("BCH table needs one component per degree");
}

const BracketExpr& BchTable::component(int n) const
{
    if (n < 1 || n > max_degree_)
        throw std::out_of_range("BCH component " + std::to_string(n) + " not in table");
    return components_[static_cast<std::size_t>(n - 1)];
}

WordSeries bch_words(int max_degree)
{
    if (max_degree < 1)
        throw std::invalid_argument("BCH order must be at least 1");
    const WordSeries a = WordSeries::letter('a', max_degree);
    const WordSeries b = WordSeries::letter('b', max_degree);
    return log(exp(a) * exp(b));
}

BchTable bch_table(int max_degree)
{
    const WordSeries words = bch_words(max_degree);
    std::vector<BracketExpr> components;
    for (int n = 1; n <= max_degree; ++n)
        components.push_back(dynkin_project(words.homogeneous(n), n));
    return BchTable(max_degree, std::move(components));
}

BchTable bch_tilde(int max_degree)
{
    BchTable full = bch_table(max_degree);
    std::vector<BracketExpr> components;
    components.emplace_back();
    for (int n = 2; n <= max_degree; ++n)
        components.push_back(full.component(n));
    return BchTable(max_degree, std::move(components));
}

} // namespace postlie::lie
