#ifndef POSTLIE_LIE_HPP
#define POSTLIE_LIE_HPP

// Baker-Campbell-Hausdorff machinery over two abstract letters a and b:
// truncated word series, the Dynkin projection to bracket form, and
// evaluation of formal bracket expressions in any Lie algebra.

#include "postlie/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace postlie::lie {

/// Words are strings over the letters; the empty word is the unit.
using Word = std::string;

/// Truncated element of the free associative algebra on the letters.
class WordSeries
{
  public:
    explicit WordSeries(int order = 0) : order_(order) {}

    static WordSeries unit(int order);
    static WordSeries letter(char c, int order, const Rational& coeff = 1);

    int order() const { return order_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Rational& coeff);
    Rational coefficient(const Word& w) const;
    WordSeries homogeneous(int degree) const;

    WordSeries& operator+=(const WordSeries& other);
    WordSeries& operator-=(const WordSeries& other);
    WordSeries& operator*=(const Rational& scale);

    friend WordSeries operator+(WordSeries a, const WordSeries& b) { return a += b; }
    friend WordSeries operator-(WordSeries a, const WordSeries& b) { return a -= b; }
    friend WordSeries operator*(WordSeries a, const Rational& q) { return a *= q; }
    friend WordSeries operator*(const WordSeries& a, const WordSeries& b);
    friend bool operator==(const WordSeries& a, const WordSeries& b) { return a.terms_ == b.terms_; }

  private:
    int order_;
    std::map<Word, Rational> terms_;
};

WordSeries exp(const WordSeries& x);
WordSeries log(const WordSeries& x);

/// A formal Lie monomial: a letter, or the bracket of two monomials.
class Bracket
{
  public:
    static Bracket letter(char c);
    static Bracket of(const Bracket& left, const Bracket& right);
    /// [l1,[l2,[...,[l(n-1),ln]...]]]
    static Bracket right_normed(const Word& w);

    bool is_letter() const { return node_->children == nullptr; }
    char letter_value() const { return node_->letter; }
    const Bracket& left() const { return node_->children->first; }
    const Bracket& right() const { return node_->children->second; }
    int degree() const { return node_->degree; }
    /// "a", "[a,b]", "[a,[a,b]]", ...
    const std::string& str() const { return node_->text; }

    /// Expansion into the free associative algebra ([x,y] = xy - yx).
    WordSeries expand() const;

    friend bool operator==(const Bracket& a, const Bracket& b) { return a.str() == b.str(); }

  private:
    struct Node
    {
        char letter = 0;
        std::shared_ptr<const std::pair<Bracket, Bracket>> children;
        int degree = 1;
        std::string text;
    };
    explicit Bracket(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// A rational linear combination of Lie monomials, in insertion order.
class BracketExpr
{
  public:
    using Term = std::pair<Bracket, Rational>;

    void add(const Bracket& b, const Rational& coeff);
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    WordSeries expand(int order) const;

    friend bool operator==(const BracketExpr& a, const BracketExpr& b);

  private:
    std::vector<Term> terms_;
};

/// Dynkin-Specht-Wever projection of a homogeneous Lie element of degree n,
/// reduced to a fixed basis of right-normed brackets (chosen greedily in
/// lexicographic word order over `letters`). Throws std::domain_error if the
/// input is not a Lie element.
BracketExpr dynkin_project(const WordSeries& homogeneous, int degree, const std::string& letters = "ab");

/// Homogeneous components of log(exp(a) exp(b)) in bracket form.
class BchTable
{
  public:
    BchTable(int max_degree, std::vector<BracketExpr> components);

    int max_degree() const { return max_degree_; }
    /// Degree-n component, 1 <= n <= max_degree.
    const BracketExpr& component(int n) const;

  private:
    int max_degree_;
    std::vector<BracketExpr> components_;
};

/// Word-level BCH series log(exp(a) exp(b)) truncated at N.
WordSeries bch_words(int max_degree);
BchTable bch_table(int max_degree);
/// The table without its linear part a + b.
BchTable bch_tilde(int max_degree);

/// Evaluates a bracket expression with a and b bound to elements of a client
/// Lie algebra. E needs E + E and E * Rational.
template <class E, class BracketFn>
E evaluate(const BracketExpr& expr, const E& a, const E& b, const E& zero, BracketFn&& bracket)
{
    std::map<std::string, E> memo;
    std::function<const E&(const Bracket&)> eval = [&](const Bracket& m) -> const E& {
        if (auto it = memo.find(m.str()); it != memo.end())
            return it->second;
        E value = m.is_letter() ? (m.letter_value() == 'a' ? a : b) : bracket(eval(m.left()), eval(m.right()));
        return memo.emplace(m.str(), std::move(value)).first->second;
    };
    E sum = zero;
    for (const auto& [m, c] : expr.terms())
        sum = sum + eval(m) * c;
    return sum;
}

/// Evaluates bracket expressions on graded arguments, one output degree at a
/// time. Inputs are supplied per letter and degree (degree >= 1); results are
/// memoized, so an input component must not change once it has been read.
template <class E>
class GradedEvaluator
{
  public:
    using Inputs = std::function<E(char letter, int degree)>;
    using BracketFn = std::function<E(const E&, const E&)>;
    using ZeroTest = std::function<bool(const E&)>;

    GradedEvaluator(Inputs inputs, BracketFn bracket, E zero, ZeroTest is_zero)
        : inputs_(std::move(inputs)), bracket_(std::move(bracket)), zero_(std::move(zero)),
          is_zero_(std::move(is_zero))
    {}

    E evaluate(const BracketExpr& expr, int degree)
    {
        E sum = zero_;
        for (const auto& [m, c] : expr.terms()) {
            const E& value = evaluate(m, degree);
            if (!is_zero_(value))
                sum = sum + value * c;
        }
        return sum;
    }

    const E& evaluate(const Bracket& m, int degree)
    {
        auto key = std::make_pair(m.str(), degree);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        E value = zero_;
        if (m.is_letter()) {
            value = inputs_(m.letter_value(), degree);
        } else {
            const int dl = m.left().degree();
            const int dr = m.right().degree();
            for (int d = dl; d <= degree - dr; ++d) {
                const E& l = evaluate(m.left(), d);
                if (is_zero_(l))
                    continue;
                const E& r = evaluate(m.right(), degree - d);
                if (is_zero_(r))
                    continue;
                value = value + bracket_(l, r);
            }
        }
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

  private:
    Inputs inputs_;
    BracketFn bracket_;
    E zero_;
    ZeroTest is_zero_;
    std::map<std::pair<std::string, int>, E> memo_;
};

} // namespace postlie::lie

#endif
