#ifndef POSTLIE_MATRIX_MODEL_HPP
#define POSTLIE_MATRIX_MODEL_HPP

// A concrete Rota-Baxter algebra: square rational matrices, and truncated
// power series in t with matrix coefficients. With P the projection onto the
// strictly lower triangular part, R = -weight * P is Rota-Baxter of the given
// weight.

#include "postlie/magnus.hpp"
#include "postlie/report.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace postlie {

class RatMatrix
{
  public:
    RatMatrix() = default;
    /// The n x n zero matrix.
    explicit RatMatrix(int n);

    static RatMatrix identity(int n);
    /// The matrix unit with a one at (row, col).
    static RatMatrix unit(int n, int row, int col);

    int dim() const { return n_; }
    Rational& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
    const Rational& operator()(int row, int col) const
    {
        return entries_[static_cast<std::size_t>(row * n_ + col)];
    }
    bool is_zero() const;

    RatMatrix& operator+=(const RatMatrix& other);
    RatMatrix& operator-=(const RatMatrix& other);
    RatMatrix& operator*=(const Rational& scale);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }
    friend RatMatrix operator*(RatMatrix a, const Rational& q) { return a *= q; }
    friend RatMatrix operator*(const Rational& q, RatMatrix a) { return a *= q; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  private:
    int n_ = 0;
    std::vector<Rational> entries_;
};

std::string to_string(const RatMatrix& m);

/// Sum of coefficient(k) t^k for k <= order.
class MatrixSeries
{
  public:
    MatrixSeries() = default;
    /// Zero series.
    MatrixSeries(int dim, int order);

    static MatrixSeries constant(const RatMatrix& m, int order);
    /// m t^k.
    static MatrixSeries monomial(const RatMatrix& m, int k, int order);

    int dim() const { return dim_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const RatMatrix& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    RatMatrix& coefficient(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    bool is_zero() const;

    /// Applies f to every coefficient.
    template <class F>
    MatrixSeries map(F&& f) const
    {
        MatrixSeries out = *this;
        for (auto& c : out.coeffs_)
            c = f(c);
        return out;
    }

    /// Formal d/dt; the result has order one less.
    MatrixSeries derivative() const;

    MatrixSeries& operator+=(const MatrixSeries& other);
    MatrixSeries& operator-=(const MatrixSeries& other);
    MatrixSeries& operator*=(const Rational& scale);

    friend MatrixSeries operator+(MatrixSeries a, const MatrixSeries& b) { return a += b; }
    friend MatrixSeries operator-(MatrixSeries a, const MatrixSeries& b) { return a -= b; }
    friend MatrixSeries operator-(MatrixSeries a) { return a *= Rational(-1); }
    friend MatrixSeries operator*(MatrixSeries a, const Rational& q) { return a *= q; }
    friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
    friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

  private:
    int dim_ = 0;
    std::vector<RatMatrix> coeffs_;
};

/// Throws std::domain_error unless the constant coefficient vanishes.
MatrixSeries exp(const MatrixSeries& x);
/// log(1 + y) for y with vanishing constant coefficient.
MatrixSeries log1p(const MatrixSeries& y);

/// Lowest k where the coefficients differ, or -1 if they agree up to the
/// smaller of the two orders.
int first_difference(const MatrixSeries& a, const MatrixSeries& b);

/// The Rota-Baxter algebra of n x n matrices with R = -weight * P.
class RotaBaxterModel
{
  public:
    explicit RotaBaxterModel(int dim = 4, Rational weight = 1);

    int dim() const { return dim_; }
    const Rational& weight() const { return weight_; }

    RatMatrix rb(const RatMatrix& a) const;
    /// R~ = -weight id - R.
    RatMatrix rb_tilde(const RatMatrix& a) const;
    MatrixSeries rb(const MatrixSeries& a) const;
    MatrixSeries rb_tilde(const MatrixSeries& a) const;

    /// a |> b = [R(a), b].
    MatrixSeries graft(const MatrixSeries& a, const MatrixSeries& b) const;
    /// x * Y = x |> Y + x Y, the Grossman-Larson action of x on a product.
    MatrixSeries gl_action(const MatrixSeries& x, const MatrixSeries& y) const;
    /// sum_k t^k x^{*k} / k! up to the given order.
    MatrixSeries gl_exp(const RatMatrix& x, int order) const;

    /// Evaluates a Lie series of the free post-Lie algebra at u, with the
    /// Lie bracket sent to weight * commutator and |> to [R(.), .].
    MatrixSeries evaluate(const Series<Rational>& lie_series, const MatrixSeries& u) const;

    /// Entries uniform in [-2, 2].
    RatMatrix random_matrix(std::mt19937_64& rng) const;

  private:
    int dim_;
    Rational weight_;
};

/// Rota-Baxter identity, the mixed identity, R~ Rota-Baxter, and
/// 2R(aR(a)) = R(a)R(a) - R([R(a),a] + weight a^2), on random samples.
Report verify_rb_identity(const RotaBaxterModel& model, int samples, std::uint64_t seed);

/// exp*(tx) = exp(-t R~(x)) exp(-t R(x)) up to t^order.
Report verify_et9(const RotaBaxterModel& model, const RatMatrix& x, int order);

/// d^n/dt^n of exp(-tR~x) exp(-tRx) equals exp(-tR~x) x^{*n} exp(-tRx).
Report verify_derivative_identity(const RotaBaxterModel& model, const RatMatrix& x, int n, int order);

/// The fixed point of X = 1 + t R(aX) against exp(R(chi(log(1 + ta)))), and
/// exp(R(chi(tb))) exp(R~(chi(tb))) = exp(-tb), up to t^order, with chi the
/// weighted BCH-recursion taken symbolically and evaluated in the model.
Report verify_spitzer(const RotaBaxterModel& model, const RatMatrix& a, int order);

/// All of the above, with random matrices from `seed`.
Report verify_matrix_model(int dim, int order, std::uint64_t seed, int samples = 100);

} // namespace postlie

#endif
