#include "postlie/matrix_model.hpp"

#include "postlie/psi.hpp"
#include "postlie/rb_lift.hpp"

#include <algorithm>
#include <stdexcept>

namespace postlie {

RatMatrix::RatMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n))
{
    if (n < 1)
        throw std::invalid_argument("matrix dimension must be positive");
}

RatMatrix RatMatrix::identity(int n)
{
    RatMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::unit(int n, int row, int col)
{
    RatMatrix m(n);
    m(row, col) = 1;
    return m;
}

bool RatMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return postlie::is_zero(q); });
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other)
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += other.entries_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other)
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= other.entries_[i];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& scale)
{
    for (auto& e : entries_)
        e *= scale;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    const int n = a.n_;
    RatMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& x = a(i, k);
            if (postlie::is_zero(x))
                continue;
            for (int j = 0; j < n; ++j)
                out(i, j) += x * b(k, j);
        }
    return out;
}

std::string to_string(const RatMatrix& m)
{
    std::string out = "[";
    for (int i = 0; i < m.dim(); ++i) {
        out += i ? "; " : "";
        for (int j = 0; j < m.dim(); ++j)
            out += (j ? " " : "") + m(i, j).get_str();
    }
    return out + "]";
}

MatrixSeries::MatrixSeries(int dim, int order) : dim_(dim), coeffs_(static_cast<std::size_t>(order + 1), RatMatrix(dim))
{
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative");
}

MatrixSeries MatrixSeries::constant(const RatMatrix& m, int order)
{
    return monomial(m, 0, order);
}

MatrixSeries MatrixSeries::monomial(const RatMatrix& m, int k, int order)
{
    MatrixSeries s(m.dim(), order);
    if (k <= order)
        s.coefficient(k) = m;
    return s;
}

bool MatrixSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatMatrix& m) { return m.is_zero(); });
}

MatrixSeries MatrixSeries::derivative() const
{
    MatrixSeries out(dim_, std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k)
        out.coefficient(k - 1) = coefficient(k) * Rational(k);
    return out;
}

MatrixSeries& MatrixSeries::operator+=(const MatrixSeries& other)
{
    const int n = std::min(order(), other.order());
    coeffs_.resize(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        coefficient(k) += other.coefficient(k);
    return *this;
}

MatrixSeries& MatrixSeries::operator-=(const MatrixSeries& other)
{
    const int n = std::min(order(), other.order());
    coeffs_.resize(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        coefficient(k) -= other.coefficient(k);
    return *this;
}

MatrixSeries& MatrixSeries::operator*=(const Rational& scale)
{
    for (auto& c : coeffs_)
        c *= scale;
    return *this;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b)
{
    const int n = std::min(a.order(), b.order());
    MatrixSeries out(a.dim(), n);
    for (int i = 0; i <= n; ++i) {
        if (a.coefficient(i).is_zero())
            continue;
        for (int j = 0; i + j <= n; ++j)
            out.coefficient(i + j) += a.coefficient(i) * b.coefficient(j);
    }
    return out;
}

MatrixSeries exp(const MatrixSeries& x)
{
    if (!x.coefficient(0).is_zero())
        throw std::domain_error("exp requires a vanishing constant coefficient");
    const auto one = MatrixSeries::constant(RatMatrix::identity(x.dim()), x.order());
    MatrixSeries acc = one;
    for (int k = x.order(); k >= 1; --k)
        acc = one + (x * acc) * Rational(1, k);
    return acc;
}

MatrixSeries log1p(const MatrixSeries& y)
{
    if (!y.coefficient(0).is_zero())
        throw std::domain_error("log1p requires a vanishing constant coefficient");
    const int n = y.order();
    if (n == 0)
        return y;
    const auto one = MatrixSeries::constant(RatMatrix::identity(y.dim()), n);
    MatrixSeries acc = one * Rational(1, n) * Rational(n % 2 ? 1 : -1);
    for (int k = n - 1; k >= 1; --k)
        acc = one * Rational(k % 2 ? 1 : -1, k) + y * acc;
    return y * acc;
}

int first_difference(const MatrixSeries& a, const MatrixSeries& b)
{
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (a.coefficient(k) != b.coefficient(k))
            return k;
    return -1;
}

RotaBaxterModel::RotaBaxterModel(int dim, Rational weight) : dim_(dim), weight_(std::move(weight))
{
    if (dim < 1)
        throw std::invalid_argument("matrix dimension must be positive");
}

RatMatrix RotaBaxterModel::rb(const RatMatrix& a) const
{
    RatMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < i; ++j)
            out(i, j) = -weight_ * a(i, j);
    return out;
}

RatMatrix RotaBaxterModel::rb_tilde(const RatMatrix& a) const { return a * (-weight_) - rb(a); }

MatrixSeries RotaBaxterModel::rb(const MatrixSeries& a) const
{
    return a.map([this](const RatMatrix& m) { return rb(m); });
}

MatrixSeries RotaBaxterModel::rb_tilde(const MatrixSeries& a) const
{
    return a.map([this](const RatMatrix& m) { return rb_tilde(m); });
}

MatrixSeries RotaBaxterModel::graft(const MatrixSeries& a, const MatrixSeries& b) const
{
    const MatrixSeries ra = rb(a);
    return ra * b - b * ra;
}

MatrixSeries RotaBaxterModel::gl_action(const MatrixSeries& x, const MatrixSeries& y) const
{
    return graft(x, y) + x * y;
}

MatrixSeries RotaBaxterModel::gl_exp(const RatMatrix& x, int order) const
{
    // The t^k coefficient is x^{*k} / k!.
    const auto tx = MatrixSeries::monomial(x, 1, order);
    MatrixSeries power = MatrixSeries::constant(RatMatrix::identity(dim_), order);
    MatrixSeries sum = power;
    for (int k = 1; k <= order; ++k) {
        power = gl_action(tx, power) * Rational(1, k);
        sum += power;
    }
    return sum;
}

MatrixSeries RotaBaxterModel::evaluate(const Series<Rational>& lie_series, const MatrixSeries& u) const
{
    // Scaling the matrix product by the weight makes the commutator of the
    // scaled product the weighted bracket; forests are products of trees.
    const int order = u.order();
    const MatrixSeries unit = MatrixSeries::constant(RatMatrix::identity(dim_), order) * (1 / weight_);
    typename PostLieMorphism<MatrixSeries>::Target target{
        {u},
        [this](const MatrixSeries& a, const MatrixSeries& b) { return graft(a, b); },
        [this](const MatrixSeries& a, const MatrixSeries& b) { return (a * b) * weight_; },
        [](const MatrixSeries& a, const Rational& q) { return a * q; },
        [](const MatrixSeries& a, const MatrixSeries& b) { return a + b; },
        unit,
        MatrixSeries(dim_, order)};
    PostLieMorphism<MatrixSeries> phi(std::move(target));
    return phi(lie_series);
}

RatMatrix RotaBaxterModel::random_matrix(std::mt19937_64& rng) const
{
    std::uniform_int_distribution<int> entry(-2, 2);
    RatMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            m(i, j) = entry(rng);
    return m;
}

Report verify_rb_identity(const RotaBaxterModel& model, int samples, std::uint64_t seed)
{
    Report report;
    std::mt19937_64 rng(seed);
    const Rational& w = model.weight();
    int rb_ok = 0, mixed_ok = 0, tilde_ok = 0, order2_ok = 0;
    std::string witness;
    for (int s = 0; s < samples; ++s) {
        const RatMatrix x = model.random_matrix(rng);
        const RatMatrix y = model.random_matrix(rng);
        const RatMatrix rx = model.rb(x), ry = model.rb(y);
        const RatMatrix tx = model.rb_tilde(x), ty = model.rb_tilde(y);
        const bool rb = rx * ry == model.rb(rx * y + x * ry + w * (x * y));
        const bool tilde = tx * ty == model.rb_tilde(tx * y + x * ty + w * (x * y));
        const bool mixed = rx * ty == model.rb_tilde(rx * y) + model.rb(x * ty);
        const bool order2 = 2 * model.rb(x * rx) == rx * rx - model.rb(rx * x - x * rx + w * (x * x));
        rb_ok += rb;
        tilde_ok += tilde;
        mixed_ok += mixed;
        order2_ok += order2;
        if (witness.empty() && !(rb && tilde && mixed && order2))
            witness = "x = " + to_string(x) + ", y = " + to_string(y);
    }
    const auto tally = [&](int ok) { return std::to_string(ok) + "/" + std::to_string(samples) + " samples"; };
    report.add("Rota-Baxter identity for R", rb_ok == samples, tally(rb_ok));
    report.add("Rota-Baxter identity for R~", tilde_ok == samples, tally(tilde_ok));
    report.add("mixed identity R(x)R~(y) = R~(R(x)y) + R(xR~(y))", mixed_ok == samples, tally(mixed_ok));
    report.add("2R(aR(a)) = R(a)R(a) - R([R(a),a] + weight a^2)", order2_ok == samples, tally(order2_ok));
    if (!witness.empty())
        report.add("first failing sample", false, witness);
    return report;
}

namespace {

std::string mismatch_detail(int k)
{
    return k < 0 ? "" : "first difference at t^" + std::to_string(k);
}

MatrixSeries exp_times(const RatMatrix& m, int order)
{
    return exp(MatrixSeries::monomial(m, 1, order));
}

} // namespace

Report verify_et9(const RotaBaxterModel& model, const RatMatrix& x, int order)
{
    if (order < 1)
        throw std::invalid_argument("order must be at least 1");
    Report report;
    const MatrixSeries lhs = model.gl_exp(x, order);
    const MatrixSeries rhs = exp_times(-model.rb_tilde(x), order) * exp_times(-model.rb(x), order);
    const int k = first_difference(lhs, rhs);
    report.add("exp*(tx) = exp(-tR~(x)) exp(-tR(x)) to t^" + std::to_string(order), k < 0, mismatch_detail(k));
    return report;
}

Report verify_derivative_identity(const RotaBaxterModel& model, const RatMatrix& x, int n, int order)
{
    if (n < 0 || n > order)
        throw std::invalid_argument("derivative order must lie in 0..order");
    Report report;
    const MatrixSeries left = exp_times(-model.rb_tilde(x), order);
    const MatrixSeries right = exp_times(-model.rb(x), order);
    MatrixSeries lhs = left * right;
    for (int i = 0; i < n; ++i)
        lhs = lhs.derivative();
    const auto cx = MatrixSeries::constant(x, order);
    MatrixSeries power = MatrixSeries::constant(RatMatrix::identity(model.dim()), order);
    for (int i = 0; i < n; ++i)
        power = model.gl_action(cx, power);
    const MatrixSeries rhs = left * power * right;
    const int k = first_difference(lhs, rhs);
    report.add("d^" + std::to_string(n) + "/dt^" + std::to_string(n) + " identity to t^" + std::to_string(order - n),
               k < 0, mismatch_detail(k));
    return report;
}

Report verify_spitzer(const RotaBaxterModel& model, const RatMatrix& a, int order)
{
    if (order < 1)
        throw std::invalid_argument("order must be at least 1");
    Report report;
    const int n = model.dim();
    const Rational& w = model.weight();
    const auto one = MatrixSeries::constant(RatMatrix::identity(n), order);
    const auto ta = MatrixSeries::monomial(a, 1, order);

    // X = 1 + t R(aX); each pass fixes one more coefficient.
    MatrixSeries fixed = one;
    for (int i = 0; i < order; ++i)
        fixed = one + model.rb(ta * fixed);

    const Series<Rational> chi = specialize(bch_recursion(order), w).total();
    const MatrixSeries u = log1p(ta * w) * (1 / w);
    const MatrixSeries closed = exp(model.rb(model.evaluate(chi, u)));
    const int k = first_difference(fixed, closed);
    report.add("X = 1 + tR(aX) solved by exp(R(chi(log(1 + t weight a) / weight))) to t^" + std::to_string(order),
               k < 0, mismatch_detail(k));

    const MatrixSeries tb = ta;
    const MatrixSeries chi_b = model.evaluate(chi, tb);
    const MatrixSeries product = exp(model.rb(chi_b)) * exp(model.rb_tilde(chi_b));
    const int j = first_difference(product, exp(tb * (-w)));
    report.add("exp(R(chi(ta))) exp(R~(chi(ta))) = exp(-weight ta) to t^" + std::to_string(order), j < 0,
               mismatch_detail(j));
    return report;
}

Report verify_matrix_model(int dim, int order, std::uint64_t seed, int samples)
{
    Report report;
    const RotaBaxterModel model(dim);
    report.merge(verify_rb_identity(model, samples, seed));
    std::mt19937_64 rng(seed + 1);
    const RatMatrix x = model.random_matrix(rng);
    report.merge(verify_et9(model, x, order));
    for (int n = 0; n <= std::min(3, order); ++n)
        report.merge(verify_derivative_identity(model, x, n, order));
    const RatMatrix a = model.random_matrix(rng);
    report.merge(verify_spitzer(model, a, std::min(order, 6)));
    return report;
}

} // namespace postlie
