#include "postlie/verify.hpp"

#include "postlie/format.hpp"
#include "postlie/matrix_model.hpp"
#include "postlie/psi.hpp"
#include "postlie/rb_lift.hpp"
#include "postlie/reference.hpp"

#include <random>
#include <stdexcept>

namespace postlie::verify {

namespace {

using RSeries = Series<Rational>;

std::string deg(int n) { return "(" + std::to_string(n) + ")"; }

template <Coefficient C>
void add_equal(Report& report, const std::string& name, const Series<C>& got, const Series<C>& want)
{
    const Series<C> diff = got - want;
    report.add(name, diff.is_zero(), diff.is_zero() ? "" : "difference: " + to_text(diff));
}

std::vector<Forest> forests_up_to(int n)
{
    std::vector<Forest> out;
    for (int d = 0; d <= n; ++d)
        for (auto& f : enumerate_forests(d))
            out.push_back(std::move(f));
    return out;
}

std::vector<Tree> trees_up_to(int n)
{
    std::vector<Tree> out;
    for (int d = 1; d <= n; ++d)
        for (auto& t : enumerate_trees(d))
            out.push_back(std::move(t));
    return out;
}

RSeries of(const Forest& f, int order) { return RSeries::of(f, order); }

// Counts failures of a family of identities and keeps the first witness.
struct Tally
{
    int total = 0;
    int failed = 0;
    std::string witness;

    void record(bool ok, const std::string& what)
    {
        ++total;
        if (!ok && failed++ == 0)
            witness = what;
    }

    void report_to(Report& report, const std::string& name) const
    {
        report.add(name, failed == 0 && total > 0,
                   std::to_string(total - failed) + "/" + std::to_string(total) + " cases" +
                       (witness.empty() ? "" : ", first failure: " + witness));
    }
};

Tensor<Rational> tensor_of(const RSeries& a, const RSeries& b, int order)
{
    Tensor<Rational> t{order, {}};
    for (const auto& [f, x] : a.terms())
        for (const auto& [g, y] : b.terms())
            t.add(f, g, x * y);
    return t;
}

void merge_into(Tensor<Rational>& into, const Tensor<Rational>& from)
{
    for (const auto& [k, c] : from.terms)
        into.add(k.first, k.second, c);
}

RSeries random_series(std::mt19937_64& rng, const std::vector<Forest>& basis, int order, int terms)
{
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    RSeries s(order);
    for (int i = 0; i < terms; ++i)
        s.add(basis[pick(rng)], coeff(rng));
    return s;
}

} // namespace

Report appendix_a(int order)
{
    Report report;
    const int n_max = std::min(order, 5);
    const MagnusExpansion chi = postlie_magnus(n_max);
    for (int n = 1; n <= n_max; ++n) {
        add_equal(report, "chi" + deg(n) + " matches the reference component", chi.component(n),
                  reference::magnus(n));
        report.add("chi" + deg(n) + " is primitive", is_primitive(chi.component(n)));
    }
    return report;
}

Report appendix_b(int order)
{
    Report report;
    const int n_max = std::min(order, 5);
    const MagnusExpansion theta = inverse_postlie_magnus(n_max);
    for (int n = 1; n <= n_max; ++n) {
        add_equal(report, "theta" + deg(n) + " matches the reference component", theta.component(n),
                  reference::inverse_magnus(n));
        report.add("theta" + deg(n) + " is primitive", is_primitive(theta.component(n)));
    }
    return report;
}

Report theorem(int order) { return verify_main_theorem(order); }

Report glf(int order)
{
    Report report;
    Tally tally;
    const auto basis = forests_up_to(order);
    for (const auto& f : basis)
        for (const auto& g : basis) {
            if (f.degree() + g.degree() > order)
                continue;
            tally.record(gl_product(of(f, order), of(g, order)) == gl_product_via_bplus(f, g, order),
                         serialize(f) + " * " + serialize(g));
        }
    tally.report_to(report, "X(1)(X(2) |> Y) = B-(X |> B+(Y)) for total degree <= " + std::to_string(order));
    return report;
}

Report hopf(int order)
{
    Report report;
    const auto forests = forests_up_to(order);
    const auto trees = trees_up_to(order);
    const RSeries one = RSeries::unit(order);

    Tally unit_left, unit_right, coproduct, counit_rule, product_rule, action, rev, antipode;
    for (const auto& x : forests) {
        const RSeries X = of(x, order);
        unit_left.record(graft(one, X) == X, serialize(x));
        unit_right.record(graft(X, one) == RSeries::of(Forest(), order, counit(X)), serialize(x));

        // X(1) * S(X(2)) = eps(X) 1
        RSeries sum(order);
        for_each_unshuffle(x, [&](const Forest& l, const Forest& r) {
            sum += gl_product(of(l, order), gl_antipode(of(r, order)));
        });
        if (x.degree() <= order - 1)
            antipode.record(sum == RSeries::of(Forest(), order, counit(X)), serialize(x));
    }

    for (const auto& x : forests)
        for (const auto& y : forests) {
            if (x.degree() + y.degree() > order)
                continue;
            const RSeries X = of(x, order), Y = of(y, order);
            const RSeries xy = graft(X, Y);
            const std::string pair = serialize(x) + " |> " + serialize(y);
            if (x.degree() + y.degree() <= order - 1) {
                Tensor<Rational> rhs{order, {}};
                for_each_unshuffle(x, [&](const Forest& x1, const Forest& x2) {
                    for_each_unshuffle(y, [&](const Forest& y1, const Forest& y2) {
                        merge_into(rhs, tensor_of(graft(of(x1, order), of(y1, order)),
                                                  graft(of(x2, order), of(y2, order)), order));
                    });
                });
                coproduct.record(unshuffle(xy) == rhs, pair);
                counit_rule.record(counit(xy) == counit(X) * counit(Y), pair);
            }
            // XY = X(1) * (S(X(2)) |> Y)
            RSeries r(order);
            for_each_unshuffle(x, [&](const Forest& x1, const Forest& x2) {
                r += gl_product(of(x1, order), graft(gl_antipode(of(x2, order)), Y));
            });
            rev.record(concat(X, Y) == r, serialize(x) + " . " + serialize(y));
        }

    for (const auto& x : forests)
        for (const auto& y : forests)
            for (const auto& z : forests) {
                if (x.degree() + y.degree() + z.degree() > order)
                    continue;
                const RSeries X = of(x, order), Y = of(y, order), Z = of(z, order);
                const std::string triple = serialize(x) + ", " + serialize(y) + ", " + serialize(z);
                // X |> YZ = (X(1) |> Y)(X(2) |> Z)
                RSeries split(order);
                for_each_unshuffle(x, [&](const Forest& x1, const Forest& x2) {
                    split += concat(graft(of(x1, order), Y), graft(of(x2, order), Z));
                });
                product_rule.record(graft(X, concat(Y, Z)) == split, triple);
                // X |> (Y |> Z) = (X * Y) |> Z
                action.record(graft(X, graft(Y, Z)) == graft(gl_product(X, Y), Z), triple);
            }

    Tally left_rule, eq1, eq2;
    for (const auto& x : trees)
        for (const auto& y : trees)
            for (const auto& z : trees) {
                if (x.degree() + y.degree() + z.degree() > order)
                    continue;
                const RSeries X = of(x, order), Y = of(y, order), Z = of(z, order);
                const std::string triple = serialize(x) + ", " + serialize(y) + ", " + serialize(z);
                eq1.record(graft(X, bracket(Y, Z)) == bracket(graft(X, Y), Z) + bracket(Y, graft(X, Z)), triple);
                const auto assoc = [](const RSeries& a, const RSeries& b, const RSeries& c) {
                    return graft(a, graft(b, c)) - graft(graft(a, b), c);
                };
                eq2.record(graft(bracket(X, Y), Z) == assoc(X, Y, Z) - assoc(Y, X, Z), triple);
            }
    // xX |> y = x |> (X |> y) - (x |> X) |> y for trees x, y and forests X.
    for (const auto& x : trees)
        for (const auto& big : forests)
            for (const auto& y : trees) {
                if (x.degree() + big.degree() + y.degree() > order)
                    continue;
                const RSeries X = of(x, order), B = of(big, order), Y = of(y, order);
                left_rule.record(graft(concat(X, B), Y) == graft(X, graft(B, Y)) - graft(graft(X, B), Y),
                                 serialize(x) + ", " + serialize(big) + ", " + serialize(y));
            }

    const std::string upto = " (total degree <= " + std::to_string(order) + ")";
    const std::string upto1 = " (total degree <= " + std::to_string(order - 1) + ")";
    unit_left.report_to(report, "1 |> X = X" + upto);
    unit_right.report_to(report, "X |> 1 = eps(X) 1" + upto);
    left_rule.report_to(report, "xX |> y = x |> (X |> y) - (x |> X) |> y" + upto);
    product_rule.report_to(report, "X |> YZ = (X(1) |> Y)(X(2) |> Z)" + upto);
    coproduct.report_to(report, "Delta(X |> Y) = (X(1) |> Y(1)) (x) (X(2) |> Y(2))" + upto1);
    counit_rule.report_to(report, "eps(X |> Y) = eps(X) eps(Y)" + upto1);
    action.report_to(report, "X |> (Y |> Z) = (X * Y) |> Z" + upto);
    antipode.report_to(report, "X(1) * S(X(2)) = eps(X) 1" + upto1);
    rev.report_to(report, "XY = X(1) * (S(X(2)) |> Y)" + upto);
    eq1.report_to(report, "x |> [y,z] = [x |> y, z] + [y, x |> z]" + upto);
    eq2.report_to(report, "[x,y] |> z = a(x,y,z) - a(y,x,z)" + upto);

    // Associativity of the Grossman-Larson product on random series.
    std::mt19937_64 rng(order);
    std::vector<Forest> nonempty(forests.begin() + 1, forests.end());
    Tally assoc;
    for (int i = 0; i < 8; ++i) {
        const RSeries a = random_series(rng, nonempty, order, 6);
        const RSeries b = random_series(rng, nonempty, order, 6);
        const RSeries c = random_series(rng, nonempty, order, 6);
        assoc.record(gl_product(gl_product(a, b), c) == gl_product(a, gl_product(b, c)),
                     "random sample " + std::to_string(i));
    }
    assoc.report_to(report, "(X * Y) * Z = X * (Y * Z) on random series up to degree " + std::to_string(order));

    const RSeries g = generator(order);
    report.add("exp(o) is group-like to order " + std::to_string(order), is_grouplike(exp_concat(g)));
    report.add("exp*(o) is group-like to order " + std::to_string(order), is_grouplike(exp_gl(g)));
    return report;
}

Report rb_model(int order, int dim, std::uint64_t seed) { return verify_matrix_model(dim, order, seed); }

Report weighted(int order)
{
    Report report;
    const int n_max = std::min(order, 4);
    const WeightedExpansion chi = bch_recursion(n_max);
    for (int n = 1; n <= n_max; ++n)
        add_equal(report, "chi_lambda" + deg(n) + " matches the reference component", chi.component(n),
                  reference::weighted(n));
    for (int n = 1; n <= n_max; ++n)
        add_equal(report, "chi_lambda" + deg(n) + " matches the reference component at weight 1",
                  specialize(chi.component(n), 1), specialize(reference::weighted(n), 1));
    report.add("standard and simplified recursions agree", bch_recursion(n_max, RecursionForm::simplified) == chi);
    report.add("no negative powers of the weight", min_weight_power(chi) >= 0);
    return report;
}

Report round_trip(int order)
{
    Report report;
    const RSeries g = generator(order);
    const MagnusExpansion chi = postlie_magnus_recursive(order);
    const MagnusExpansion chi_log = postlie_magnus_via_log(order);
    const MagnusExpansion theta = inverse_postlie_magnus_recursive(order);
    const MagnusExpansion theta_log = inverse_postlie_magnus_via_log(order);
    for (int n = 1; n <= order; ++n)
        add_equal(report, "chi" + deg(n) + " recursion = log route", chi.component(n), chi_log.component(n));
    for (int n = 1; n <= order; ++n)
        add_equal(report, "theta" + deg(n) + " recursion = log route", theta.component(n), theta_log.component(n));
    add_equal(report, "exp*(chi) = exp(o) to order " + std::to_string(order), exp_gl(chi.total()), exp_concat(g));
    add_equal(report, "exp(theta) = exp*(o) to order " + std::to_string(order), exp_concat(theta.total()), exp_gl(g));
    return report;
}

Report bch(int order)
{
    using namespace lie;
    Report report;
    const BchTable table = bch_table(order);
    const WordSeries words = bch_words(order);
    for (int n = 1; n <= std::min(order, 4); ++n)
        report.add("BCH degree " + std::to_string(n) + " matches the reference terms",
                   table.component(n) == reference::bch(n), to_text(table.component(n)));

    WordSeries total(order);
    for (int n = 1; n <= order; ++n) {
        const WordSeries expanded = table.component(n).expand(order);
        report.add("bracket form of degree " + std::to_string(n) + " re-expands to the word form",
                   expanded == words.homogeneous(n));
        total += expanded;
    }
    const WordSeries a = WordSeries::letter('a', order);
    const WordSeries b = WordSeries::letter('b', order);
    report.add("exp(a) exp(b) = exp(BCH) to order " + std::to_string(order), exp(total) == exp(a) * exp(b));

    const WordSeries zero(order);
    const auto commutator = [](const WordSeries& x, const WordSeries& y) { return x * y - y * x; };
    WordSeries with_zero(order), with_minus(order), zero_first(order);
    for (int n = 1; n <= order; ++n) {
        with_zero += evaluate(table.component(n), a, zero, zero, commutator);
        zero_first += evaluate(table.component(n), zero, b, zero, commutator);
        with_minus += evaluate(table.component(n), a, a * Rational(-1), zero, commutator);
    }
    report.add("BCH(a, 0) = a", with_zero == a);
    report.add("BCH(0, b) = b", zero_first == b);
    report.add("BCH(a, -a) = 0", with_minus.is_zero());
    return report;
}

Report structure(int order)
{
    Report report;
    for (int n = 0; n <= order; ++n) {
        const mpz_class catalan = Rational(binomial(2 * n, n) / (n + 1)).get_num();
        const auto count = enumerate_forests(n).size();
        report.add("forests of degree " + std::to_string(n) + " counted by Catalan(" + std::to_string(n) + ")",
                   mpz_class(static_cast<unsigned long>(count)) == catalan,
                   std::to_string(count) + " vs " + catalan.get_str());
    }
    const int psi_order = std::max(order - 1, 1);
    Tally inverse, morphism, triangular;
    for (const auto& t : trees_up_to(psi_order)) {
        const RSeries image = psi(t);
        triangular.record(image.coefficient(Forest(t)) == 1, serialize(t));
        inverse.record(psi_inverse(image) == of(Forest(t), t.degree()), serialize(t));
    }
    for (const auto& s : trees_up_to(psi_order))
        for (const auto& t : trees_up_to(psi_order)) {
            if (s.degree() + t.degree() > psi_order)
                continue;
            const int n = s.degree() + t.degree();
            morphism.record(psi(butcher_product(s, t)) == graft(psi(s).with_order(n), psi(t).with_order(n)),
                            serialize(s) + ", " + serialize(t));
        }
    const std::string upto = " through degree " + std::to_string(psi_order);
    triangular.report_to(report, "psi(t) has leading term t" + upto);
    inverse.report_to(report, "psi_inverse(psi(t)) = t" + upto);
    morphism.report_to(report, "psi(s o-> t) = psi(s) |> psi(t)" + upto);
    return report;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"appendixA", "appendixB", "theorem5", "glf",   "hopf",
                                                   "rbmodel",   "weighted",  "roundtrip", "bch", "structure"};
    return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options)
{
    const auto order = [&](int fallback) { return options.order > 0 ? options.order : fallback; };
    if (name == "appendixA")
        return appendix_a(order(5));
    if (name == "appendixB")
        return appendix_b(order(5));
    if (name == "theorem5")
        return theorem(order(7));
    if (name == "glf")
        return glf(order(6));
    if (name == "hopf")
        return hopf(order(6));
    if (name == "rbmodel")
        return rb_model(order(8), options.dim, options.seed);
    if (name == "weighted")
        return weighted(order(4));
    if (name == "roundtrip")
        return round_trip(order(7));
    if (name == "bch")
        return bch(order(6));
    if (name == "structure")
        return structure(order(6));
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace postlie::verify
