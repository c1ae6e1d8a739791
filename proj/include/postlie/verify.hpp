#ifndef POSTLIE_VERIFY_HPP
#define POSTLIE_VERIFY_HPP

// Named verification suites. Each returns a report with one entry per
// assertion; a suite passes when every entry does.

#include "postlie/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace postlie::verify {

/// chi^(n) against the reference components, n <= min(order, 5).
Report appendix_a(int order = 5);
/// theta^(n) against the reference components, n <= min(order, 5).
Report appendix_b(int order = 5);
/// chi_1 = chi and chi_1^{-1} = theta up to `order`.
Report theorem(int order = 7);
/// Both Grossman-Larson products agree on all basis pairs of total degree <= order.
Report glf(int order = 6);
/// Enveloping-algebra identities for |>, the Grossman-Larson product and its
/// antipode, and the post-Lie axioms.
Report hopf(int order = 6);
/// The weight-1 matrix model.
Report rb_model(int order = 8, int dim = 4, std::uint64_t seed = 1);

/// chi_lambda^(1..4) against the reference weighted components.
Report weighted(int order = 4);
/// Defining identities of chi and theta, and agreement of both routes.
Report round_trip(int order = 7);
/// BCH table against the reference terms and word-level identities.
Report bch(int order = 6);
/// Catalan counts of the forest basis and invertibility of Psi.
Report structure(int order = 6);

struct SuiteOptions
{
    int order = 0;  // 0 selects the suite default
    int dim = 4;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& name, const SuiteOptions& options);

} // namespace postlie::verify

#endif
