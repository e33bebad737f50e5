// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "f4rep/identity.hpp"
#include "f4rep/representation.hpp"
#include "f4rep/suites.hpp"

using namespace f4rep;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

struct Criterion
{
    int id;
    std::string title;
    std::optional<double> limit_seconds;
    std::function<Outcome()> run;
};

Outcome from_suite(const SuiteResult &r)
{
    std::size_t ok = 0;
    std::string failed;
    for (const auto &c : r.checks) {
        if (c.pass)
            ++ok;
        else
            failed += "; failed: " + c.name;
    }
    return {r.pass(), std::to_string(ok) + "/" + std::to_string(r.checks.size()) + " checks" + failed};
}

Outcome invariants()
{
    std::ostringstream d;
    bool pass = true;
    const auto n1 = non_annihilating_operators(eta1()).size();
    const auto n2 = non_annihilating_operators(eta2()).size();
    pass = pass && n1 == 0 && n2 == 0;
    d << "eta1 killed by " << 52 - n1 << "/52, eta2 by " << 52 - n2 << "/52";

    // The typeset expansion is the unsigned-tau assembly up to six logged typo terms.
    const Polynomial typo = eta2_printed() - eta2_tau_literal();
    const Polynomial gap = eta2_printed() - eta2();
    pass = pass && typo.size() == 6;
    d << "; expansion vs invariant: " << gap.size() << " logged terms (" << typo.size() << " typos)";

    int exact = 0, corrected = 0;
    for (const auto &c : verify_elimination_identities()) {
        if (c.holds)
            ++exact;
        else if (c.corrected_holds.value_or(false))
            ++corrected;
        else
            pass = false;
    }
    d << "; eliminations: " << exact << " exact, " << corrected << " after recorded correction";
    return {pass, d.str()};
}

Outcome zeta_module()
{
    bool pass = true;
    for (int r = 1; r <= 14; ++r)
        pass = pass && zeta(r) == zeta_printed(r);
    const int fail = zeta_equivariance_failures(zeta_family());
    const int literal = zeta_equivariance_failures(zeta_family_tau_literal());
    pass = pass && fail == 0;
    std::ostringstream d;
    d << "zeta_1..14 match typeset forms: " << (pass ? "yes" : "no") << "; equivariance failures " << fail
      << "/208 (unsigned tau reading: " << literal << ")";
    return {pass, d.str()};
}

Outcome singular()
{
    const std::size_t expected[] = {1, 1, 3, 5, 8};
    bool pass = true;
    std::ostringstream d;
    for (int k = 0; k <= 4; ++k) {
        const SingularReport r = singular_vectors(k);
        std::map<WeightVector, std::size_t> found, predicted;
        for (const auto &e : r.entries)
            found[e.weight] += e.dim;
        for (const auto &m : singular_exponents(k))
            ++predicted[singular_product_weight(m)];
        const bool ok = r.total() == expected[k] && r.predicted == expected[k] && found == predicted &&
                        r.all_positive_annihilate && r.products_span;
        pass = pass && ok;
        d << (k ? " " : "") << r.total();
    }
    d << " (expected 1 1 3 5 8)";
    return {pass, d.str()};
}

Outcome dimensions()
{
    bool pass = weyl_dim(0, 0) == 1 && weyl_dim(0, 1) == 26 && weyl_dim(1, 0) == 273;
    int mismatches = 0;
    for (unsigned long k = 0; k <= 5; ++k)
        for (unsigned long l = 0; l <= 5; ++l)
            if (weyl_dim(k, l) != closed_form_dim(k, l))
                ++mismatches;
    const Rational printed = printed_closed_form_dim(0, 0);
    pass = pass && mismatches == 0 && closed_form_constant() == Integer("12070840320000") && printed.get_den() != 1;
    return {pass, "closed form mismatches " + std::to_string(mismatches) + "/36; typeset constant gives d(0,0) = " +
                      printed.get_str()};
}

Outcome series_identity()
{
    const Identity24Result r = verify_identity_24(30);
    const Identity26Result f = verify_identity_26(30);
    const bool pass = r.pass && f.pass() && f.consistent();
    return {pass, std::string("order 30, (1-t)^24 form ") + (r.pass ? "holds" : "fails") + ", equivalent forms " +
                      (f.pass() && f.consistent() ? "agree" : "disagree")};
}

Outcome branching()
{
    int fail = 0;
    for (unsigned long k = 0; k <= 8; ++k) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), k + 25, 25);
        if (branching_sum(k) != b)
            ++fail;
    }
    return {fail == 0, std::to_string(9 - fail) + "/9 degrees match C(k+25,25)"};
}

Outcome harmonics()
{
    const auto failing = laplacian_commutation_failures(laplacian(), 3);
    const auto typeset = laplacian_commutation_failures(printed_laplacian(), 3);
    bool pass = failing.empty();
    std::ostringstream d;
    d << "invariant Laplacian commutes with " << 52 - failing.size() << "/52 on degree 3 (typeset Cartan block: "
      << 52 - typeset.size() << "/52); bounds";
    for (int k = 2; k <= 5; ++k) {
        const HarmonicBound b = harmonic_summand_bound(k);
        pass = pass && b.verified() == b.bound;
        d << " " << b.verified() << "/" << b.bound;
    }
    return {pass, d.str()};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "roots and cocycle", 5.0, [] { return from_suite(lattice_suite()); }},
        {2, "algebra", 120.0, [] { return from_suite(algebra_suite()); }},
        {3, "operator table", std::nullopt, [] { return from_suite(representation_suite()); }},
        {4, "invariants", std::nullopt, invariants},
        {5, "zeta module", std::nullopt, zeta_module},
        {6, "singular vectors, degree <= 4", 600.0, singular},
        {7, "dimension formula", std::nullopt, dimensions},
        {8, "series identity", 10.0, series_identity},
        {9, "branching", std::nullopt, branching},
        {10, "harmonics", std::nullopt, harmonics},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds && secs > *c.limit_seconds) {
            o.pass = false;
            o.detail += "; over time limit";
        }
        if (!o.pass)
            ++failures;
        std::printf("criterion %2d %-32s %s  %.2fs  %s\n", c.id, c.title.c_str(), o.pass ? "PASS" : "FAIL", secs,
                    o.detail.c_str());
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
