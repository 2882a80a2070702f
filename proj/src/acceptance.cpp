#include "ntlab/acceptance.hpp"

#include "ntlab/algfermat.hpp"
#include "ntlab/boardlines.hpp"
#include "ntlab/compositions.hpp"
#include "ntlab/friendlypaths.hpp"
#include "ntlab/normform.hpp"
#include "ntlab/ppe.hpp"
#include "ntlab/qmoments.hpp"
#include "ntlab/stern.hpp"
#include "ntlab/transfer.hpp"
#include "ntlab/zeros_table.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace ntlab {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) why << "; ";
            ok = false;
            why << what;
        }
    }
};

// ---------------------------------------------------------------- 1: ppe

CriterionResult crit_ppe() {
    CriterionResult r{1, "ppe-sequence"};
    Check c;
    auto seq40 = power_product_expansion(partition_series(41), 40);
    const long expect_even[] = {2,    4,    0,    14,   -4,   -8,    -16,  196,
                                -54,  -92,  -184, 144,  -628, -1040, -2160, 41102};
    for (int i = 0; i < 16; ++i) {
        std::size_t k = 2 * (i + 1);
        c.expect(seq40[k - 1] == expect_even[i],
                 "n_" + std::to_string(k) + " = " + seq40[k - 1].get_str());
    }
    for (std::size_t k = 1; k <= 39; k += 2)
        c.expect(seq40[k - 1] == 1, "odd n_" + std::to_string(k) + " != 1");

    auto seq400 = power_product_expansion(partition_series(401), 400);
    for (std::size_t k = 1; k <= 399; k += 2)
        c.expect(seq400[k - 1] == 1, "odd n_" + std::to_string(k) + " != 1 at K=400");
    for (const auto& e : sign_report(seq400))
        if (e.in_scope)
            c.expect(e.ok, "sign pattern fails at k=" + std::to_string(e.k) + " value " +
                               e.value.get_str());
    r.pass = c.ok;
    r.details = c.ok ? "16 even-index values, odd indices, mod-8 signs to k=400" : c.why.str();
    return r;
}

// ---------------------------------------------------------- 2: stern table

struct TableRow {
    int L;
    std::vector<long> minpoly;  // low-to-high
    const char* mu_printed;     // nullptr when the table gives a surd/rational
    GroupName g;
};

CriterionResult crit_stern_table() {
    CriterionResult r{2, "stern-table"};
    Check c;
    // minimal polynomials of 2 mu_L; the L=12 tail coefficients (beyond the
    // displayed prefix lambda^6 - 247 lambda^5 - 63659 lambda^4 + 797003 lambda^3)
    // are regression goldens
    const std::vector<TableRow> rows = {
        {0, {-2, 1}, nullptr, GroupName::Z1},
        {1, {-3, 1}, nullptr, GroupName::Z1},
        {2, {2, -5, 1}, nullptr, GroupName::Z2},
        {3, {-7, 1}, nullptr, GroupName::Z1},
        {4, {2, -11, 1}, nullptr, GroupName::Z2},
        {5, {-47, -14, 1}, nullptr, GroupName::Z2},
        {6, {4, -40, -161, -20, 1}, nullptr, GroupName::D4},
        {7, {-327, -485, -29, 1}, "20.50916706", GroupName::S3},
        {8, {4, -88, -1313, -44, 1}, nullptr, GroupName::D4},
        {9, {-3843, -3653, -65, 1}, "50.69978074", GroupName::S3},
        {10, {4, -200, -9601, -100, 1}, nullptr, GroupName::D4},
        {11, {107529, 83828, -24882, -156, 1}, "126.5114484", GroupName::S4},
        // TODO(goldens): replace the three low-order L=12 coefficients with the
        // computed values before freezing the suite
        {12, {0, 0, 0, 797003, -63659, -247, 1}, "200.4256707", GroupName::Z2wrS3},
    };

    const int digits = 30;
    for (const auto& row : rows) {
        MomentAsymptotics a = asymptotics(row.L, digits);
        c.expect(a.minpoly_available, "minpoly missing at L=" + std::to_string(row.L));
        std::vector<Int> want(row.minpoly.begin(), row.minpoly.end());
        c.expect(a.minpoly_2mu == IntPoly(want),
                 "minpoly mismatch at L=" + std::to_string(row.L) + ": got " +
                     a.minpoly_2mu.str());
        if (row.mu_printed) {
            double mu = a.mu.to_double();
            double printed = std::stod(row.mu_printed);
            c.expect(std::abs(mu - printed) < 1.5e-7 * std::max(1.0, std::abs(printed)),
                     "mu mismatch at L=" + std::to_string(row.L));
        }
        c.expect(a.galois.name == row.g,
                 "galois label at L=" + std::to_string(row.L) + ": got " +
                     group_name_str(a.galois.name));
        bool exact = row.minpoly.size() <= 5;  // degree <= 4 labels are exact
        if (exact)
            c.expect(a.galois.confidence == 1, "exact label without confidence 1");
        else
            c.expect(a.galois.confidence >= Rat(99, 100),
                     "statistical label below 0.99 at L=" + std::to_string(row.L));
    }
    // closed-form mu spot checks: L=2: (5+sqrt(17))/4, L=5: (7+4 sqrt 6)/2
    {
        MomentAsymptotics a2 = asymptotics(2, digits, false);
        c.expect(std::abs(a2.mu.to_double() - (5 + std::sqrt(17.0)) / 4) < 1e-12, "mu_2 surd");
        MomentAsymptotics a5 = asymptotics(5, digits, false);
        c.expect(std::abs(a5.mu.to_double() - (7 + 4 * std::sqrt(6.0)) / 2) < 1e-12, "mu_5 surd");
        MomentAsymptotics a8 = asymptotics(8, digits, false);
        double m8 = (22 + std::sqrt(1801.0) + std::sqrt(2277 + 44 * std::sqrt(1801.0))) / 4;
        c.expect(std::abs(a8.mu.to_double() - m8) < 1e-10, "mu_8 surd");
    }
    r.pass = c.ok;
    r.details = c.ok ? "13 minimal polynomials, printed mu digits, Galois labels" : c.why.str();
    return r;
}

// ------------------------------------------------------ 3: stern identities

CriterionResult crit_stern_identities() {
    CriterionResult r{3, "stern-identities"};
    Check c;
    for (int N = 0; N <= 20; ++N) {
        Int q1 = level_moment_direct(1, N);
        c.expect(q1 == pow_int(3, N), "Q1(" + std::to_string(N) + ") != 3^N");
    }
    // Q2 via the integer recurrence x_{N+1} = 5 x_N - 2 x_{N-1} implied by
    // the (5 +- sqrt17)/2 closed form
    Int x0 = 1, x1 = 5;
    c.expect(level_moment_direct(2, 0) == x0, "Q2(0)");
    c.expect(level_moment_direct(2, 1) == x1, "Q2(1)");
    for (int N = 2; N <= 20; ++N) {
        Int x2 = 5 * x1 - 2 * x0;
        c.expect(level_moment_direct(2, N) == x2, "Q2(" + std::to_string(N) + ")");
        x0 = x1;
        x1 = x2;
    }
    // matrix-vs-direct for L <= 8, N <= 14
    for (int L = 0; L <= 8; ++L) {
        IntMatrix m = moment_matrix(L);
        std::vector<Int> v(L + 1, Int(1));  // level-0 vector: all mixed moments are 1
        for (int N = 0; N <= 14; ++N) {
            if (N > 0) v = m.apply(v);
            auto direct = level_moment_vector(L, N);
            c.expect(direct == v,
                     "matrix vs direct at L=" + std::to_string(L) + " N=" + std::to_string(N));
        }
    }
    r.pass = c.ok;
    r.details = c.ok ? "Q1 = 3^N, Q2 sqrt17-form, matrix transfer = direct streaming" : c.why.str();
    return r;
}

// ----------------------------------------------------------- 4: transfer

CriterionResult crit_transfer() {
    CriterionResult r{4, "transfer-zero-index"};
    Check c;
    const int N = 60, digits = 60;
    auto zeros = riemann_zero_ordinates(6, digits);
    const int expected[] = {1, 2, 1, 3, 1, 3};
    const mpfr_prec_t wp = prec_bits(digits);
    for (int i = 0; i < 6; ++i) {
        HPComplex rho(HPReal(0.5, wp), zeros[i]);
        try {
            ZeroIndexRecord rec = t_of_rho(rho, N, digits);
            c.expect(rec.index == expected[i],
                     "t(rho_" + std::to_string(i + 1) + ") = " + std::to_string(rec.index));
            c.expect(rec.residual < HPReal(1e-4, wp),
                     "residual at rho_" + std::to_string(i + 1) + " = " + rec.residual.str(4));
        } catch (const AmbiguousIndex& e) {
            c.expect(false, std::string("ambiguous at rho_") + std::to_string(i + 1) + ": " +
                                e.what());
        }
    }
    SpectrumReport s1 = spectrum(HPComplex(HPReal(1.0, wp), HPReal(wp)), N, digits);
    HPReal l1_err = (s1.eigenvalues[0] - HPComplex(HPReal(1.0, wp), HPReal(wp))).abs();
    c.expect(l1_err < HPReal(1e-10, wp), "lambda_1(1) error " + l1_err.str(4));
    HPReal l2_err = (s1.eigenvalues[1].re - HPReal("-0.3036630028987326586", wp)).abs() +
                    s1.eigenvalues[1].im.abs();
    c.expect(l2_err < HPReal(1e-6, wp), "lambda_2(1) error " + l2_err.str(4));
    r.pass = c.ok;
    r.details = c.ok ? "t(rho) = (1,2,1,3,1,3), residuals < 1e-4; lambda_1(1), lambda_2(1) match"
                     : c.why.str();
    return r;
}

// ----------------------------------------------------------- 5: qmoments

CriterionResult crit_qmoments() {
    CriterionResult r{5, "qmoments-conjecture"};
    Check c;
    auto coeffs = lambda_coefficients(8);
    const std::pair<long, long> expected[] = {{1, 2},  {-1, 2},  {1, 1},    {-5, 2},  {25, 4},
                                              {-16, 1}, {43, 1},  {-971, 8}, {1417, 4}};
    for (int n = 0; n <= 8; ++n)
        c.expect(coeffs[n] == Rat(expected[n].first, expected[n].second),
                 "Q'_n(-1) mismatch at n=" + std::to_string(n));

    auto qs = q_polys(60);
    for (auto& q : qs)
        for (auto& coeff : q.numerator_poly())
            c.expect(coeff == 0 || is_power_of_two(coeff.get_den()),
                     "non-dyadic denominator in B_" + std::to_string(q.n));

    const int digits = 30;
    LaplaceResult lap = laplace_integral(22.0, 240, digits);
    QuestionMarkMoment mom = question_mark_moment(2, 24);
    double lap_lo = (lap.value - lap.quadrature_error - lap.tail_bound).to_double();
    double lap_hi = (lap.value + lap.quadrature_error + lap.tail_bound).to_double();
    double mom_lo = mom.lower.to_double(), mom_hi = mom.upper.to_double();
    c.expect(mom_hi - mom_lo < 1e-5, "quadrature interval too wide");
    bool overlap = lap_lo <= mom_hi && mom_lo <= lap_hi;
    c.expect(overlap, "intervals disjoint: laplace [" + std::to_string(lap_lo) + ", " +
                          std::to_string(lap_hi) + "] vs moment [" + std::to_string(mom_lo) +
                          ", " + std::to_string(mom_hi) + "]");
    double agreement = -std::log10(
        std::max(std::abs(lap.value.to_double() - (mom_lo + mom_hi) / 2), 1e-300));
    r.pass = c.ok;
    std::ostringstream d;
    if (c.ok)
        d << "coefficients exact, dyadic denominators to n=60, conjecture intervals overlap ("
          << std::fixed << agreement << " agreement digits)";
    else
        d << c.why.str();
    r.details = d.str();
    return r;
}

// -------------------------------------------------------------- 6: theta

CriterionResult crit_theta() {
    CriterionResult r{6, "theta-2adic"};
    Check c;
    ThetaTable table = theta_table((1u << 24) + 16, 16);
    TwoAdicLimit t0 = theta_limit(table, 0, 10, 12, 24);
    c.expect(t0.digits.value() == (1u << 3) + (1u << 8) + (1u << 9),
             "Theta(0) mod 2^10 = " + std::to_string(t0.digits.value()));
    for (long a = -8; a <= 8; ++a) {
        for (unsigned m = 2; m <= 16; ++m) {
            TwoAdicLimit hi = theta_limit(table, a, m, 12, 24);
            TwoAdicLimit lo = theta_limit(table, a, m - 1, 12, 24);
            c.expect(hi.digits.reduced(m - 1) == lo.digits,
                     "mod consistency fails at a=" + std::to_string(a) +
                         " m=" + std::to_string(m));
        }
    }
    r.pass = c.ok;
    r.details = c.ok ? "Theta(0) bits {3,8,9}, window [12,24] stabilized, mod-consistency"
                     : c.why.str();
    return r;
}

// -------------------------------------------------------------- 7: fermat

CriterionResult crit_fermat() {
    CriterionResult r{7, "fermat-congruences"};
    Check c;
    CongruenceReport m = fermat_test(CoefficientRule(rule_mersenne), 1, 10000);
    for (auto& [p, res] : m.exceptions)
        c.expect(p <= 2, "mersenne exception at p=" + std::to_string(p));

    CongruenceReport b = fermat_test(CoefficientRule(rule_central_binomial_minus_2), 2, 1000);
    for (auto& [p, res] : b.exceptions)
        c.expect(p <= 3, "central-binomial exception at p=" + std::to_string(p));

    AlgebraicBranch cubic = expand_branch(cubic_example_defining(), Rat(1), 512);
    c.expect(cubic.series.at(0) == 1 && cubic.series.at(1) == 0 && cubic.series.at(2) == 1,
             "cubic series head is not 1 + x^2");
    CongruenceReport t = fermat_test(cubic, 1, 500);
    for (auto& [p, res] : t.exceptions)
        c.expect(p <= 3, "cubic exception at p=" + std::to_string(p));
    r.pass = c.ok;
    r.details = c.ok ? "no exceptions beyond the stated small primes; branch verified to 512"
                     : c.why.str();
    return r;
}

// --------------------------------------------------------------- 8: paths

CriterionResult crit_paths() {
    CriterionResult r{8, "friendly-paths"};
    Check c;
    // full exhaustion: odd subsets of sizes 1, 3, 5 of the 4x4 grid
    std::vector<std::pair<long, long>> grid;
    for (long x = 0; x < 4; ++x)
        for (long y = 0; y < 4; ++y) grid.emplace_back(x, y);
    long checked = 0;
    for (int size : {1, 3, 5}) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<std::pair<long, long>> pts;
            for (int i : idx) pts.push_back(grid[i]);
            PointSet ps = PointSet::from(pts);
            if (!exists_friendly(ps).exists) {
                c.expect(false, "no friendly path for a size-" + std::to_string(size) + " set");
                break;
            }
            ++checked;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == 16 - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // random sweeps in the 8x8 grid
    for (int size : {3, 5, 7}) {
        auto failures = conjecture_sweep(size, 8, 1000, 4242 + size);
        c.expect(failures.empty(),
                 "sweep found counterexamples at size " + std::to_string(size));
    }
    // DP vs brute force on every odd subset of the 3x3 grid (5x5 windows)
    std::vector<std::pair<long, long>> g3;
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y < 3; ++y) g3.emplace_back(x, y);
    for (unsigned mask = 1; mask < 512; ++mask) {
        if (__builtin_popcount(mask) % 2 == 0) continue;
        std::vector<std::pair<long, long>> pts;
        for (int i = 0; i < 9; ++i)
            if (mask & (1u << i)) pts.push_back(g3[i]);
        PointSet ps = PointSet::from(pts);
        bool dp = exists_friendly(ps).exists;
        bool bf = exists_friendly_bruteforce(ps).exists;
        c.expect(dp == bf, "DP disagrees with brute force on mask " + std::to_string(mask));
    }
    r.pass = c.ok;
    std::ostringstream d;
    if (c.ok)
        d << checked << " exhaustive sets, 3000 random sweeps, 256 DP-vs-brute instances";
    else
        d << c.why.str();
    r.details = d.str();
    return r;
}

// --------------------------------------------------------------- 9: lines

CriterionResult crit_lines() {
    CriterionResult r{9, "board-lines"};
    // the checker properties are judged; the search outcomes on the open
    // conjecture are recorded only
    Check c;
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<long> den(1, 12), num(-40, 40);
    for (int i = 0; i < 10000; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        Rat a(num(rng), den(rng)), bq(num(rng), den(rng)), cq(num(rng), den(rng));
        a.canonicalize(); bq.canonicalize(); cq.canonicalize();
        if (a == 0 && bq == 0) continue;
        BoardLine l = BoardLine::from_rationals(a, bq, cq);
        auto cells = cells_crossed(l, n);
        c.expect(static_cast<int>(cells.size()) <= 2 * n - 1,
                 "crossing bound violated at n=" + std::to_string(n));
        if (i % 20 == 0)
            c.expect(cells == cells_crossed_reference(l, n), "kernel != reference");
    }
    SearchResult imp = search_cover(4, 2, 1);
    c.expect(imp.proved_impossible && imp.candidates_tried == 0,
             "k below the crossing bound must be rejected without search");

    std::ostringstream outcomes;
    for (int n = 3; n <= 6; ++n) {
        SearchResult res = search_cover(n, n - 1, 777, 30, 1500);
        if (res.cover) {
            CoverageReport rep = verify_cover(*res.cover, n);
            c.expect(rep.complete, "returned cover fails exact verification");
            outcomes << " (" << n << "," << n - 1 << "): cover found;";
        } else {
            outcomes << " (" << n << "," << n - 1 << "): none within budget;";
        }
    }
    r.pass = c.ok;
    r.details = (c.ok ? "crossing bound + exactness hold; search outcomes:" : c.why.str()) +
                outcomes.str();
    return r;
}

// ------------------------------------------------------------ 10: normform

CriterionResult crit_normform() {
    CriterionResult r{10, "normform-solutions"};
    Check c;
    NormForm form{FormKind::CubicField};
    std::vector<CandidateMap> known = {
        CandidateMap::identity(),
        CandidateMap::negate(),
        CandidateMap::constant_map(GaussRat{Rat(0), Rat(0)}),
        CandidateMap::constant_map(GaussRat{Rat(0), Rat(1)}),
        CandidateMap::constant_map(GaussRat{Rat(0), Rat(-1)}),
    };
    for (const auto& f : known) {
        Verdict v = verify_pair(form, f, f, 12);
        c.expect(v.ok, "known solution fails at B=12: " + f.str());
    }
    auto found = search_solutions(form, signed_scaling_values(5), 5, SearchMode::FEqualsH);
    c.expect(found.size() == 5, "search returned " + std::to_string(found.size()) + " maps");
    for (const auto& f : found) {
        bool matches_known = false;
        for (const auto& k : known) {
            bool same = true;
            for (long n = -5; n <= 5 && same; ++n)
                same = f.eval(Int(n)) == k.eval(Int(n));
            matches_known = matches_known || same;
        }
        c.expect(matches_known, "unexpected search solution " + f.str());
    }
    r.pass = c.ok;
    r.details = c.ok ? "five known solutions verify at B=12; search at B=5 finds exactly those"
                     : c.why.str();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int only_id) {
    using Fn = CriterionResult (*)();
    const Fn fns[] = {crit_ppe,    crit_stern_table, crit_stern_identities, crit_transfer,
                      crit_qmoments, crit_theta,      crit_fermat,           crit_paths,
                      crit_lines,  crit_normform};
    std::vector<CriterionResult> out;
    for (int i = 0; i < 10; ++i) {
        if (only_id != 0 && only_id != i + 1) continue;
        auto t0 = Clock::now();
        CriterionResult res;
        try {
            res = fns[i]();
        } catch (const std::exception& e) {
            res.id = i + 1;
            res.name = "criterion-" + std::to_string(i + 1);
            res.pass = false;
            res.details = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS]" : (r.informational ? "[INFO]" : "[FAIL]")) << " " << r.id << " "
           << r.name << " (" << std::fixed << r.seconds << "s) " << r.details << "\n";
    }
    return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass && !r.informational) return false;
    return true;
}

}  // namespace ntlab
