#include "superperm/acceptance.hpp"

#include <array>
#include <chrono>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "superperm/bounds.hpp"
#include "superperm/classic.hpp"
#include "superperm/cycle_census.hpp"
#include "superperm/pathfinder.hpp"
#include "superperm/toric_matrix.hpp"
#include "superperm/transition_graph.hpp"

// Every tolerance, expected value and runtime limit is pinned here. Where a
// previously published tabulation disagrees with the defining formulas
// (three bounds cells and two entries in each printed 4-vertex weight
// matrix), the computed value is asserted and the deviation itself is
// asserted and reported, never silently matched.

namespace spm::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string why;
    std::string note;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

const std::array<std::array<int, 6>, 6> kTrueH4 = {{
    {0, 2, 3, 3, 3, 3},
    {3, 0, 1, 3, 2, 2},
    {3, 3, 0, 2, 1, 3},
    {3, 1, 2, 0, 3, 3},
    {2, 2, 3, 1, 0, 3},
    {3, 3, 3, 3, 2, 0},
}};
const std::array<std::array<int, 6>, 6> kTrueK4 = {{
    {0, 2, 3, 3, 3, 3},
    {3, 0, 1, 2, 3, 2},
    {3, 3, 0, 1, 2, 3},
    {2, 2, 3, 0, 1, 3},
    {3, 1, 2, 3, 0, 3},
    {3, 3, 3, 2, 3, 0},
}};
// The same matrices as previously printed; each differs from the weight
// function in one swapped pair, which the printed 12-column construction
// itself contradicts.
const std::array<std::array<int, 6>, 6> kPublishedH4 = {{
    {0, 2, 3, 3, 3, 3},
    {3, 0, 1, 3, 2, 2},
    {3, 3, 0, 2, 1, 3},
    {3, 1, 3, 0, 2, 3},
    {2, 2, 3, 1, 0, 3},
    {3, 3, 3, 3, 2, 0},
}};
const std::array<std::array<int, 6>, 6> kPublishedK4 = {{
    {0, 2, 3, 3, 3, 3},
    {3, 0, 1, 2, 2, 3},
    {3, 3, 0, 1, 2, 3},
    {2, 2, 3, 0, 1, 3},
    {3, 1, 2, 3, 0, 3},
    {3, 3, 3, 2, 3, 0},
}};

const char* kWord4 = "123421342143";

Check criterion_bounds_table() {
    Check c;
    static constexpr std::array<long long, 8> I = {1, 2, 4, 9, 28, 125, 726, 5047};
    static constexpr std::array<long long, 8> C = {1, 2, 5, 11, 35, 148, 833, 5686};
    static constexpr std::array<long long, 8> B = {1, 2, 5, 13, 49, 217, 1261, 8881};
    static constexpr std::array<long long, 8> S = {1, 2, 5, 19, 97, 601, 4321, 35281};
    const auto rows = bounds_table(8);
    c.expect(rows.size() == 8, "table must have 8 rows");
    for (int n = 1; n <= 8 && c.ok; ++n) {
        const auto& r = rows[static_cast<std::size_t>(n - 1)];
        c.expect(r.I == I[static_cast<std::size_t>(n - 1)], "I(" + std::to_string(n) + ")");
        c.expect(r.C == C[static_cast<std::size_t>(n - 1)], "C(" + std::to_string(n) + ")");
        c.expect(r.B == B[static_cast<std::size_t>(n - 1)], "B(" + std::to_string(n) + ")");
        c.expect(r.S == S[static_cast<std::size_t>(n - 1)], "S(" + std::to_string(n) + ")");
    }
    // Exactly three cells deviate from the published tabulation and each must
    // be annotated in table output.
    const auto devs = published_table_deviations(8);
    c.expect(devs.size() == 3, "expected exactly 3 published-table deviations, got " +
                                   std::to_string(devs.size()));
    auto has = [&](int n, char col, long long computed, long long published) {
        for (const auto& d : devs)
            if (d.n == n && d.column == col && d.computed == computed &&
                d.published == published)
                return true;
        return false;
    };
    c.expect(has(2, 'B', 2, 3), "deviation B(2)=2 vs published 3");
    c.expect(has(7, 'C', 833, 823), "deviation C(7)=833 vs published 823");
    c.expect(has(8, 'S', 35281, 35280), "deviation S(8)=35281 vs published 35280");
    c.note = "annotated: B(2)=2 (pub. 3), C(7)=833 (pub. 823), S(8)=35281 (pub. 35280)";
    return c;
}

Check criterion_census() {
    Check c;
    for (int n = 1; n <= 9 && c.ok; ++n) {
        const CycleCensus formula = census_formula(n);
        const CycleCensus enumerated = census_enumerated(n);
        c.expect(formula == enumerated, "formula != enumeration at n=" + std::to_string(n));
        c.expect(formula.counts.at(1) == euler_phi(static_cast<std::uint64_t>(n)),
                 "counts[1] != phi(n) at n=" + std::to_string(n));
        c.expect(formula.weighted_total() == factorial_big(static_cast<unsigned>(n - 1)),
                 "sum d*counts[d] != (n-1)! at n=" + std::to_string(n));
        for (const auto& orbit : enumerate_one_cycles(n))
            c.expect(n % static_cast<int>(orbit.size()) == 0,
                     "orbit length not a divisor at n=" + std::to_string(n));
    }
    return c;
}

Check criterion_graph_golden() {
    Check c;
    const TransitionGraph h = build_graph(4, GraphKind::H);
    const TransitionGraph k = build_graph(4, GraphKind::K);
    int h_pub_diff = 0, k_pub_diff = 0;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const int hw = h.weight(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j));
            const int kw = k.weight(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j));
            c.expect(hw == kTrueH4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     "H_4(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            c.expect(kw == kTrueK4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     "K_4(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            if (hw != kPublishedH4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                ++h_pub_diff;
            if (kw != kPublishedK4[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                ++k_pub_diff;
        }
    }
    // The printed matrices carry one transposed pair each; anything else
    // would mean the weight function drifted.
    c.expect(h_pub_diff == 2, "H_4 must differ from the printed matrix in exactly 2 cells");
    c.expect(k_pub_diff == 2, "K_4 must differ from the printed matrix in exactly 2 cells");
    c.expect(h.weight(3, 2) == 2 && h.weight(3, 4) == 3, "H_4 corrected cells (4,3)/(4,5)");
    c.expect(k.weight(1, 4) == 3 && k.weight(1, 5) == 2, "K_4 corrected cells (2,5)/(2,6)");
    c.note = "printed matrices corrected at H(4,3)/(4,5) and K(2,5)/(2,6); "
             "verified against the 12-column construction";
    return c;
}

Check criterion_word_matrix() {
    Check c;
    const UniversalWord w = UniversalWord::parse(kWord4, 4);
    c.expect(verify_universal_word(w).ok, "word 123421342143 must verify for n=4");

    const ToricBinaryMatrix m4x12 = ToricBinaryMatrix::from_rows({
        "100001000100", "010010001000", "001000100001", "000100010010"});
    c.expect(word_to_matrix(w) == m4x12, "word_to_matrix(123421342143)");
    c.expect(matrix_to_word(m4x12) == w, "matrix_to_word round trip");

    const ToricBinaryMatrix m3x4 = ToricBinaryMatrix::from_rows({"1000", "0101", "0010"});
    const ToricBinaryMatrix m4x3 =
        ToricBinaryMatrix::from_rows({"100", "010", "001", "010"});
    const ToricBinaryMatrix m5x5 = ToricBinaryMatrix::from_rows(
        {"10001", "01010", "00100", "10001", "01010"});
    const std::array<std::pair<const ToricBinaryMatrix*, int>, 4> cases = {{
        {&m3x4, 3}, {&m4x3, 3}, {&m5x5, 3}, {&m4x12, 4}}};
    for (const auto& [m, n] : cases) {
        c.expect(is_superpermutation_matrix(*m, n).ok,
                 std::to_string(m->rows()) + "x" + std::to_string(m->cols()) + " example");
        c.expect(is_superpermutation_matrix(m->transposed(), n).ok,
                 std::to_string(m->cols()) + "x" + std::to_string(m->rows()) +
                     " transpose must pass");
    }
    return c;
}

Check criterion_exact_search() {
    Check c;
    SearchBudget small;
    small.node_limit = 100'000'000;
    small.time_limit_seconds = 9.0;

    const auto t3 = Clock::now();
    const SearchResult r3 = exact_min_word(3, small);
    const double s3 = std::chrono::duration<double>(Clock::now() - t3).count();
    c.expect(r3.length == 5 && r3.optimal, "m(3) = 5 optimal");
    c.expect(s3 < 10.0, "n=3 exact must finish under 10 s");

    const auto t4 = Clock::now();
    const SearchResult r4 = exact_min_word(4, small);
    const double s4 = std::chrono::duration<double>(Clock::now() - t4).count();
    c.expect(r4.length == 12 && r4.optimal, "m(4) = 12 optimal");
    c.expect(s4 < 10.0, "n=4 exact must finish under 10 s");

    SearchBudget anytime;
    anytime.node_limit = 400'000'000;
    anytime.time_limit_seconds = 50.0;
    const auto t5 = Clock::now();
    const SearchResult r5 = exact_min_word(5, anytime);
    const double s5 = std::chrono::duration<double>(Clock::now() - t5).count();
    c.expect(s5 < 60.0, "n=5 anytime must finish under 60 s");
    c.expect(r5.length <= 49, "n=5 anytime must return <= 49");
    c.expect(verify_universal_word(r5.word).ok, "n=5 word must verify");

    std::ostringstream note;
    note << "m(3)=5, m(4)=12 (both exhausted); n=5 best=" << r5.length
         << (r5.length <= 39 ? " (stretch <= 39 met" : " (")
         << (r5.optimal ? ", exhausted)" : ", anytime)");
    c.note = note.str();
    return c;
}

Check criterion_construction_bounds() {
    Check c;
    for (int n = 3; n <= 8 && c.ok; ++n) {
        const BigInt Bn = bound_B(n);
        const BigInt Cn = bound_C(n);
        const BigInt Sn = bound_S(n);
        const SearchResult g = greedy_cycle_path(n);
        c.expect(BigInt(g.length) <= Bn, "greedy length <= B at n=" + std::to_string(n));
        c.expect(BigInt(g.length) >= Cn, "greedy length >= C at n=" + std::to_string(n));
        c.expect(verify_universal_word(g.word).ok, "greedy verifies at n=" + std::to_string(n));
        const SearchResult nn = nearest_neighbor_path(n);
        c.expect(BigInt(nn.length) <= Sn, "nn length <= S at n=" + std::to_string(n));
        c.expect(verify_universal_word(nn.word).ok, "nn verifies at n=" + std::to_string(n));
    }
    return c;
}

Check criterion_brute_matrix_oracle() {
    Check c;
    const auto r = brute_min_columns(3, 8);
    c.expect(r.found && r.cols == 4, "m2(3) = 4");
    c.expect(r.witness && is_superpermutation_matrix(*r.witness, 3).ok,
             "witness must verify");
    SearchBudget b;
    const SearchResult exact3 = exact_min_word(3, b);
    c.expect(exact3.length == 5 && exact3.optimal, "m(3) = 5 for the gap");
    c.note = "m2(3) = 4 < m(3) = 5";
    return c;
}

Check criterion_asymptotics() {
    Check c;
    static constexpr std::array<int, 7> primes = {5, 7, 11, 13, 17, 19, 23};
    const BigRational lo(3, 2), hi(11, 5);
    std::vector<BigRational> u;
    for (int p : primes) {
        const BigRational up(bound_B(p), factorial_big(static_cast<unsigned>(p - 1)));
        c.expect(lo < up && up < hi, "B(p)/(p-1)! outside (1.5,2.2) at p=" + std::to_string(p));
        u.push_back(up);
    }
    // Strictly increasing from p=7 on; the p=5 value sits above the p=7 one
    // (49/24 > 1261/720), which is asserted so any change is loud.
    for (std::size_t i = 1; i + 1 < u.size(); ++i)
        c.expect(u[i] < u[i + 1], "B(p)/(p-1)! not increasing between primes " +
                                      std::to_string(primes[i]) + " and " +
                                      std::to_string(primes[i + 1]));
    c.expect(u[0] > u[1], "expected the small-prime hump u_5 > u_7");

    for (int n = 1; n <= 20 && c.ok; ++n)
        c.expect(BigRational(bound_B(n)) <= bound_Bprime(n),
                 "B <= B' fails at n=" + std::to_string(n));

    for (int n = 3; n <= 20 && c.ok; ++n) {
        const BigInt fact2 = factorial_big(static_cast<unsigned>(n - 2));
        const BigRational lratio(bound_L(n), fact2);
        const BigRational left(n - 1, n);
        BigRational right = 0;
        for (std::uint64_t d : divisors_of(static_cast<std::uint64_t>(n))) {
            BigInt num = euler_phi(static_cast<std::uint64_t>(n) / d);
            for (std::uint64_t i = 1; i < d; ++i) num *= n;
            num *= factorial_big(static_cast<unsigned>(d - 1));
            BigInt den = 1;
            for (std::uint64_t i = 0; i < d; ++i) den *= d;
            den *= fact2;
            right += BigRational(num, den);
        }
        c.expect(left <= lratio && lratio <= right,
                 "L(n)/(n-2)! squeeze fails at n=" + std::to_string(n));
    }
    c.note = "u_5 = 49/24 > u_7 = 1261/720; increasing across primes 7..23";
    return c;
}

Check criterion_classic() {
    Check c;
    static constexpr std::array<long long, 6> lengths = {1, 3, 9, 33, 153, 873};
    for (int n = 1; n <= 6 && c.ok; ++n) {
        const auto word = ashlock_tillotson(n);
        c.expect(static_cast<long long>(word.size()) ==
                     lengths[static_cast<std::size_t>(n - 1)],
                 "construction length at n=" + std::to_string(n));
        c.expect(is_superpermutation(word, n).ok,
                 "construction must verify at n=" + std::to_string(n));
    }
    const auto [lower, upper] = classic_bounds(6);
    c.expect(lower == 867 && upper == 873, "classic bounds at n=6 must be (867, 873)");
    c.note = "lengths 1,3,9,33,153,873; bounds(6)=(867,873) bracketing the known 872";
    return c;
}

Check criterion_e_set_identity() {
    Check c;
    for (int n : {4, 6}) {
        const auto cycles = enumerate_one_cycles(n);
        for (std::uint64_t d : divisors_of(static_cast<std::uint64_t>(n))) {
            std::set<std::uint64_t> union_of_cycles;
            for (const auto& orbit : cycles)
                if (d % orbit.size() == 0)
                    union_of_cycles.insert(orbit.begin(), orbit.end());
            std::set<std::uint64_t> e_set;
            for (const auto& cls : shift_periodic_classes(static_cast<int>(d), n))
                e_set.insert(canonical_rep_rank(cls.rep()));
            c.expect(e_set == union_of_cycles,
                     "E(d,n) != union of short cycles at n=" + std::to_string(n) +
                         ", d=" + std::to_string(d));
            c.expect(BigInt(static_cast<long long>(e_set.size())) ==
                         e_count(d, static_cast<std::uint64_t>(n)),
                     "|E(d,n)| formula at n=" + std::to_string(n) +
                         ", d=" + std::to_string(d));
        }
    }
    return c;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_seconds;  // 0 = untimed
    Check (*fn)();
};

const std::array<Criterion, 10> kCriteria = {{
    {1, "bounds table reproduction", 5.0, criterion_bounds_table},
    {2, "census oracle equivalence (n <= 9)", 60.0, criterion_census},
    {3, "graph golden tests (H_4, K_4)", 0.0, criterion_graph_golden},
    {4, "word/matrix verification", 0.0, criterion_word_matrix},
    {5, "exact search (m(3), m(4), n=5 anytime)", 0.0, criterion_exact_search},
    {6, "construction bounds (n = 3..8)", 600.0, criterion_construction_bounds},
    {7, "brute-force matrix oracle (m2(3))", 10.0, criterion_brute_matrix_oracle},
    {8, "asymptotic ratio checks", 10.0, criterion_asymptotics},
    {9, "classic superpermutations", 0.0, criterion_classic},
    {10, "shift-periodic set identity (n = 4, 6)", 5.0, criterion_e_set_identity},
}};

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& out) {
    std::vector<CriterionResult> results;
    for (const auto& criterion : kCriteria) {
        const auto t0 = Clock::now();
        Check check;
        try {
            check = criterion.fn();
        } catch (const std::exception& e) {
            check.ok = false;
            check.why = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (check.ok && criterion.time_limit_seconds > 0 &&
            seconds >= criterion.time_limit_seconds) {
            check.ok = false;
            check.why = "time limit " + std::to_string(criterion.time_limit_seconds) +
                        " s exceeded";
        }

        CriterionResult r;
        r.id = criterion.id;
        r.name = criterion.name;
        r.pass = check.ok;
        r.detail = check.ok ? check.note : check.why;
        r.seconds = seconds;
        results.push_back(r);

        out << (r.pass ? "ok   " : "FAIL ") << r.id << " - " << r.name;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << " [" << static_cast<int>(seconds * 1000) / 1000.0 << "s]\n";
        out.flush();
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace spm::acceptance
