#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <vector>

#include "insdel/bounds.hpp"
#include "insdel/word.hpp"

using namespace insdel;

namespace {

// Independent feasibility check for the fixed-length bound, written as one
// cross-multiplied integer inequality: d/2 > t_del + t_ins*(n - t_del)/N.
bool lemma1_feasible_oracle(long long n, long long d, long long t_ins, long long t_del) {
    const long long big_n = n + t_ins - t_del;
    if (big_n < 1) return false;
    return Rational(d, 2) - t_del > Rational(t_ins * (n - t_del), big_n);
}

EditWitness witness(const char* w, const char* ref, std::set<long long> dels,
                    std::set<long long> ref_dels, int q = 2) {
    return EditWitness(Word::parse(w, q), Word::parse(ref, q), std::move(dels), std::move(ref_dels));
}

}  // namespace

TEST_CASE("fixed-length bound: worked values") {
    auto r = lemma1_bound(10, 12, 10, 0);
    REQUIRE(r.feasible);
    CHECK(r.list_bound == Rational(6));
    CHECK(r.list_bound_floor == 6);

    r = lemma1_bound(10, 12, 0, 5);
    REQUIRE(r.feasible);
    CHECK(r.list_bound == Rational(1));

    CHECK_FALSE(lemma1_bound(10, 12, 20, 0).feasible);
    CHECK_THROWS_AS(lemma1_bound(0, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_bound(10, 30, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_bound(10, 12, 0, 11), std::invalid_argument);
    // Received length would be n + t_ins - t_del = 0.
    CHECK_THROWS_AS(lemma1_bound(4, 8, 0, 4), std::invalid_argument);
}

TEST_CASE("fixed-length bound matches its oracle and gives exactly 1 without insertions") {
    for (long long n = 2; n <= 10; ++n)
        for (long long d = 2; d <= 2 * n; d += 2)
            for (long long ti = 0; ti <= 6; ++ti)
                for (long long td = 0; td <= std::min(n - 1, 5LL); ++td) {
                    if (n + ti - td < 1) continue;
                    const auto r = lemma1_bound(n, d, ti, td);
                    CHECK(r.feasible == lemma1_feasible_oracle(n, d, ti, td));
                    if (r.feasible) {
                        CHECK(r.list_bound >= 1);
                        if (ti == 0) CHECK(r.list_bound == Rational(1));
                    }
                }
}

TEST_CASE("ranged bound: worked values and edge distances") {
    auto r = johnson_bound(10, 12, 10, 0);
    REQUIRE(r.feasible);
    CHECK(r.list_bound == Rational(6));

    CHECK_FALSE(johnson_bound(10, 12, 0, 6).feasible);

    // d = 2n: the left side of the feasibility product vanishes, so every
    // insertion budget stays feasible while t_del < d/2.
    for (long long ti : {0LL, 5LL, 50LL, 500LL}) {
        const auto big = johnson_bound(5, 10, ti, 4);
        CHECK(big.feasible);
        CHECK(big.list_bound >= 1);
    }
    CHECK_FALSE(johnson_bound(5, 10, 1, 5).feasible);

    // Without insertions the formula itself is reported; at t_del = 0 it
    // collapses to exactly 1.
    const auto unique_r = johnson_bound(10, 12, 0, 0);
    REQUIRE(unique_r.feasible);
    CHECK(unique_r.list_bound == Rational(1));
    const auto del_only = johnson_bound(10, 12, 0, 3);
    REQUIRE(del_only.feasible);
    CHECK(del_only.list_bound == Rational(6 * 10, (6 - 3) * (10 - 3)));
}

TEST_CASE("ranged and fixed-length feasibility coincide at N = n + t_ins - t_del") {
    for (long long n = 2; n <= 9; ++n)
        for (long long d = 2; d <= 2 * n; d += 2)
            for (long long ti = 0; ti <= 7; ++ti)
                for (long long td = 0; td <= std::min(n - 1, 6LL); ++td) {
                    if (n + ti - td < 1) continue;
                    CHECK(johnson_bound(n, d, ti, td).feasible ==
                          lemma1_bound(n, d, ti, td).feasible);
                }
}

TEST_CASE("ranged bound is monotone in both budgets while feasible") {
    for (long long n = 3; n <= 8; ++n)
        for (long long d = 4; d <= 2 * n; d += 2)
            for (long long ti = 0; ti <= 5; ++ti)
                for (long long td = 0; td + 1 <= std::min(n - 1, 4LL); ++td) {
                    const auto base = johnson_bound(n, d, ti, td);
                    if (!base.feasible) continue;
                    const auto more_ins = johnson_bound(n, d, ti + 1, td);
                    if (more_ins.feasible) CHECK(more_ins.list_bound >= base.list_bound);
                    const auto more_del = johnson_bound(n, d, ti, td + 1);
                    if (more_del.feasible) CHECK(more_del.list_bound >= base.list_bound);
                }
}

TEST_CASE("ranged feasibility is the normalized tau_I curve") {
    for (long long n = 2; n <= 8; ++n)
        for (long long d = 2; d < 2 * n; d += 2)          // delta < 1
            for (long long td = 0; 2 * td < d; ++td)       // rho < 1
                for (long long ti = 0; ti <= 8; ++ti) {
                    const RadiusProfile profile{Rational(d, 2 * n), Rational(2 * td, d),
                                                Rational(ti, n)};
                    const auto curves = radius_curves(profile);
                    CHECK(johnson_bound(n, d, ti, td).feasible ==
                          (Rational(ti, n) < curves.tau_i));
                }
}

TEST_CASE("equal-radius specialization: threshold, worked bound, nd cap") {
    const auto eq = equal_radius_bound(10, 12);
    CHECK(eq.t_equal == doctest::Approx(10.0 - std::sqrt(40.0)).epsilon(1e-12));
    CHECK(eq.feasible_at(3));
    CHECK_FALSE(eq.feasible_at(4));
    CHECK(eq.bound_at(3) == Rational(26, 3));
    CHECK(eq.bound_at(0) == Rational(1));
    CHECK_THROWS_AS(eq.bound_at(4), std::domain_error);

    // d = 2n pushes the threshold all the way to n.
    CHECK(equal_radius_bound(5, 10).t_equal == doctest::Approx(5.0));

    // The cap |l| <= nd from the corollary holds over the feasible range.
    for (long long n = 2; n <= 12; ++n)
        for (long long d = 2; d <= 2 * n; d += 2) {
            const auto b = equal_radius_bound(n, d);
            for (long long t = 0; t <= n; ++t) {
                CHECK(b.feasible_at(t) == (2 * (n - t) * (n - t) > n * (2 * n - d)));
                if (b.feasible_at(t)) CHECK(b.bound_at(t) <= Rational(n * d));
            }
        }
}

TEST_CASE("radius curves: collapse at rho = 0 and fixed values") {
    const auto at_half = radius_curves({Rational(1, 2), Rational(0), Rational(0)});
    CHECK(at_half.tau_id == Rational(1));
    CHECK(at_half.tau_i == Rational(1));
    CHECK(at_half.tau_d == doctest::Approx(0.5).epsilon(1e-12));

    for (int num = 1; num < 10; ++num) {
        const Rational delta(num, 10);
        const auto c = radius_curves({delta, Rational(0), Rational(0)});
        CHECK(c.tau_id == delta + delta * delta / (1 - delta));
        CHECK(c.tau_i == delta / (1 - delta));
    }

    // tau_I crosses 1/sqrt(2) at delta = sqrt(2) - 1.
    const auto landmark = radius_curves({Rational(414213562, 1000000000), Rational(0), Rational(0)});
    CHECK(std::abs(rat_double(landmark.tau_i) - 0.70710678118654752) < 1e-6);

    CHECK_THROWS_AS(radius_curves({Rational(1), Rational(0), Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(radius_curves({Rational(1, 2), Rational(1), Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(radius_curves({Rational(1, 2), Rational(0), Rational(-1)}), std::invalid_argument);
}

TEST_CASE("distance threshold and summary bound") {
    CHECK(delta_id(Rational(1), Rational(0)) == Rational(1, 2));
    CHECK(delta_id(Rational(1, 5), Rational(1, 25)) == Rational(149, 725));
    CHECK(delta_id(Rational(0), Rational(0)) == Rational(0));

    const auto s = summary_bound(Rational(1), Rational(0), Rational(3, 5));
    REQUIRE(s.feasible);
    CHECK(s.list_bound == Rational(6));

    CHECK_FALSE(summary_bound(Rational(1), Rational(0), Rational(1, 2)).feasible);
    CHECK_FALSE(summary_bound(Rational(1), Rational(0), Rational(1, 3)).feasible);

    // Above the threshold the bound is positive and shrinks as delta grows.
    const auto near = summary_bound(Rational(1, 5), Rational(1, 25), Rational(1, 4));
    const auto far = summary_bound(Rational(1, 5), Rational(1, 25), Rational(1, 2));
    REQUIRE(near.feasible);
    REQUIRE(far.feasible);
    CHECK(far.list_bound < near.list_bound);
}

TEST_CASE("cardinality bound: worked value, N = n, violated premise") {
    const auto r = plotkin_bound(4, 6, 8);
    REQUIRE(r.feasible);
    CHECK(r.list_bound == Rational(3));
    CHECK(r.list_bound_floor == 3);

    const auto tight = plotkin_bound(4, 6, 4);
    REQUIRE(tight.feasible);
    CHECK(tight.list_bound == Rational(1));

    CHECK_FALSE(plotkin_bound(4, 6, 16).feasible);  // d/2n = 3/4 equals 1 - n/N: strict fails
    CHECK_FALSE(plotkin_bound(4, 0, 4).feasible);
    CHECK_THROWS_AS(plotkin_bound(4, 6, 3), std::invalid_argument);
}

TEST_CASE("canonical supersequence contains every word") {
    CHECK(canonical_supersequence(2, 3) == Word::parse("010101", 2));
    for (int q = 2; q <= 3; ++q)
        for (long long n = 1; n <= 5; ++n) {
            const Word super = canonical_supersequence(q, n);
            CHECK(static_cast<long long>(super.size()) == q * n);
            // Exhaustive: every word of length n over [q] is a subsequence.
            std::vector<int> digits(static_cast<std::size_t>(n), 0);
            while (true) {
                CHECK(is_subsequence(Word(digits, q), super));
                std::size_t i = 0;
                while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
                if (i == digits.size()) break;
            }
        }
}

TEST_CASE("u(i,j) on the counterexample code: the claimed relation fails") {
    const auto w1 = witness("000000", "01100", {4, 5, 6}, {2, 3});
    const auto w2 = witness("011100", "01100", {4}, {});
    const auto w3 = witness("100011", "01100", {4, 5, 6}, {1, 2});

    CHECK(wz_u_value(w1, w2) == 5);
    CHECK(wz_u_value(w1, w3) == 4);
    CHECK(wz_u_value(w2, w3) == 5);
    CHECK(wz_u_value(w2, w1) == 5);  // symmetric

    CHECK(levenshtein_distance(w1.word, w2.word) == 6);
    CHECK(levenshtein_distance(w1.word, w3.word) == 6);
    CHECK(levenshtein_distance(w2.word, w3.word) == 6);

    const auto w4 = witness("000111222", "000", {4, 5, 6, 7, 8, 9}, {}, 3);
    const auto w5 = witness("222111000", "000", {1, 2, 3, 4, 5, 6}, {}, 3);
    CHECK(wz_u_value(w4, w5) == 6);
    CHECK(levenshtein_distance(w4.word, w5.word) == 12);
}

TEST_CASE("edit witnesses are validated") {
    CHECK_THROWS_AS(witness("000000", "01100", {1}, {}), std::invalid_argument);
    CHECK_THROWS_AS(witness("000000", "01100", {7}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(witness("000000", "01100", {4, 5, 6}, {9}), std::invalid_argument);
    const auto w1 = witness("000000", "01100", {4, 5, 6}, {2, 3});
    const auto other = witness("11100", "11100", {}, {});
    CHECK_THROWS_AS(wz_u_value(w1, other), std::invalid_argument);
}

TEST_CASE("curve CSV: header, determinism, landmark row, monotone columns") {
    for (int figure = 1; figure <= 3; ++figure) {
        std::ostringstream a, b;
        write_curve_csv(a, figure, Rational(1, 20));
        write_curve_csv(b, figure, Rational(1, 20));
        CHECK(a.str() == b.str());
        CHECK(a.str().rfind("delta,rho_or_tau_ins,tau_ID,tau_I,tau_D\n", 0) == 0);
    }

    std::ostringstream fig2;
    write_curve_csv(fig2, 2, Rational(1, 20));
    CHECK(fig2.str().find("\n0.414213562,") != std::string::npos);

    // Parse figure 1 and check tau_ID and tau_I never grow with rho at fixed
    // delta, and figure 3's tau_D never grows with tau_ins.
    for (int figure : {1, 3}) {
        std::ostringstream out;
        write_curve_csv(out, figure, Rational(1, 20));
        std::istringstream in(out.str());
        std::string line;
        std::getline(in, line);  // header
        struct Row {
            double delta, second, tau_id, tau_i, tau_d;
        };
        std::vector<Row> rows;
        while (std::getline(in, line)) {
            Row r{};
            REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r.delta, &r.second,
                                &r.tau_id, &r.tau_i, &r.tau_d) == 5);
            rows.push_back(r);
        }
        REQUIRE(rows.size() > 10);
        for (const auto& x : rows)
            for (const auto& y : rows) {
                if (x.delta != y.delta || x.second >= y.second) continue;
                if (figure == 1) {
                    CHECK(y.tau_id <= x.tau_id + 1e-12);
                    CHECK(y.tau_i <= x.tau_i + 1e-12);
                } else {
                    CHECK(y.tau_d <= x.tau_d + 1e-12);
                }
            }
    }

    CHECK_THROWS_AS(write_curve_csv(std::cout, 4), std::invalid_argument);
}
