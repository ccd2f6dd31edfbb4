#include "insdel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace insdel {

namespace {

void check_code_params(long long n, long long d) {
    if (n < 1) throw std::invalid_argument("code length must be >= 1");
    if (d < 0 || d > 2 * n) throw std::invalid_argument("minimum distance must lie in [0, 2n]");
}

void check_budgets(long long n, long long t_ins, long long t_del) {
    if (t_ins < 0) throw std::invalid_argument("insertion budget must be >= 0");
    if (t_del < 0 || t_del > n) throw std::invalid_argument("deletion budget must lie in [0, n]");
}

}  // namespace

BoundResult lemma1_bound(long long n, long long d, long long t_ins, long long t_del) {
    check_code_params(n, d);
    check_budgets(n, t_ins, t_del);
    const long long big_n = n + t_ins - t_del;
    if (big_n < 1) throw std::invalid_argument("received length n + t_ins - t_del must be >= 1");

    const Rational half_d(d, 2);
    // d/2 > t_del + t_ins*(n - t_del)/N
    if (!(half_d > Rational(t_del) + Rational(t_ins * (n - t_del), big_n))) return BoundResult::infeasible();

    const Rational num = Rational(big_n) * (half_d - t_del);
    const Rational den = num - Rational(t_ins) * (n - t_del);
    return BoundResult::of(num / den);
}

BoundResult johnson_bound(long long n, long long d, long long t_ins, long long t_del) {
    check_code_params(n, d);
    check_budgets(n, t_ins, t_del);

    const Rational half_d(d, 2);
    // Cross-multiplied so the d = 2n corner needs no special case: the left
    // side vanishes there and feasibility reduces to t_del < d/2.
    const Rational lhs = Rational(t_ins) * (Rational(n) - half_d);
    const Rational rhs = (half_d - t_del) * Rational(n - t_del);
    if (!(lhs < rhs)) return BoundResult::infeasible();

    const Rational num = half_d * Rational(n + t_ins);
    const Rational den = rhs - lhs;
    return BoundResult::of(num / den);
}

bool EqualRadiusBound::feasible_at(long long t) const {
    if (t < 0 || t >= n) return false;
    // (n - t)^2 > n(n - d/2), kept in integers as 2(n-t)^2 > n(2n - d).
    const Int gap = Int(n) - t;
    return 2 * gap * gap > Int(n) * (2 * Int(n) - d);
}

Rational EqualRadiusBound::bound_at(long long t) const {
    if (!feasible_at(t)) throw std::domain_error("t is outside the equal-radius feasible range");
    const Rational num = Rational(d, 2) * Rational(n + t);
    const Rational den = (Rational(d, 2) - 2 * t) * n + Rational(t) * t;
    const Rational bound = num / den;
    if (bound > Rational(Int(n) * d)) throw std::logic_error("equal-radius bound exceeded its nd cap");
    return bound;
}

EqualRadiusBound equal_radius_bound(long long n, long long d) {
    check_code_params(n, d);
    const double t_equal = static_cast<double>(n) - std::sqrt(static_cast<double>(n) * (n - d / 2.0));
    return {n, d, t_equal};
}

RadiusCurves radius_curves(const RadiusProfile& profile) {
    const Rational &delta = profile.delta, &rho = profile.rho, &tau_ins = profile.tau_ins;
    if (delta < 0 || delta >= 1) throw std::invalid_argument("delta must lie in [0, 1)");
    if (rho < 0 || rho >= 1) throw std::invalid_argument("rho must lie in [0, 1)");
    if (tau_ins < 0) throw std::invalid_argument("tau_ins must be >= 0");

    const Rational one_minus_rho = 1 - rho;
    const Rational one_minus_delta = 1 - delta;
    RadiusCurves c;
    c.tau_id = delta + one_minus_rho * one_minus_rho * delta * delta / one_minus_delta;
    c.tau_i = one_minus_rho * delta * (1 - rho * delta) / one_minus_delta;
    const double dd = rat_double(delta), ti = rat_double(tau_ins);
    c.tau_d = 0.5 * (1.0 + dd - std::sqrt((1.0 - dd) * (1.0 - dd + 4.0 * ti)));
    return c;
}

Rational delta_id(const Rational& tau_ins, const Rational& tau_del) {
    if (tau_ins < 0) throw std::invalid_argument("tau_ins must be >= 0");
    if (tau_del < 0 || tau_del >= 1) throw std::invalid_argument("tau_del must lie in [0, 1)");
    const Rational one_minus_td = 1 - tau_del;
    return 1 - one_minus_td * one_minus_td / (tau_ins + one_minus_td);
}

BoundResult summary_bound(const Rational& tau_ins, const Rational& tau_del, const Rational& delta) {
    if (delta < 0 || delta > 1) throw std::invalid_argument("delta must lie in [0, 1]");
    const Rational threshold = delta_id(tau_ins, tau_del);
    if (!(delta > threshold)) return BoundResult::infeasible();
    const Rational gamma = delta - threshold;
    const Rational bound = delta * (tau_ins + 1) / (gamma * (tau_ins + 1 - tau_del));
    return BoundResult::of(bound);
}

BoundResult plotkin_bound(long long n, long long d, long long big_n) {
    check_code_params(n, d);
    if (big_n < n) throw std::invalid_argument("supersequence length must be >= n");
    // d/2n > 1 - n/N
    if (!(Rational(d, 2 * n) > 1 - Rational(n, big_n))) return BoundResult::infeasible();
    const Int nd = Int(big_n) * d;
    return BoundResult::of(Rational(nd, nd - 2 * Int(big_n - n) * n));
}

Word canonical_supersequence(int q, long long n) {
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (n < 1) throw std::invalid_argument("repetition count must be >= 1");
    std::vector<int> symbols;
    symbols.reserve(static_cast<std::size_t>(q) * n);
    for (long long r = 0; r < n; ++r)
        for (int s = 0; s < q; ++s) symbols.push_back(s);
    return Word(std::move(symbols), q);
}

EditWitness::EditWitness(Word w, Word ref, std::set<long long> dels, std::set<long long> ref_dels)
    : word(std::move(w)), reference(std::move(ref)), deletions(std::move(dels)),
      reference_deletions(std::move(ref_dels)) {
    if (word.q() != reference.q()) throw std::invalid_argument("witness words use mixed alphabets");
    auto apply = [](const Word& src, const std::set<long long>& drop) {
        std::vector<int> kept;
        for (long long k = 1; k <= static_cast<long long>(src.size()); ++k)
            if (!drop.count(k)) kept.push_back(src[static_cast<std::size_t>(k - 1)]);
        return kept;
    };
    for (long long k : deletions)
        if (k < 1 || k > static_cast<long long>(word.size()))
            throw std::invalid_argument("deletion position out of range");
    for (long long k : reference_deletions)
        if (k < 1 || k > static_cast<long long>(reference.size()))
            throw std::invalid_argument("reference deletion position out of range");
    if (apply(word, deletions) != apply(reference, reference_deletions))
        throw std::invalid_argument("inconsistent witness: residual strings differ");
}

long long wz_u_value(const EditWitness& wi, const EditWitness& wj) {
    if (wi.reference != wj.reference) throw std::invalid_argument("witnesses refer to different received words");

    long long first = 0;
    for (long long k : wi.deletions) {
        const bool shared = wj.deletions.count(k) != 0;
        if (shared && wi.word[static_cast<std::size_t>(k - 1)] == wj.word[static_cast<std::size_t>(k - 1)])
            continue;  // identical symbol deleted from both words at position k
        ++first;
    }
    for (long long k : wj.deletions)
        if (!wi.deletions.count(k)) ++first;

    long long second = 0;
    for (long long k : wi.reference_deletions)
        if (!wj.reference_deletions.count(k)) ++second;
    for (long long k : wj.reference_deletions)
        if (!wi.reference_deletions.count(k)) ++second;

    return first + second;
}

void write_curve_csv(std::ostream& out, int figure, const Rational& delta_step) {
    if (figure < 1 || figure > 3) throw std::invalid_argument("figure must be 1, 2 or 3");
    if (!(delta_step > 0) || delta_step >= 1) throw std::invalid_argument("delta step must lie in (0, 1)");

    std::vector<Rational> deltas;
    for (Rational delta = 0; delta < 1; delta += delta_step) deltas.push_back(delta);
    if (figure == 2) {
        // Landmark where tau_I(delta, 0) crosses sqrt(2)/2 = 0.7071...
        const Rational landmark(414213562LL, 1000000000LL);
        deltas.insert(std::upper_bound(deltas.begin(), deltas.end(), landmark), landmark);
    }

    const std::vector<Rational> seconds = figure == 3
        ? std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1), Rational(2)}
        : std::vector<Rational>{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};

    auto cell = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.9f", v);
        return std::string(buf);
    };

    out << "delta,rho_or_tau_ins,tau_ID,tau_I,tau_D\n";
    for (const Rational& second : seconds) {
        for (const Rational& delta : deltas) {
            RadiusProfile profile;
            profile.delta = delta;
            if (figure == 3) {
                profile.rho = 0;
                profile.tau_ins = second;
            } else {
                profile.rho = second;
                profile.tau_ins = 0;
            }
            const RadiusCurves curves = radius_curves(profile);
            out << cell(rat_double(delta)) << ',' << cell(rat_double(second)) << ','
                << cell(rat_double(curves.tau_id)) << ',' << cell(rat_double(curves.tau_i)) << ','
                << cell(curves.tau_d) << '\n';
        }
    }
}

}  // namespace insdel
