#ifndef INSDEL_BOUNDS_HPP
#define INSDEL_BOUNDS_HPP

#include <iosfwd>
#include <set>
#include <vector>

#include "insdel/rational.hpp"
#include "insdel/word.hpp"

// Johnson-type and Plotkin-type bounds in the Levenshtein metric, the
// normalized decoding-radius curves, and the u(i,j) relation checker for the
// flawed earlier bound. All feasibility decisions are exact rational
// comparisons; nothing here touches floating point except the two closed
// forms that contain a square root.

namespace insdel {

struct BoundResult {
    bool feasible = false;
    Rational list_bound;   // valid only when feasible; >= 1 then
    Int list_bound_floor;  // the operative guarantee: list sizes are integers

    static BoundResult infeasible() { return {}; }
    static BoundResult of(Rational bound) { return {true, bound, rat_floor(bound)}; }
};

// Fixed-length form: the received word has length exactly N = n + t_ins - t_del.
// Feasible iff d/2 > t_del + t_ins*(n - t_del)/N; then the list size is at
// most N*(d/2 - t_del) / (N*(d/2 - t_del) - t_ins*(n - t_del)).
BoundResult lemma1_bound(long long n, long long d, long long t_ins, long long t_del);

// Ranged form: budgets are upper bounds and N may be anything in
// [n - t_del, n + t_ins]. Feasible iff t_ins*(n - d/2) < (d/2 - t_del)*(n - t_del)
// (at d = 2n the left side vanishes, so any t_ins is feasible while
// t_del < d/2); then the list size is at most
// (d/2)(n + t_ins) / ((d/2 - t_del)(n - t_del) - (n - d/2) t_ins).
BoundResult johnson_bound(long long n, long long d, long long t_ins, long long t_del);

// Equal-budget specialization t_ins = t_del = t. Feasibility t < t_equal with
// t_equal = n - sqrt(n(n - d/2)); the membership test itself stays exact via
// (n - t)^2 > n(n - d/2).
struct EqualRadiusBound {
    long long n = 0;
    long long d = 0;
    double t_equal = 0.0;

    bool feasible_at(long long t) const;
    // (d/2)(n + t) / ((d/2 - 2t)n + t^2); asserts the nd cap from the corollary.
    Rational bound_at(long long t) const;
};

EqualRadiusBound equal_radius_bound(long long n, long long d);

// Normalized quantities: delta = d/2n, rho = t_del/(d/2), tau_ins = t_ins/n.
struct RadiusProfile {
    Rational delta;    // [0, 1)
    Rational rho;      // [0, 1)
    Rational tau_ins;  // >= 0
};

struct RadiusCurves {
    Rational tau_id;  // (t_ins + t_del)/n must stay below this
    Rational tau_i;   // t_ins/n must stay below this
    double tau_d;     // t_del/n must stay below this (contains a square root)
};

// tau_id = delta + (1-rho)^2 delta^2/(1-delta)
// tau_i  = (1-rho) delta (1-rho*delta)/(1-delta)
// tau_d  = (1 + delta - sqrt((1-delta)(1-delta+4*tau_ins)))/2
RadiusCurves radius_curves(const RadiusProfile& profile);

// Minimum normalized distance that makes (tau_ins*n, tau_del*n) decodable:
// delta_id = 1 - (1-tau_del)^2/(tau_ins + 1 - tau_del).
Rational delta_id(const Rational& tau_ins, const Rational& tau_del);

// For delta > delta_id the code is (tau_ins*n, tau_del*n, l)-list decodable
// with l <= delta(tau_ins+1) / (gamma (tau_ins + 1 - tau_del)), gamma = delta - delta_id.
BoundResult summary_bound(const Rational& tau_ins, const Rational& tau_del, const Rational& delta);

// Plotkin-type cardinality bound: if some length-N word contains every
// codeword as a subsequence and d/2n > 1 - n/N, then |C| <= Nd/(Nd - 2(N-n)n).
BoundResult plotkin_bound(long long n, long long d, long long big_n);

// (0,1,...,q-1) repeated n times; contains every word of [q]^n as a subsequence.
Word canonical_supersequence(int q, long long n);

// Witness of a common-subsequence alignment: deleting `deletions` (1-based)
// from `word` and `reference_deletions` from `reference` yields the same
// string. Validated at construction.
struct EditWitness {
    Word word;
    Word reference;
    std::set<long long> deletions;
    std::set<long long> reference_deletions;

    EditWitness(Word w, Word ref, std::set<long long> dels, std::set<long long> ref_dels);
};

// u(i,j) = |D(i) u D(j) \ {k in D(i) n D(j) : word_i[k] = word_j[k]}| + |E(i) symdiff E(j)|.
// The claimed relation d_L(c_i, c_j) <= u(i,j) fails in general; callers
// compare the returned value against the true distance.
long long wz_u_value(const EditWitness& wi, const EditWitness& wj);

// CSV sweep reproducing the radius-curve figures. Columns:
// delta,rho_or_tau_ins,tau_ID,tau_I,tau_D. For figures 1 and 2 the second
// parameter is rho, for figure 3 it is tau_ins. Figure 2 additionally samples
// delta = 0.414213562 where tau_I crosses 0.7071.
void write_curve_csv(std::ostream& out, int figure, const Rational& delta_step = Rational(1, 100));

}  // namespace insdel

#endif
