#ifndef INSDEL_SUDAN_HPP
#define INSDEL_SUDAN_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "insdel/field.hpp"

namespace insdel {

// Raised when sudan_list_recover is invoked outside the regime
// threshold^2 > 2*k*|J| where its guarantees hold.
struct SudanRegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deduplicated set of (alpha, beta) pairs over F_p; several beta per alpha
// are allowed (list-recovery input).
class PairSet {
public:
    PairSet(const PrimeField& field, std::vector<std::pair<long long, long long>> pairs);

    long long p() const { return p_; }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<long long, long long>>& pairs() const { return pairs_; }

private:
    long long p_;
    std::vector<std::pair<long long, long long>> pairs_;
};

// Evaluations of the message polynomial s_1 + s_2 x + ... + s_k x^{k-1}
// at the given distinct points.
std::vector<long long> rs_encode(const PrimeField& field, const std::vector<long long>& message,
                                 const std::vector<long long>& points);

long long agreement(const PrimeField& field, const Polynomial& f, const PairSet& pairs);

// All f with deg f < k agreeing with at least `threshold` pairs, sorted by
// coefficient vector.  Requires threshold^2 > 2*k*|J|; throws SudanRegimeError
// otherwise.  Output list length is at most floor(sqrt(2|J|/k)).
std::vector<Polynomial> sudan_list_recover(const PrimeField& field, const PairSet& pairs, long long k,
                                           long long threshold);

// Same output by enumerating all p^k candidate polynomials; no regime
// precondition.  Refuses to enumerate more than `cap` polynomials.
std::vector<Polynomial> brute_force_list_recover(const PrimeField& field, const PairSet& pairs, long long k,
                                                 long long threshold, long long cap = 4'000'000);

// Low-degree-first comma-separated residues; "0" for the zero polynomial.
std::string poly_string(const Polynomial& f);

}  // namespace insdel

#endif
