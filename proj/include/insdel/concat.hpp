#ifndef INSDEL_CONCAT_HPP
#define INSDEL_CONCAT_HPP

#include <iosfwd>
#include <vector>

#include "insdel/field.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/rational.hpp"
#include "insdel/word.hpp"

namespace insdel {

enum class DecodeMode { insdel, insertions };

// Full parameter bundle of the concatenated construction.  In insdel mode
// the derived fields follow
//   tau_d_prime = sqrt(tau_d)   (smallest rational >= the root, den <= 2^16)
//   tau_i_prime = 2*tau_i/(1 - tau_d_prime) + (1 - tau_d_prime)/2
//   r   = (1 - tau_d_prime)^4 / (32*(1 + tau_i_prime)^2 * ell_prime)
//   ell = 16*(1 + tau_i_prime)^2 * (1 - tau_d_prime)^-3 * ell_prime
// and in insertion-only mode
//   b   = ceil((1 + tau_i)*m / k_ins)
//   tau_i_prime = (1 + gamma)*(tau_i + b/m)
//   r   = gamma^2 / (8*k_ins^2*ell_prime)
//   ell = 4*k_ins^2*ell_prime / gamma.
// r_override, when positive, replaces r in the outer degree bound only; it
// decouples desk-scale experiments from the theorem rate and is flagged in
// all outputs because the list-size guarantee no longer follows from the
// lemma.  fallback_cap limits the brute-force polynomial recovery used when
// Step 3 falls outside Sudan's regime.
struct ConcatParams {
    DecodeMode mode = DecodeMode::insdel;
    Rational tau_i;
    Rational tau_d;
    Rational tau_d_prime;
    Rational tau_i_prime;
    Rational r;
    long long ell_prime = 1;
    Rational ell;
    long long n = 1;
    long long m = 1;
    long long p = 2;
    long long k_ins = 0;   // insertion-only mode
    Rational gamma;        // insertion-only mode
    long long b = 0;       // insertion-only mode
    Rational r_override;   // 0 = unset
    long long fallback_cap = 4'000'000;

    const Rational& effective_rate() const { return r_override > 0 ? r_override : r; }
    long long k_degree() const;  // ceil(effective_rate * n), the outer degree bound
};

// Lemma 4 parameters.  Throws when r*n < 1 (outer code empty), reporting the
// minimum n that would work -- unless r_override > 0 supplies a usable rate.
ConcatParams derive_params(const Rational& tau_i, const Rational& tau_d, long long ell_prime,
                           long long n, long long m, long long p, const Rational& r_override = Rational(0));

// Lemma 5 parameters (insertion-only decoding), analogous.
ConcatParams derive_params_insertions(const Rational& tau_i, const Rational& gamma, long long k,
                                      long long ell_prime, long long n, long long m, long long p,
                                      const Rational& r_override = Rational(0));

using Message = std::vector<long long>;  // k_degree() elements of F_p

// (C_in(alpha_1, f_s(alpha_1)), ..., C_in(alpha_n, f_s(alpha_n))) with
// alpha_i = 0..n-1 and f_s the message polynomial; output length n*m.
Word concat_encode(const ConcatParams& params, const InnerCode& inner, const Message& s);

struct DecodeOutput {
    std::vector<Message> messages;
    // diagnostics
    long long window_count = 0;     // non-empty windows decoded
    long long pair_count = 0;       // |J| after deduplication
    long long max_window_list = 0;  // largest inner list from a single window
    long long outer_list_size = 0;  // |S| before the final ball filter
    bool sudan_regime_ok = false;   // threshold^2 > 2*k_degree*|J|
    bool used_fallback = false;     // brute-force polynomial recovery ran
};

// Lemma 4 four-step windowed decoder.  threads > 1 parallelizes Step 2.
DecodeOutput list_decode_insdel(const ConcatParams& params, const InnerCode& inner, const Word& v,
                                int threads = 1);

// Lemma 5 insertion-only decoder.
DecodeOutput list_decode_insertions(const ConcatParams& params, const InnerCode& inner, const Word& v,
                                    int threads = 1);

// Key-value text file mirroring the ConcatParams fields; read_params
// re-validates every derived-field formula for the recorded mode.
void write_params(std::ostream& out, const ConcatParams& params);
ConcatParams read_params(std::istream& in);

}  // namespace insdel

#endif
