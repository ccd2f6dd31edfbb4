#ifndef INSDEL_INNER_CODE_HPP
#define INSDEL_INNER_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "insdel/rational.hpp"
#include "insdel/word.hpp"

namespace insdel {

// Inner code C_in : F_p x F_p -> [q]^m as an indexed array of p^2 codewords;
// the pair (alpha, beta) lives at index alpha*p + beta.  delta_in is the
// achieved normalized minimum distance: every distinct pair of codewords is
// at Levenshtein distance >= 2*delta_in*m (re-verified at construction).
class InnerCode {
public:
    InnerCode(int q, long long m, long long p, Rational delta_in, std::uint64_t seed,
              std::vector<Word> codewords);

    int q() const { return q_; }
    long long m() const { return m_; }
    long long p() const { return p_; }
    const Rational& delta_in() const { return delta_in_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<Word>& codewords() const { return codewords_; }

private:
    int q_;
    long long m_;
    long long p_;
    Rational delta_in_;
    std::uint64_t seed_;
    std::vector<Word> codewords_;
};

// Raised when the randomized search exhausts its budget; carries how far it
// got so callers can report the shortfall instead of silently degrading.
struct InnerSearchError : std::runtime_error {
    InnerSearchError(const std::string& what, long long found_arg, Rational achieved_arg)
        : std::runtime_error(what), found(found_arg), achieved_delta(std::move(achieved_arg)) {}
    long long found;
    Rational achieved_delta;  // min normalized distance of the kept partial set
};

// Seeded randomized greedy search: draw uniform words of length m, keep a
// candidate iff its distance to every kept word is >= 2*delta_target*m (and
// positive), until p^2 codewords are found or the draw budget runs out.
InnerCode search_inner_code(int q, long long m, long long p, const Rational& delta_target,
                            std::uint64_t seed, long long budget = 1'000'000);

const Word& inner_encode(const InnerCode& code, long long alpha, long long beta);

// All pairs (alpha, beta) whose codeword can produce w with at most ti_in
// insertions and td_in deletions; brute force over all p^2 codewords.
std::vector<std::pair<long long, long long>> inner_list_decode(const InnerCode& code, const Word& w,
                                                               long long ti_in, long long td_in);

// Text format: header "q m p delta_num delta_den seed", then p^2 codeword
// lines in index order.
void write_inner_code(std::ostream& out, const InnerCode& code);
InnerCode read_inner_code(std::istream& in);

}  // namespace insdel

#endif
