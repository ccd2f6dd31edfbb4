#ifndef INSDEL_WORD_HPP
#define INSDEL_WORD_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

// Levenshtein-metric primitives: words over [q] = {0,...,q-1}, the
// insertion/deletion-only distance d_L, subsequence tests, insdel-ball
// membership and code minimum distance. All operations are pure functions on
// immutable values and safe for unrestricted concurrent use.

namespace insdel {

class Word {
public:
    Word() = default;
    Word(std::vector<int> symbols, int alphabet_size);

    int q() const { return q_; }
    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<int>& symbols() const { return symbols_; }

    auto begin() const { return symbols_.begin(); }
    auto end() const { return symbols_.end(); }

    // "010212" for q <= 10, "0,10,2" otherwise.
    std::string str() const;
    static Word parse(const std::string& line, int alphabet_size);

    bool operator==(const Word& o) const { return q_ == o.q_ && symbols_ == o.symbols_; }
    auto operator<=>(const Word& o) const = default;

private:
    std::vector<int> symbols_;
    int q_ = 2;
};

// Explicit code: equal-length words over a common alphabet with the minimum
// pairwise Levenshtein distance cached at construction.
class CodeBook {
public:
    explicit CodeBook(std::vector<Word> words);

    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    long long block_length() const { return n_; }
    int q() const { return q_; }
    long long min_dist() const { return min_dist_; }

private:
    std::vector<Word> words_;
    long long n_ = 0;
    int q_ = 2;
    long long min_dist_ = 0;
};

// Length of the longest common subsequence (two-row DP).
long long lcs(const Word& x, const Word& y);

// d_L(x, y) = |x| + |y| - 2*lcs(x, y): minimum number of insertions plus
// deletions transforming x into y. Substitutions are not an atomic operation.
long long levenshtein_distance(const Word& x, const Word& y);

// True iff x can be obtained from y by deletions only.
bool is_subsequence(const Word& x, const Word& y);

// Membership of c in the ball around the received word v: true iff v can be
// produced from c by at most t_ins insertions and t_del deletions. With
// L = lcs(c, v) this is |v| - L <= t_ins and |c| - L <= t_del, so the check
// costs one LCS rather than a search over edit sequences.
bool in_insdel_ball(const Word& c, const Word& v, long long t_ins, long long t_del);

// Minimum pairwise d_L; requires at least two codewords.
long long min_code_distance(const CodeBook& code);

}  // namespace insdel

#endif
