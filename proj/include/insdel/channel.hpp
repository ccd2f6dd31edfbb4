#ifndef INSDEL_CHANNEL_HPP
#define INSDEL_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "insdel/word.hpp"

namespace insdel {

// Record of one channel application.  Delete positions are 1-based indices
// into the input word and are applied first, all at once.  Insertions are
// then applied in listed order; each (position, symbol) entry places the
// symbol so that it lands at that 1-based position of the current word.
struct CorruptionLedger {
    std::uint64_t seed = 0;
    long long t_ins = 0;
    long long t_del = 0;
    std::vector<long long> delete_positions;                  // sorted, distinct
    std::vector<std::pair<long long, int>> insert_events;     // in application order
    long long block_length = 0;                               // 0 when no block structure was supplied
    std::vector<long long> block_insertions;                  // per block, only when block_length > 0
    std::vector<long long> block_deletions;

    std::string to_json() const;
    static CorruptionLedger from_json(const std::string& text);
};

struct CorruptResult {
    Word word;
    CorruptionLedger ledger;
};

// Exactly t_del seeded-random distinct deletions followed by exactly t_ins
// seeded-random insertions.  When block_length > 0 the ledger also carries
// per-block corruption counts (insertions between blocks are attributed to
// the block of the original symbol they displace).
CorruptResult corrupt(const Word& x, long long t_ins, long long t_del, std::uint64_t seed,
                      long long block_length = 0);

// Applies a ledger to x; reproduces corrupt's output bit-exactly.
Word replay(const Word& x, const CorruptionLedger& ledger);

// {c in code : v reachable from c with t_ins insertions and t_del deletions}.
std::vector<Word> brute_force_list(const CodeBook& code, const Word& v, long long t_ins, long long t_del);

struct MaxListResult {
    long long max_size = 0;
    Word witness;
};

// Maximum of |brute_force_list| over every word of every admissible length
// n - t_del .. n + t_ins, with the first attaining witness.  Throws when the
// enumeration would exceed `cap` words.
MaxListResult max_list_size(const CodeBook& code, long long t_ins, long long t_del,
                            long long cap = 5'000'000);

struct MaxCodeResult {
    long long size = 0;
    CodeBook code;
};

// Maximum-cardinality code in [q]^n with minimum Levenshtein distance >= d,
// by branch-and-bound over the distance-at-least-d graph.  Throws when
// q^n > cap.
MaxCodeResult max_code_search(int q, long long n, long long d, long long cap = 250'000);

}  // namespace insdel

#endif
