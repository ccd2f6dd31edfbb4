#include "insdel/inner_code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "insdel/random.hpp"

namespace insdel {

namespace {

long long min_pairwise_distance(const std::vector<Word>& words) {
    long long best = -1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const long long d = levenshtein_distance(words[i], words[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

}  // namespace

InnerCode::InnerCode(int q, long long m, long long p, Rational delta_in, std::uint64_t seed,
                     std::vector<Word> codewords)
    : q_(q), m_(m), p_(p), delta_in_(std::move(delta_in)), seed_(seed), codewords_(std::move(codewords)) {
    if (q_ < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (m_ < 1) throw std::invalid_argument("inner block length must be >= 1");
    if (p_ < 2) throw std::invalid_argument("field size must be >= 2");
    if (static_cast<long long>(codewords_.size()) != p_ * p_)
        throw std::invalid_argument("inner code must contain exactly p^2 codewords");
    for (const Word& w : codewords_)
        if (w.q() != q_ || static_cast<long long>(w.size()) != m_)
            throw std::invalid_argument("inner codeword with wrong alphabet or length");
    if (delta_in_ < 0 || delta_in_ > 1) throw std::invalid_argument("delta_in must lie in [0, 1]");
    const long long min_d = min_pairwise_distance(codewords_);
    if (min_d <= 0) throw std::invalid_argument("inner codewords must be distinct");
    if (Rational(2) * delta_in_ * m_ > min_d)
        throw std::invalid_argument("claimed delta_in exceeds the verified minimum distance");
}

InnerCode search_inner_code(int q, long long m, long long p, const Rational& delta_target,
                            std::uint64_t seed, long long budget) {
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (m < 1) throw std::invalid_argument("inner block length must be >= 1");
    if (p < 2) throw std::invalid_argument("field size must be >= 2");
    if (delta_target < 0 || !(delta_target < 1)) throw std::invalid_argument("delta target must lie in [0, 1)");
    if (budget < 1) throw std::invalid_argument("search budget must be >= 1");

    // Counting prerequisite: p^2 distinct words must fit in [q]^m.
    Int volume = 1;
    for (long long i = 0; i < m && volume <= Int(p) * p; ++i) volume *= q;
    if (volume < Int(p) * p)
        throw std::invalid_argument("p^2 codewords cannot fit in [q]^m (counting bound)");

    const long long need = std::max<long long>(1, to_ll(rat_ceil(Rational(2) * delta_target * m)));
    const long long target_count = p * p;
    std::mt19937_64 rng(seed);
    std::vector<Word> kept;

    for (long long draws = 0; draws < budget && static_cast<long long>(kept.size()) < target_count; ++draws) {
        std::vector<int> symbols(static_cast<std::size_t>(m));
        for (long long i = 0; i < m; ++i)
            symbols[static_cast<std::size_t>(i)] = static_cast<int>(uniform_draw(rng, static_cast<std::uint64_t>(q)));
        Word candidate(std::move(symbols), q);
        bool ok = true;
        for (const Word& w : kept)
            if (levenshtein_distance(candidate, w) < need) { ok = false; break; }
        if (ok) kept.push_back(std::move(candidate));
    }

    if (static_cast<long long>(kept.size()) < target_count) {
        const long long partial_min = kept.size() >= 2 ? min_pairwise_distance(kept) : 2 * m;
        throw InnerSearchError("inner-code search exhausted its budget with " + std::to_string(kept.size()) +
                                   " of " + std::to_string(target_count) + " codewords",
                               static_cast<long long>(kept.size()), Rational(partial_min, 2 * m));
    }

    const Rational achieved(min_pairwise_distance(kept), 2 * m);
    return InnerCode(q, m, p, achieved, seed, std::move(kept));
}

const Word& inner_encode(const InnerCode& code, long long alpha, long long beta) {
    if (alpha < 0 || alpha >= code.p() || beta < 0 || beta >= code.p())
        throw std::invalid_argument("inner-code pair outside [0, p)^2");
    return code.codewords()[static_cast<std::size_t>(alpha * code.p() + beta)];
}

std::vector<std::pair<long long, long long>> inner_list_decode(const InnerCode& code, const Word& w,
                                                               long long ti_in, long long td_in) {
    if (w.q() != code.q()) throw std::invalid_argument("received window uses a different alphabet");
    std::vector<std::pair<long long, long long>> out;
    for (long long alpha = 0; alpha < code.p(); ++alpha)
        for (long long beta = 0; beta < code.p(); ++beta)
            if (in_insdel_ball(inner_encode(code, alpha, beta), w, ti_in, td_in))
                out.emplace_back(alpha, beta);
    return out;
}

void write_inner_code(std::ostream& out, const InnerCode& code) {
    out << code.q() << ' ' << code.m() << ' ' << code.p() << ' ' << rat_num(code.delta_in()) << ' '
        << rat_den(code.delta_in()) << ' ' << code.seed() << '\n';
    for (const Word& w : code.codewords()) out << w.str() << '\n';
}

InnerCode read_inner_code(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("missing inner-code header");
    std::istringstream hs(header);
    int q = 0;
    long long m = 0, p = 0, num = 0, den = 0;
    std::uint64_t seed = 0;
    if (!(hs >> q >> m >> p >> num >> den >> seed))
        throw std::invalid_argument("malformed inner-code header (want: q m p delta_num delta_den seed)");
    if (den <= 0) throw std::invalid_argument("delta denominator must be positive");
    std::vector<Word> codewords;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        codewords.push_back(Word::parse(line, q));
    }
    return InnerCode(q, m, p, Rational(num, den), seed, std::move(codewords));
}

}  // namespace insdel
