#include "insdel/word.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace insdel {

namespace {

void require_same_alphabet(const Word& x, const Word& y) {
    if (x.q() != y.q())
        throw std::invalid_argument("alphabet mismatch: q=" + std::to_string(x.q()) +
                                    " vs q=" + std::to_string(y.q()));
}

}  // namespace

Word::Word(std::vector<int> symbols, int alphabet_size) : symbols_(std::move(symbols)), q_(alphabet_size) {
    if (q_ < 2) throw std::invalid_argument("alphabet size must be >= 2");
    for (int s : symbols_)
        if (s < 0 || s >= q_)
            throw std::invalid_argument("symbol " + std::to_string(s) + " out of range for q=" +
                                        std::to_string(q_));
}

std::string Word::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (q_ > 10 && i > 0) out << ',';
        out << symbols_[i];
    }
    return out.str();
}

Word Word::parse(const std::string& line, int alphabet_size) {
    std::vector<int> symbols;
    if (alphabet_size <= 10) {
        for (char c : line) {
            if (c == '\r' || c == ' ') continue;
            if (c < '0' || c > '9') throw std::invalid_argument("bad symbol character '" + std::string(1, c) + "'");
            symbols.push_back(c - '0');
        }
    } else {
        std::istringstream in(line);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            symbols.push_back(std::stoi(tok));
        }
    }
    return Word(std::move(symbols), alphabet_size);
}

CodeBook::CodeBook(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.size() < 2) throw std::invalid_argument("a code needs at least two words");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    if (words_.size() < 2) throw std::invalid_argument("a code needs at least two distinct words");

    q_ = words_.front().q();
    n_ = static_cast<long long>(words_.front().size());
    for (const Word& w : words_) {
        if (w.q() != q_) throw std::invalid_argument("code words use mixed alphabets");
        if (static_cast<long long>(w.size()) != n_)
            throw std::invalid_argument("code words have mixed lengths");
    }

    min_dist_ = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < words_.size(); ++i)
        for (std::size_t j = i + 1; j < words_.size(); ++j)
            min_dist_ = std::min(min_dist_, levenshtein_distance(words_[i], words_[j]));
}

long long lcs(const Word& x, const Word& y) {
    require_same_alphabet(x, y);
    const std::size_t nx = x.size(), ny = y.size();
    if (nx == 0 || ny == 0) return 0;
    std::vector<long long> prev(ny + 1, 0), cur(ny + 1, 0);
    for (std::size_t i = 1; i <= nx; ++i) {
        for (std::size_t j = 1; j <= ny; ++j) {
            if (x[i - 1] == y[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[ny];
}

long long levenshtein_distance(const Word& x, const Word& y) {
    return static_cast<long long>(x.size()) + static_cast<long long>(y.size()) - 2 * lcs(x, y);
}

bool is_subsequence(const Word& x, const Word& y) {
    require_same_alphabet(x, y);
    std::size_t i = 0;
    for (std::size_t j = 0; j < y.size() && i < x.size(); ++j)
        if (x[i] == y[j]) ++i;
    return i == x.size();
}

bool in_insdel_ball(const Word& c, const Word& v, long long t_ins, long long t_del) {
    if (t_ins < 0 || t_del < 0) throw std::invalid_argument("negative edit budget");
    const long long L = lcs(c, v);
    return static_cast<long long>(v.size()) - L <= t_ins && static_cast<long long>(c.size()) - L <= t_del;
}

long long min_code_distance(const CodeBook& code) {
    return code.min_dist();
}

}  // namespace insdel
