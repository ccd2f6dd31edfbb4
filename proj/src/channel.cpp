#include "insdel/channel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "insdel/random.hpp"

namespace insdel {

namespace {

long long block_of(long long position, long long block_length) {
    return (position + block_length - 1) / block_length;  // 1-based blocks
}

// All words of length `len` over [q], visited in lexicographic order.
template <typename Fn>
void for_each_word(int q, long long len, Fn&& fn) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    for (;;) {
        fn(digits);
        long long i = len - 1;
        while (i >= 0 && digits[static_cast<std::size_t>(i)] == q - 1) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return;
        ++digits[static_cast<std::size_t>(i)];
    }
}

}  // namespace

std::string CorruptionLedger::to_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["t_ins"] = t_ins;
    j["t_del"] = t_del;
    j["delete_positions"] = delete_positions;
    j["insertions"] = nlohmann::json::array();
    for (const auto& [pos, sym] : insert_events) j["insertions"].push_back({{"position", pos}, {"symbol", sym}});
    if (block_length > 0) {
        j["block_length"] = block_length;
        j["block_insertions"] = block_insertions;
        j["block_deletions"] = block_deletions;
    }
    return j.dump(2);
}

CorruptionLedger CorruptionLedger::from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    CorruptionLedger ledger;
    ledger.seed = j.at("seed").get<std::uint64_t>();
    ledger.t_ins = j.at("t_ins").get<long long>();
    ledger.t_del = j.at("t_del").get<long long>();
    ledger.delete_positions = j.at("delete_positions").get<std::vector<long long>>();
    for (const auto& e : j.at("insertions"))
        ledger.insert_events.emplace_back(e.at("position").get<long long>(), e.at("symbol").get<int>());
    if (j.contains("block_length")) {
        ledger.block_length = j.at("block_length").get<long long>();
        ledger.block_insertions = j.at("block_insertions").get<std::vector<long long>>();
        ledger.block_deletions = j.at("block_deletions").get<std::vector<long long>>();
    }
    return ledger;
}

CorruptResult corrupt(const Word& x, long long t_ins, long long t_del, std::uint64_t seed,
                      long long block_length) {
    if (t_ins < 0 || t_del < 0) throw std::invalid_argument("corruption budgets must be >= 0");
    if (t_del > static_cast<long long>(x.size()))
        throw std::invalid_argument("cannot delete more symbols than the word contains");
    if (block_length < 0) throw std::invalid_argument("block length must be >= 0");

    const long long n = static_cast<long long>(x.size());
    std::mt19937_64 rng(seed);

    CorruptionLedger ledger;
    ledger.seed = seed;
    ledger.t_ins = t_ins;
    ledger.t_del = t_del;
    ledger.block_length = block_length;
    const long long blocks = block_length > 0 ? (n + block_length - 1) / block_length : 0;
    ledger.block_insertions.assign(static_cast<std::size_t>(blocks), 0);
    ledger.block_deletions.assign(static_cast<std::size_t>(blocks), 0);

    // Exactly t_del distinct positions via a partial Fisher-Yates shuffle.
    std::vector<long long> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 1);
    for (long long i = 0; i < t_del; ++i) {
        const auto j = i + static_cast<long long>(uniform_draw(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(positions[static_cast<std::size_t>(i)], positions[static_cast<std::size_t>(j)]);
    }
    ledger.delete_positions.assign(positions.begin(), positions.begin() + static_cast<std::ptrdiff_t>(t_del));
    std::sort(ledger.delete_positions.begin(), ledger.delete_positions.end());

    std::vector<int> symbols;
    std::vector<long long> origin;  // original 1-based index backing each current symbol
    {
        std::size_t next_del = 0;
        for (long long i = 1; i <= n; ++i) {
            if (next_del < ledger.delete_positions.size() && ledger.delete_positions[next_del] == i) {
                ++next_del;
                if (blocks > 0) ++ledger.block_deletions[static_cast<std::size_t>(block_of(i, block_length) - 1)];
                continue;
            }
            symbols.push_back(x[static_cast<std::size_t>(i - 1)]);
            origin.push_back(i);
        }
    }

    for (long long i = 0; i < t_ins; ++i) {
        const auto pos = 1 + static_cast<long long>(uniform_draw(rng, symbols.size() + 1));
        const int sym = static_cast<int>(uniform_draw(rng, static_cast<std::uint64_t>(x.q())));
        const long long attributed =
            pos <= static_cast<long long>(symbols.size()) ? origin[static_cast<std::size_t>(pos - 1)] : n;
        symbols.insert(symbols.begin() + static_cast<std::ptrdiff_t>(pos - 1), sym);
        origin.insert(origin.begin() + static_cast<std::ptrdiff_t>(pos - 1), attributed);
        ledger.insert_events.emplace_back(pos, sym);
        if (blocks > 0) {
            const long long b = block_of(std::clamp<long long>(attributed, 1, n), block_length);
            ++ledger.block_insertions[static_cast<std::size_t>(b - 1)];
        }
    }

    return {Word(std::move(symbols), x.q()), std::move(ledger)};
}

Word replay(const Word& x, const CorruptionLedger& ledger) {
    std::vector<int> symbols;
    {
        std::vector<bool> dropped(x.size() + 1, false);
        for (long long pos : ledger.delete_positions) {
            if (pos < 1 || pos > static_cast<long long>(x.size()))
                throw std::invalid_argument("ledger delete position out of range");
            if (dropped[static_cast<std::size_t>(pos)]) throw std::invalid_argument("duplicate delete position");
            dropped[static_cast<std::size_t>(pos)] = true;
        }
        for (std::size_t i = 1; i <= x.size(); ++i)
            if (!dropped[i]) symbols.push_back(x[i - 1]);
    }
    for (const auto& [pos, sym] : ledger.insert_events) {
        if (pos < 1 || pos > static_cast<long long>(symbols.size()) + 1)
            throw std::invalid_argument("ledger insert position out of range");
        if (sym < 0 || sym >= x.q()) throw std::invalid_argument("ledger insert symbol outside alphabet");
        symbols.insert(symbols.begin() + static_cast<std::ptrdiff_t>(pos - 1), sym);
    }
    return Word(std::move(symbols), x.q());
}

std::vector<Word> brute_force_list(const CodeBook& code, const Word& v, long long t_ins, long long t_del) {
    std::vector<Word> out;
    for (const Word& c : code.words())
        if (in_insdel_ball(c, v, t_ins, t_del)) out.push_back(c);
    return out;
}

MaxListResult max_list_size(const CodeBook& code, long long t_ins, long long t_del, long long cap) {
    if (t_ins < 0 || t_del < 0) throw std::invalid_argument("budgets must be >= 0");
    const long long n = code.block_length();
    const int q = code.q();
    const long long lo = std::max<long long>(0, n - t_del), hi = n + t_ins;

    long long total = 0;
    for (long long len = lo; len <= hi; ++len) {
        long long count = 1;
        for (long long i = 0; i < len; ++i) {
            count *= q;
            if (count > cap) break;
        }
        total += count;
        if (total > cap) throw std::invalid_argument("received-word enumeration exceeds the configured cap");
    }

    MaxListResult best;
    for (long long len = lo; len <= hi; ++len) {
        for_each_word(q, len, [&](const std::vector<int>& digits) {
            const Word v(digits, q);
            const auto hits = static_cast<long long>(brute_force_list(code, v, t_ins, t_del).size());
            if (hits > best.max_size) {
                best.max_size = hits;
                best.witness = v;
            }
        });
    }
    return best;
}

MaxCodeResult max_code_search(int q, long long n, long long d, long long cap) {
    if (q < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (n < 1) throw std::invalid_argument("block length must be >= 1");
    if (d < 0 || d > 2 * n) throw std::invalid_argument("distance target must lie in [0, 2n]");
    long long total = 1;
    for (long long i = 0; i < n; ++i) {
        total *= q;
        if (total > cap) throw std::invalid_argument("q^n exceeds the configured cap");
    }

    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(total));
    for_each_word(q, n, [&](const std::vector<int>& digits) { words.emplace_back(digits, q); });

    // adjacency[i][j] = d_L(words[i], words[j]) >= d
    const auto v_count = words.size();
    std::vector<std::vector<bool>> adj(v_count, std::vector<bool>(v_count, false));
    for (std::size_t i = 0; i < v_count; ++i)
        for (std::size_t j = i + 1; j < v_count; ++j)
            adj[i][j] = adj[j][i] = levenshtein_distance(words[i], words[j]) >= d;

    std::vector<std::size_t> best, current;
    auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
        if (current.size() + candidates.size() <= best.size()) return;
        if (candidates.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (current.size() + (candidates.size() - idx) <= best.size()) return;
            const std::size_t v = candidates[idx];
            std::vector<std::size_t> next;
            for (std::size_t later = idx + 1; later < candidates.size(); ++later)
                if (adj[v][candidates[later]]) next.push_back(candidates[later]);
            current.push_back(v);
            self(self, next);
            current.pop_back();
        }
    };
    std::vector<std::size_t> all(v_count);
    std::iota(all.begin(), all.end(), 0);
    extend(extend, all);

    std::vector<Word> chosen;
    for (std::size_t idx : best) chosen.push_back(words[idx]);
    return {static_cast<long long>(best.size()), CodeBook(std::move(chosen))};
}

}  // namespace insdel
