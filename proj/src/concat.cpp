#include "insdel/concat.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "insdel/sudan.hpp"

namespace insdel {

namespace {

void validate_params(const ConcatParams& q) {
    if (q.n < 1 || q.m < 1) throw std::invalid_argument("n and m must be >= 1");
    if (!is_prime(q.p)) throw std::invalid_argument("p must be prime");
    if (q.p < q.n) throw std::invalid_argument("p must be >= n (distinct evaluation points 0..n-1)");
    if (q.ell_prime < 1) throw std::invalid_argument("ell_prime must be >= 1");
    if (q.tau_i < 0) throw std::invalid_argument("tau_i must be >= 0");
    if (q.r_override < 0 || q.r_override > 1) throw std::invalid_argument("r_override must lie in [0, 1]");
    if (q.fallback_cap < 0) throw std::invalid_argument("fallback_cap must be >= 0");

    const Rational one_minus = 1 - q.tau_d_prime;
    if (q.mode == DecodeMode::insdel) {
        if (q.tau_d < 0 || q.tau_d >= 1) throw std::invalid_argument("tau_d must lie in [0, 1)");
        if (q.tau_d_prime != sqrt_upper(q.tau_d))
            throw std::invalid_argument("tau_d_prime must be the rounded-up square root of tau_d");
        if (q.tau_i_prime != 2 * q.tau_i / one_minus + one_minus / 2)
            throw std::invalid_argument("tau_i_prime disagrees with the insdel formula");
        const Rational om4 = one_minus * one_minus * one_minus * one_minus;
        if (q.r != om4 / (Rational(32) * (1 + q.tau_i_prime) * (1 + q.tau_i_prime) * q.ell_prime))
            throw std::invalid_argument("r disagrees with the insdel formula");
        if (q.ell * (one_minus * one_minus * one_minus) !=
            Rational(16) * (1 + q.tau_i_prime) * (1 + q.tau_i_prime) * q.ell_prime)
            throw std::invalid_argument("ell disagrees with the insdel formula");
        if (q.k_ins != 0 || q.gamma != 0 || q.b != 0)
            throw std::invalid_argument("insertion-only fields must be zero in insdel mode");
    } else {
        if (q.tau_d != 0 || q.tau_d_prime != 0)
            throw std::invalid_argument("insertion-only mode requires tau_d = 0");
        if (q.k_ins < 1) throw std::invalid_argument("window divisor k must be >= 1");
        if (!(q.gamma > 0) || !(q.gamma < 1)) throw std::invalid_argument("gamma must lie in (0, 1)");
        if (q.b != to_ll(rat_ceil((1 + q.tau_i) * q.m / q.k_ins)))
            throw std::invalid_argument("stride b disagrees with ceil((1+tau_i)m/k)");
        if (q.tau_i_prime != (1 + q.gamma) * (q.tau_i + Rational(q.b, q.m)))
            throw std::invalid_argument("tau_i_prime disagrees with the insertion-only formula");
        if (q.r != q.gamma * q.gamma / (Rational(8) * q.k_ins * q.k_ins * q.ell_prime))
            throw std::invalid_argument("r disagrees with the insertion-only formula");
        if (q.ell != Rational(4) * q.k_ins * q.k_ins * q.ell_prime / q.gamma)
            throw std::invalid_argument("ell disagrees with the insertion-only formula");
    }

    if (q.r_override == 0 && q.r * q.n < 1) {
        const Int min_n = rat_ceil(1 / q.r);
        throw std::invalid_argument("outer code empty: r*n < 1 at n = " + std::to_string(q.n) +
                                    "; minimum workable n is " + min_n.str() +
                                    " (or supply a rate override)");
    }
    const long long k = q.k_degree();
    if (k < 1 || k > q.n) throw std::invalid_argument("outer degree bound must lie in [1, n]");
}

struct WindowSpan {
    long long start, end;  // 1-based inclusive positions in v
    auto operator<=>(const WindowSpan&) const = default;
};

// Distinct non-empty clamped windows [stride*j + 1, stride*(j+j')] for
// 0 <= j <= j_max, 1 <= j' <= jp_max.
std::vector<WindowSpan> plan_windows(long long stride, long long j_max, long long jp_max, long long len) {
    std::set<WindowSpan> spans;
    for (long long j = 0; j <= j_max; ++j) {
        const long long start = stride * j + 1;
        if (start > len) continue;
        for (long long jp = 1; jp <= jp_max; ++jp) {
            const long long end = std::min(stride * (j + jp), len);
            if (end >= start) spans.insert({start, end});
        }
    }
    return {spans.begin(), spans.end()};
}

Message message_of(const Polynomial& f, long long k) {
    Message s(f.coeffs().begin(), f.coeffs().end());
    s.resize(static_cast<std::size_t>(k), 0);
    return s;
}

DecodeOutput run_decode(const ConcatParams& params, const InnerCode& inner, const Word& v, int threads,
                        long long stride, long long j_max, long long jp_max, long long ti_in,
                        long long td_in, long long threshold, long long ball_ti, long long ball_td) {
    if (inner.m() != params.m || inner.p() != params.p)
        throw std::invalid_argument("inner code does not match the parameter bundle");
    if (stride < 1) throw std::invalid_argument("window stride is zero: m too small for these radii");

    const std::vector<WindowSpan> spans =
        plan_windows(stride, j_max, jp_max, static_cast<long long>(v.size()));

    DecodeOutput out;
    out.window_count = static_cast<long long>(spans.size());

    // Step 2: decode every window against the inner code; J accumulates pairs.
    const auto worker_count = std::max<std::size_t>(1, std::min<std::size_t>(
        static_cast<std::size_t>(std::max(threads, 1)), spans.size() ? spans.size() : 1));
    std::vector<std::vector<std::vector<std::pair<long long, long long>>>> results(worker_count);
    auto decode_range = [&](std::size_t worker) {
        for (std::size_t i = worker; i < spans.size(); i += worker_count) {
            const auto& [start, end] = spans[i];
            std::vector<int> symbols(v.begin() + static_cast<std::ptrdiff_t>(start - 1),
                                     v.begin() + static_cast<std::ptrdiff_t>(end));
            results[worker].push_back(
                inner_list_decode(inner, Word(std::move(symbols), v.q()), ti_in, td_in));
        }
    };
    if (worker_count == 1) {
        decode_range(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t wkr = 0; wkr < worker_count; ++wkr) pool.emplace_back(decode_range, wkr);
        for (std::thread& t : pool) t.join();
    }

    std::set<std::pair<long long, long long>> pair_set;
    for (const auto& bucket : results)
        for (const auto& window_list : bucket) {
            out.max_window_list = std::max(out.max_window_list, static_cast<long long>(window_list.size()));
            pair_set.insert(window_list.begin(), window_list.end());
        }
    out.pair_count = static_cast<long long>(pair_set.size());

    // Step 3: list-recover the outer Reed-Solomon code.
    const PrimeField field(params.p);
    const PairSet pairs(field, {pair_set.begin(), pair_set.end()});
    const long long k = params.k_degree();
    out.sudan_regime_ok = threshold * threshold > 2 * k * out.pair_count;
    std::vector<Polynomial> outer_list;
    if (out.sudan_regime_ok) {
        outer_list = sudan_list_recover(field, pairs, k, threshold);
    } else {
        Int space = 1;
        for (long long i = 0; i < k; ++i) space *= params.p;
        if (space > params.fallback_cap)
            throw SudanRegimeError("Step 3 outside Sudan's regime (threshold^2 = " +
                                   std::to_string(threshold * threshold) + " <= 2k|J| = " +
                                   std::to_string(2 * k * out.pair_count) +
                                   ") and p^k exceeds the brute-force fallback cap");
        out.used_fallback = true;
        outer_list = brute_force_list_recover(field, pairs, k, threshold, params.fallback_cap);
    }
    out.outer_list_size = static_cast<long long>(outer_list.size());

    // Step 4: keep messages whose full encoding lies in the channel ball.
    for (const Polynomial& f : outer_list) {
        Message s = message_of(f, k);
        if (in_insdel_ball(concat_encode(params, inner, s), v, ball_ti, ball_td))
            out.messages.push_back(std::move(s));
    }
    return out;
}

const char* mode_name(DecodeMode mode) { return mode == DecodeMode::insdel ? "insdel" : "insertions"; }

}  // namespace

long long ConcatParams::k_degree() const { return to_ll(rat_ceil(effective_rate() * n)); }

ConcatParams derive_params(const Rational& tau_i, const Rational& tau_d, long long ell_prime,
                           long long n, long long m, long long p, const Rational& r_override) {
    ConcatParams q;
    q.mode = DecodeMode::insdel;
    q.tau_i = tau_i;
    q.tau_d = tau_d;
    if (tau_d < 0 || tau_d >= 1) throw std::invalid_argument("tau_d must lie in [0, 1)");
    q.tau_d_prime = sqrt_upper(tau_d);
    const Rational one_minus = 1 - q.tau_d_prime;
    q.tau_i_prime = 2 * tau_i / one_minus + one_minus / 2;
    q.ell_prime = ell_prime;
    q.r = one_minus * one_minus * one_minus * one_minus /
          (Rational(32) * (1 + q.tau_i_prime) * (1 + q.tau_i_prime) * ell_prime);
    q.ell = Rational(16) * (1 + q.tau_i_prime) * (1 + q.tau_i_prime) * ell_prime /
            (one_minus * one_minus * one_minus);
    q.n = n;
    q.m = m;
    q.p = p;
    q.r_override = r_override;
    validate_params(q);
    return q;
}

ConcatParams derive_params_insertions(const Rational& tau_i, const Rational& gamma, long long k,
                                      long long ell_prime, long long n, long long m, long long p,
                                      const Rational& r_override) {
    if (k < 1) throw std::invalid_argument("window divisor k must be >= 1");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    ConcatParams q;
    q.mode = DecodeMode::insertions;
    q.tau_i = tau_i;
    q.tau_d = 0;
    q.tau_d_prime = 0;
    q.k_ins = k;
    q.gamma = gamma;
    q.b = to_ll(rat_ceil((1 + tau_i) * m / k));
    // The proof needs tau_i_prime*m >= tau_i*m + b; we realize it directly.
    q.tau_i_prime = (1 + gamma) * (tau_i + Rational(q.b, m));
    q.ell_prime = ell_prime;
    q.r = gamma * gamma / (Rational(8) * k * k * ell_prime);
    q.ell = Rational(4) * k * k * ell_prime / gamma;
    q.n = n;
    q.m = m;
    q.p = p;
    q.r_override = r_override;
    validate_params(q);
    return q;
}

Word concat_encode(const ConcatParams& params, const InnerCode& inner, const Message& s) {
    if (inner.m() != params.m || inner.p() != params.p)
        throw std::invalid_argument("inner code does not match the parameter bundle");
    const long long k = params.k_degree();
    if (static_cast<long long>(s.size()) != k)
        throw std::invalid_argument("message must have exactly k_degree symbols");
    for (long long sym : s)
        if (sym < 0 || sym >= params.p) throw std::invalid_argument("message symbol outside F_p");

    const PrimeField field(params.p);
    const Polynomial f(field, s);
    std::vector<int> symbols;
    symbols.reserve(static_cast<std::size_t>(params.n * params.m));
    for (long long i = 0; i < params.n; ++i) {
        const Word& block = inner_encode(inner, i, poly_eval(field, f, i));
        symbols.insert(symbols.end(), block.begin(), block.end());
    }
    return Word(std::move(symbols), inner.q());
}

DecodeOutput list_decode_insdel(const ConcatParams& params, const InnerCode& inner, const Word& v,
                                int threads) {
    if (params.mode != DecodeMode::insdel)
        throw std::invalid_argument("parameter bundle is not in insdel mode");
    const Rational len(static_cast<long long>(v.size()));
    const Rational nm(params.n * params.m);
    if (len < (1 - params.tau_d) * nm || len > (1 + params.tau_i) * nm)
        throw std::invalid_argument("received length outside [(1-tau_d)nm, (1+tau_i)nm]");

    const Rational one_minus = 1 - params.tau_d_prime;
    const long long stride = to_ll(rat_floor(one_minus * params.m / 2));
    const long long j_max = to_ll(rat_ceil(2 * (1 + params.tau_i) * params.n / one_minus));
    const long long jp_max = to_ll(rat_ceil(2 * (1 + params.tau_i_prime) / one_minus));
    const long long ti_in = to_ll(rat_floor(params.tau_i_prime * params.m));
    const long long td_in = to_ll(rat_floor(params.tau_d_prime * params.m));
    const long long threshold = to_ll(rat_ceil(one_minus * params.n / 2));
    const long long ball_ti = to_ll(rat_floor(params.tau_i * nm));
    const long long ball_td = to_ll(rat_floor(params.tau_d * nm));
    return run_decode(params, inner, v, threads, stride, j_max, jp_max, ti_in, td_in, threshold,
                      ball_ti, ball_td);
}

DecodeOutput list_decode_insertions(const ConcatParams& params, const InnerCode& inner, const Word& v,
                                    int threads) {
    if (params.mode != DecodeMode::insertions)
        throw std::invalid_argument("parameter bundle is not in insertion-only mode");
    const Rational len(static_cast<long long>(v.size()));
    const Rational nm(params.n * params.m);
    if (len < nm || len > (1 + params.tau_i) * nm)
        throw std::invalid_argument("received length outside [nm, (1+tau_i)nm]");

    const long long stride = params.b;
    const long long j_max = to_ll(rat_floor((1 + params.tau_i) * nm / params.b));
    const long long jp_max = params.k_ins;
    const long long ti_in = to_ll(rat_floor(params.tau_i_prime * params.m));
    const long long threshold = to_ll(rat_ceil(params.gamma * params.n / 2));
    const long long ball_ti = to_ll(rat_floor(params.tau_i * nm));
    return run_decode(params, inner, v, threads, stride, j_max, jp_max, ti_in, 0, threshold, ball_ti, 0);
}

void write_params(std::ostream& out, const ConcatParams& q) {
    out << "mode " << mode_name(q.mode) << '\n'
        << "tau_i " << rat_string(q.tau_i) << '\n'
        << "tau_d " << rat_string(q.tau_d) << '\n'
        << "tau_d_prime " << rat_string(q.tau_d_prime) << '\n'
        << "tau_i_prime " << rat_string(q.tau_i_prime) << '\n'
        << "r " << rat_string(q.r) << '\n'
        << "ell_prime " << q.ell_prime << '\n'
        << "ell " << rat_string(q.ell) << '\n'
        << "n " << q.n << '\n'
        << "m " << q.m << '\n'
        << "p " << q.p << '\n'
        << "k_ins " << q.k_ins << '\n'
        << "gamma " << rat_string(q.gamma) << '\n'
        << "b " << q.b << '\n'
        << "r_override " << rat_string(q.r_override) << '\n'
        << "fallback_cap " << q.fallback_cap << '\n';
}

ConcatParams read_params(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key >> value)) throw std::invalid_argument("malformed params line: " + line);
        kv[key] = value;
    }
    auto need = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("params file missing key: " + key);
        return it->second;
    };
    ConcatParams q;
    const std::string mode = need("mode");
    if (mode == "insdel") q.mode = DecodeMode::insdel;
    else if (mode == "insertions") q.mode = DecodeMode::insertions;
    else throw std::invalid_argument("unknown mode: " + mode);
    q.tau_i = parse_rational(need("tau_i"));
    q.tau_d = parse_rational(need("tau_d"));
    q.tau_d_prime = parse_rational(need("tau_d_prime"));
    q.tau_i_prime = parse_rational(need("tau_i_prime"));
    q.r = parse_rational(need("r"));
    q.ell_prime = std::stoll(need("ell_prime"));
    q.ell = parse_rational(need("ell"));
    q.n = std::stoll(need("n"));
    q.m = std::stoll(need("m"));
    q.p = std::stoll(need("p"));
    q.k_ins = std::stoll(need("k_ins"));
    q.gamma = parse_rational(need("gamma"));
    q.b = std::stoll(need("b"));
    q.r_override = parse_rational(need("r_override"));
    q.fallback_cap = std::stoll(need("fallback_cap"));
    validate_params(q);
    return q;
}

}  // namespace insdel
