#include "insdel/sudan.hpp"

#include <algorithm>
#include <cstddef>

namespace insdel {

namespace {

bool poly_less(const Polynomial& a, const Polynomial& b) { return a.coeffs() < b.coeffs(); }

// One nonzero vector of the kernel of `rows` (each row has `cols` entries),
// or empty if the kernel is trivial.
std::vector<long long> kernel_vector(const PrimeField& field, std::vector<std::vector<long long>> rows,
                                     std::size_t cols) {
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot == SIZE_MAX) continue;
        std::swap(rows[rank], rows[pivot]);
        const long long scale = field.inv(rows[rank][col]);
        for (std::size_t c = col; c < cols; ++c) rows[rank][c] = field.mul(rows[rank][c], scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const long long factor = rows[r][col];
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
        }
        pivot_of_col[col] = rank;
        ++rank;
    }

    std::size_t free_col = SIZE_MAX;
    for (std::size_t col = 0; col < cols; ++col)
        if (pivot_of_col[col] == SIZE_MAX) { free_col = col; break; }
    if (free_col == SIZE_MAX) return {};

    std::vector<long long> v(cols, 0);
    v[free_col] = 1;
    for (std::size_t col = 0; col < cols; ++col) {
        const std::size_t r = pivot_of_col[col];
        if (r != SIZE_MAX) v[col] = field.neg(rows[r][free_col]);
    }
    return v;
}

// Bivariate polynomial indexed by y-degree: Q(x, y) = sum_b q[b](x) y^b.
using Bivariate = std::vector<Polynomial>;

void trim_bivariate(Bivariate& q) {
    while (!q.empty() && q.back().is_zero()) q.pop_back();
}

// Divides Q by the largest power of x dividing every coefficient polynomial.
void strip_x(const PrimeField& field, Bivariate& q) {
    long long shift = -1;
    for (const Polynomial& part : q) {
        if (part.is_zero()) continue;
        long long first = 0;
        while (part.coeff(first) == 0) ++first;
        shift = shift < 0 ? first : std::min(shift, first);
    }
    if (shift <= 0) return;
    for (Polynomial& part : q) {
        if (part.is_zero()) continue;
        std::vector<long long> c(part.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                 part.coeffs().end());
        part = Polynomial(field, std::move(c));
    }
}

// Q(x, gamma + x*z) as a bivariate in (x, z), via binomial expansion.
Bivariate shift_substitute(const PrimeField& field, const Bivariate& q, long long gamma) {
    const std::size_t b_max = q.size();
    std::vector<std::vector<long long>> choose(b_max, std::vector<long long>(b_max, 0));
    for (std::size_t b = 0; b < b_max; ++b) {
        choose[b][0] = 1;
        for (std::size_t c = 1; c <= b; ++c)
            choose[b][c] = field.add(choose[b - 1][c - 1], c < b ? choose[b - 1][c] : 0);
    }
    Bivariate out(b_max);
    for (std::size_t c = 0; c < b_max; ++c) {
        Polynomial acc;
        for (std::size_t b = c; b < b_max; ++b) {
            const long long w = field.mul(choose[b][c], field.pow(gamma, static_cast<long long>(b - c)));
            acc = poly_add(field, acc, poly_scale(field, q[b], w));
        }
        // multiply by x^c
        std::vector<long long> shifted(c, 0);
        shifted.insert(shifted.end(), acc.coeffs().begin(), acc.coeffs().end());
        out[c] = Polynomial(field, std::move(shifted));
    }
    trim_bivariate(out);
    return out;
}

void roth_ruckenstein(const PrimeField& field, Bivariate q, long long k, std::vector<long long>& prefix,
                      std::vector<Polynomial>& found) {
    if (static_cast<long long>(prefix.size()) == k) {
        if (q.empty() || q[0].is_zero()) found.emplace_back(field, prefix);
        return;
    }
    strip_x(field, q);
    // Roots gamma of R(y) = Q(0, y); R is nonzero once x-powers are stripped.
    for (long long gamma = 0; gamma < field.p(); ++gamma) {
        long long r = 0;
        for (std::size_t b = q.size(); b-- > 0;) r = field.add(field.mul(r, gamma), q[b].coeff(0));
        if (r != 0) continue;
        prefix.push_back(gamma);
        roth_ruckenstein(field, shift_substitute(field, q, gamma), k, prefix, found);
        prefix.pop_back();
    }
}

}  // namespace

PairSet::PairSet(const PrimeField& field, std::vector<std::pair<long long, long long>> pairs)
    : p_(field.p()), pairs_(std::move(pairs)) {
    for (const auto& [a, b] : pairs_)
        if (a < 0 || a >= p_ || b < 0 || b >= p_)
            throw std::invalid_argument("pair coordinate outside field range");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

std::vector<long long> rs_encode(const PrimeField& field, const std::vector<long long>& message,
                                 const std::vector<long long>& points) {
    if (message.size() > points.size()) throw std::invalid_argument("message longer than point set");
    if (points.size() > static_cast<std::size_t>(field.p()))
        throw std::invalid_argument("more evaluation points than field elements");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (field.reduce(points[i]) == field.reduce(points[j]))
                throw std::invalid_argument("evaluation points must be distinct");
    const Polynomial f(field, message);
    std::vector<long long> out;
    out.reserve(points.size());
    for (long long x : points) out.push_back(poly_eval(field, f, x));
    return out;
}

long long agreement(const PrimeField& field, const Polynomial& f, const PairSet& pairs) {
    long long hits = 0;
    for (const auto& [a, b] : pairs.pairs())
        if (poly_eval(field, f, a) == b) ++hits;
    return hits;
}

std::vector<Polynomial> sudan_list_recover(const PrimeField& field, const PairSet& pairs, long long k,
                                           long long threshold) {
    if (k < 1) throw std::invalid_argument("degree bound k must be >= 1");
    if (pairs.p() != field.p()) throw std::invalid_argument("pair set belongs to a different field");
    const long long j_size = static_cast<long long>(pairs.size());
    if (threshold < 0 || threshold * threshold <= 2 * k * j_size)
        throw SudanRegimeError("threshold^2 = " + std::to_string(threshold * threshold) +
                               " does not exceed 2k|J| = " + std::to_string(2 * k * j_size));

    std::vector<Polynomial> found;
    if (k == 1) {
        // Degree-0 candidates: weighted-(1, 0) degree degenerates, so recover
        // constants directly by counting how often each beta value occurs.
        std::vector<long long> freq(static_cast<std::size_t>(field.p()), 0);
        for (const auto& [a, b] : pairs.pairs()) ++freq[static_cast<std::size_t>(b)];
        for (long long c = 0; c < field.p(); ++c)
            if (freq[static_cast<std::size_t>(c)] >= threshold) found.emplace_back(field, std::vector<long long>{c});
        return found;
    }

    // Monomials x^a y^b with a + b(k-1) < threshold, lowest weighted degree
    // first, truncated to |J|+1 so a nonzero interpolation kernel exists with
    // the smallest usable support.
    struct Monomial { long long a, b; };
    std::vector<Monomial> monomials;
    for (long long w = 0; w < threshold && static_cast<long long>(monomials.size()) <= j_size; ++w)
        for (long long b = 0; b * (k - 1) <= w && static_cast<long long>(monomials.size()) <= j_size; ++b)
            monomials.push_back({w - b * (k - 1), b});
    if (static_cast<long long>(monomials.size()) <= j_size)
        throw SudanRegimeError("interpolation space smaller than the pair set");

    std::vector<std::vector<long long>> rows;
    rows.reserve(pairs.size());
    for (const auto& [a, b] : pairs.pairs()) {
        std::vector<long long> row;
        row.reserve(monomials.size());
        for (const Monomial& m : monomials)
            row.push_back(field.mul(field.pow(a, m.a), field.pow(b, m.b)));
        rows.push_back(std::move(row));
    }
    const std::vector<long long> coeffs = kernel_vector(field, std::move(rows), monomials.size());
    if (coeffs.empty()) throw SudanRegimeError("interpolation produced no nonzero polynomial");

    Bivariate q;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const auto b = static_cast<std::size_t>(monomials[i].b);
        if (q.size() <= b) q.resize(b + 1);
        std::vector<long long> part = q[b].coeffs();
        part.resize(std::max<std::size_t>(part.size(), static_cast<std::size_t>(monomials[i].a) + 1), 0);
        part[static_cast<std::size_t>(monomials[i].a)] = field.add(part[static_cast<std::size_t>(monomials[i].a)], coeffs[i]);
        q[b] = Polynomial(field, std::move(part));
    }
    trim_bivariate(q);

    std::vector<long long> prefix;
    roth_ruckenstein(field, std::move(q), k, prefix, found);

    // Soundness: keep only candidates that genuinely meet the threshold.
    std::vector<Polynomial> out;
    for (const Polynomial& f : found)
        if (agreement(field, f, pairs) >= threshold) out.push_back(f);
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Polynomial> brute_force_list_recover(const PrimeField& field, const PairSet& pairs, long long k,
                                                 long long threshold, long long cap) {
    if (k < 1) throw std::invalid_argument("degree bound k must be >= 1");
    if (pairs.p() != field.p()) throw std::invalid_argument("pair set belongs to a different field");
    long long total = 1;
    for (long long i = 0; i < k; ++i) {
        if (total > cap / field.p() + 1) throw std::invalid_argument("p^k exceeds the enumeration cap");
        total *= field.p();
    }
    if (total > cap) throw std::invalid_argument("p^k exceeds the enumeration cap");

    std::vector<Polynomial> out;
    std::vector<long long> coeffs(static_cast<std::size_t>(k), 0);
    for (long long index = 0; index < total; ++index) {
        long long rem = index;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            coeffs[i] = rem % field.p();
            rem /= field.p();
        }
        Polynomial f(field, coeffs);
        if (agreement(field, f, pairs) >= threshold) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::string poly_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out;
}

}  // namespace insdel
