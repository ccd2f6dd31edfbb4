#ifndef INSDEL_FIELD_HPP
#define INSDEL_FIELD_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace insdel {

bool is_prime(long long n);
long long smallest_prime_geq(long long n);

// Arithmetic in F_p on canonical residues 0..p-1.
class PrimeField {
public:
    explicit PrimeField(long long p);

    long long p() const { return p_; }
    long long reduce(long long x) const;  // maps any integer to its residue
    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const;
    long long neg(long long a) const;
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;  // throws std::domain_error on 0
    long long div(long long a, long long b) const { return mul(a, inv(b)); }
    long long pow(long long a, long long e) const;  // e >= 0

private:
    long long p_;
};

// Univariate polynomial over F_p, coefficients low-degree first and trimmed.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    Polynomial(const PrimeField& field, std::vector<long long> coeffs);

    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    long long coeff(long long i) const;
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<long long> coeffs_;
};

Polynomial poly_add(const PrimeField& field, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const PrimeField& field, const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const PrimeField& field, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const PrimeField& field, const Polynomial& a, long long c);
long long poly_eval(const PrimeField& field, const Polynomial& a, long long x);

// Unique polynomial of degree < points.size() through the given (x, y) pairs.
// The x coordinates must be pairwise distinct.
Polynomial lagrange_interpolate(const PrimeField& field,
                                const std::vector<std::pair<long long, long long>>& points);

}  // namespace insdel

#endif
