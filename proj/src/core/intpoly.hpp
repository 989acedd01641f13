#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qnp {

// Dense integer polynomial with exact (GMP) coefficients, index i holds the
// coefficient of c^i.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    static IntPoly monomial(int degree, long coefficient = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly squared() const { return *this * *this; }

    // division by a monic divisor with zero remainder required
    IntPoly divide_exact_by_monic(const IntPoly& d) const;

    IntPoly derivative() const;

    mpz_class eval_integer(const mpz_class& x) const;
    // sign of f(num / 2^k): -1, 0, or 1
    int sign_at_dyadic(const mpz_class& num, unsigned k) const;

    bool operator==(const IntPoly&) const = default;

    std::string str(char var = 'c') const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace qnp
