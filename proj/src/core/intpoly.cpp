#include "core/intpoly.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace qnp {

namespace {
const mpz_class kZero = 0;

bool all_nonnegative(const std::vector<mpz_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpz_class& c) { return sgn(c) >= 0; });
}

size_t max_coeff_bits(const std::vector<mpz_class>& v) {
    size_t bits = 1;
    for (const mpz_class& c : v) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

// Kronecker substitution: pack nonnegative coefficients into 64-bit-aligned
// slots of one big integer, multiply once with GMP, slice the product back.
std::vector<mpz_class> kronecker_mul(const std::vector<mpz_class>& a,
                                     const std::vector<mpz_class>& b) {
    size_t prod_bits = max_coeff_bits(a) + max_coeff_bits(b) + 64;
    size_t slot_words = (prod_bits + 63) / 64;

    auto pack = [&](const std::vector<mpz_class>& v) {
        std::vector<std::uint64_t> buf(v.size() * slot_words, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            size_t count = 0;
            mpz_export(buf.data() + i * slot_words, &count, -1, 8, 0, 0, v[i].get_mpz_t());
        }
        mpz_class packed;
        mpz_import(packed.get_mpz_t(), buf.size(), -1, 8, 0, 0, buf.data());
        return packed;
    };

    mpz_class prod = pack(a) * pack(b);

    size_t out_len = a.size() + b.size() - 1;
    std::vector<std::uint64_t> buf(out_len * slot_words + 1, 0);
    size_t count = 0;
    mpz_export(buf.data(), &count, -1, 8, 0, 0, prod.get_mpz_t());
    std::vector<mpz_class> out(out_len);
    for (size_t i = 0; i < out_len; ++i)
        mpz_import(out[i].get_mpz_t(), slot_words, -1, 8, 0, 0, buf.data() + i * slot_words);
    return out;
}
}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPoly IntPoly::monomial(int degree, long coefficient) {
    std::vector<mpz_class> c(static_cast<size_t>(degree) + 1, kZero);
    c.back() = coefficient;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    // Kronecker pays off for large balanced products; the Gleason squaring
    // chain (all coefficients nonnegative) is exactly that case
    if (coeffs_.size() > 128 && o.coeffs_.size() > 128 && all_nonnegative(coeffs_) &&
        all_nonnegative(o.coeffs_))
        return IntPoly(kronecker_mul(coeffs_, o.coeffs_));
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, kZero);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            if (o.coeffs_[j] != 0)
                mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(),
                           o.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact_by_monic(const IntPoly& d) const {
    if (d.is_zero()) throw UsageError("division by the zero polynomial");
    if (d.coeffs_.back() != 1) throw UsageError("divisor must be monic");
    if (degree() < d.degree()) throw ConsistencyError("exact division with low-degree dividend");
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quot(static_cast<size_t>(degree() - d.degree()) + 1, kZero);
    for (size_t qi = quot.size(); qi-- > 0;) {
        mpz_class& lead = rem[qi + static_cast<size_t>(d.degree())];
        if (lead == 0) continue;
        quot[qi] = lead;
        for (size_t j = 0; j < d.coeffs_.size(); ++j)
            mpz_submul(rem[qi + j].get_mpz_t(), quot[qi].get_mpz_t(), d.coeffs_[j].get_mpz_t());
    }
    for (const mpz_class& r : rem)
        if (r != 0) throw ConsistencyError("exact polynomial division left a remainder");
    return IntPoly(std::move(quot));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<mpz_class> out(coeffs_.size() - 1, kZero);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPoly(std::move(out));
}

mpz_class IntPoly::eval_integer(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

int IntPoly::sign_at_dyadic(const mpz_class& num, unsigned k) const {
    // sign of sum c_i num^i 2^(k (d - i))
    if (is_zero()) return 0;
    mpz_class acc = coeffs_.back(), term;
    for (size_t i = coeffs_.size() - 1; i-- > 0;) {
        acc *= num;
        if (coeffs_[i] != 0) {
            term = coeffs_[i];
            mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                         k * static_cast<unsigned>(coeffs_.size() - 1 - i));
            acc += term;
        }
    }
    return sgn(acc);
}

std::string IntPoly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += sgn(c) > 0 ? "+" : "-";
        else if (sgn(c) < 0) out += "-";
        mpz_class a = abs(c);
        std::string mag = a.get_str();
        if (i == 0) {
            out += mag;
        } else {
            if (a != 1) out += mag;
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qnp
