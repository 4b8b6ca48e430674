#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <map>
#include <string>
#include <utility>

namespace kdyck {

// Exact sparse bivariate polynomial in q and t with arbitrary-precision
// integer coefficients. No zero coefficients are stored; exponents are
// nonnegative.
class QTPolynomial {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    QTPolynomial() = default;
    static QTPolynomial monomial(int q_exp, int t_exp, mpz_class coeff = 1);

    void add_term(int q_exp, int t_exp, const mpz_class& coeff);

    QTPolynomial& operator+=(const QTPolynomial& other);
    QTPolynomial& operator-=(const QTPolynomial& other);
    QTPolynomial& operator*=(const QTPolynomial& other);
    friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
    friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
    friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);

    // The polynomial with q and t exchanged.
    QTPolynomial swapped() const;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, mpz_class>& terms() const { return terms_; }

    // Value at q = t = 1.
    mpz_class coefficient_sum() const;

    // Canonical text: terms ascending by (q exponent, t exponent), e.g.
    // "q + t", "-q*t^3 + q*t^4 + q^3*t - q^4*t", "0".
    std::string to_string() const;

    // Terms as [{"q": i, "t": j, "c": "<decimal>"}, ...] in canonical order;
    // coefficients as decimal strings.
    nlohmann::json terms_json() const;
    static QTPolynomial from_terms_json(const nlohmann::json& terms);

    bool operator==(const QTPolynomial&) const = default;

private:
    std::map<Key, mpz_class> terms_;
};

}  // namespace kdyck
