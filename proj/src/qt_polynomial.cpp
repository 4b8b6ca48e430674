#include "kdyck/qt_polynomial.hpp"

#include <stdexcept>

namespace kdyck {

QTPolynomial QTPolynomial::monomial(int q_exp, int t_exp, mpz_class coeff) {
    QTPolynomial p;
    p.add_term(q_exp, t_exp, coeff);
    return p;
}

void QTPolynomial::add_term(int q_exp, int t_exp, const mpz_class& coeff) {
    if (q_exp < 0 || t_exp < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& other) {
    for (const auto& [key, coeff] : other.terms_) add_term(key.first, key.second, coeff);
    return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& other) {
    for (const auto& [key, coeff] : other.terms_)
        add_term(key.first, key.second, mpz_class(-coeff));
    return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
    QTPolynomial product;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            product.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return product;
}

QTPolynomial& QTPolynomial::operator*=(const QTPolynomial& other) {
    *this = *this * other;
    return *this;
}

QTPolynomial QTPolynomial::swapped() const {
    QTPolynomial out;
    for (const auto& [key, coeff] : terms_) out.add_term(key.second, key.first, coeff);
    return out;
}

mpz_class QTPolynomial::coefficient_sum() const {
    mpz_class sum = 0;
    for (const auto& [key, coeff] : terms_) sum += coeff;
    return sum;
}

std::string QTPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
        mpz_class magnitude = abs(coeff);
        if (first) {
            if (coeff < 0) out += '-';
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        std::string factors;
        if (key.first > 0) factors += key.first == 1 ? "q" : "q^" + std::to_string(key.first);
        if (key.second > 0) {
            if (!factors.empty()) factors += '*';
            factors += key.second == 1 ? "t" : "t^" + std::to_string(key.second);
        }
        if (factors.empty()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) out += magnitude.get_str() + "*";
            out += factors;
        }
    }
    return out;
}

nlohmann::json QTPolynomial::terms_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, coeff] : terms_)
        terms.push_back({{"q", key.first}, {"t", key.second}, {"c", coeff.get_str()}});
    return terms;
}

QTPolynomial QTPolynomial::from_terms_json(const nlohmann::json& terms) {
    QTPolynomial out;
    for (const auto& term : terms) {
        mpz_class coeff(term.at("c").get<std::string>());
        out.add_term(term.at("q").get<int>(), term.at("t").get<int>(), coeff);
    }
    return out;
}

}  // namespace kdyck
