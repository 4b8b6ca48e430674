#include "kdyck/graded.hpp"

#include <array>
#include <stdexcept>

#include "kdyck/maps.hpp"
#include "kdyck/tableau.hpp"

namespace kdyck {

namespace {
constexpr std::array<std::pair<Statistic, std::string_view>, 6> kRegistry = {{
    {Statistic::Area, "area"},
    {Statistic::Dinv, "dinv"},
    {Statistic::Bounce, "bounce"},
    {Statistic::Depth, "depth"},
    {Statistic::Run, "run"},
    {Statistic::Ret, "ret"},
}};
}

Statistic statistic_from_name(std::string_view name) {
    for (const auto& [stat, stat_name] : kRegistry)
        if (stat_name == name) return stat;
    throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

std::string_view statistic_name(Statistic stat) {
    for (const auto& [registered, name] : kRegistry)
        if (registered == stat) return name;
    throw std::logic_error("statistic missing from registry");
}

const std::vector<Statistic>& all_statistics() {
    static const std::vector<Statistic> all = [] {
        std::vector<Statistic> v;
        for (const auto& [stat, name] : kRegistry) v.push_back(stat);
        return v;
    }();
    return all;
}

int evaluate_statistic(Statistic stat, const DyckPath& path) {
    switch (stat) {
        case Statistic::Area: return area(path).total;
        case Statistic::Dinv: return dinv(path);
        case Statistic::Bounce: return bounce(path).total;
        case Statistic::Depth: return depth(path).total;
        case Statistic::Run: return run(path);
        case Statistic::Ret: return ret(path);
    }
    throw std::logic_error("unhandled statistic");
}

QTPolynomial graded_poly(const std::vector<DyckPath>& paths, Statistic stat_q,
                         Statistic stat_t) {
    QTPolynomial sum;
    for (const DyckPath& path : paths)
        sum.add_term(evaluate_statistic(stat_q, path), evaluate_statistic(stat_t, path), 1);
    return sum;
}

QTPolynomial class_poly(const KVector& kvec, Statistic stat_q, Statistic stat_t,
                        std::optional<int> prefix, const EnumerationOptions& opts) {
    QTPolynomial sum;
    for (const KVector& rearranged : rearrangements(kvec)) {
        std::vector<int> parts;
        if (prefix) parts.push_back(*prefix);
        parts.insert(parts.end(), rearranged.parts().begin(), rearranged.parts().end());
        sum += graded_poly(enumerate_paths(KVector(std::move(parts)), opts), stat_q, stat_t);
    }
    return sum;
}

SymmetryResult symmetry_check(const QTPolynomial& poly) {
    SymmetryResult result;
    result.difference = poly - poly.swapped();
    result.symmetric = result.difference.is_zero();
    return result;
}

QTPolynomial closed_form_abc(int a, int b, int c) {
    constexpr int kBudget = 12;
    if (a < 1 || b < 1 || c < 1 || a > kBudget || b > kBudget || c > kBudget)
        throw std::invalid_argument("closed form expansion supports 1 <= a,b,c <= " +
                                    std::to_string(kBudget));

    // Truncated power series in x1, x2, x3 with QTPolynomial coefficients.
    using Series = std::vector<std::vector<std::vector<QTPolynomial>>>;
    Series series(static_cast<size_t>(a) + 1,
                  std::vector<std::vector<QTPolynomial>>(
                      static_cast<size_t>(b) + 1,
                      std::vector<QTPolynomial>(static_cast<size_t>(c) + 1)));
    series[0][0][0] = QTPolynomial::monomial(0, 0);

    // Multiply in place by 1/(1 - ratio * x_var): the prefix recurrence
    // new[i] = old[i] + ratio * new[i-1] along the chosen variable.
    auto geometric = [&](int var, const QTPolynomial& ratio) {
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j)
                for (int l = 0; l <= c; ++l) {
                    int pi = var == 0 ? i - 1 : i;
                    int pj = var == 1 ? j - 1 : j;
                    int pl = var == 2 ? l - 1 : l;
                    if (pi < 0 || pj < 0 || pl < 0) continue;
                    series[static_cast<size_t>(i)][static_cast<size_t>(j)]
                          [static_cast<size_t>(l)] +=
                        ratio * series[static_cast<size_t>(pi)][static_cast<size_t>(pj)]
                                      [static_cast<size_t>(pl)];
                }
    };

    geometric(0, QTPolynomial::monomial(2, 0));  // 1/(1 - q^2 x1)
    geometric(0, QTPolynomial::monomial(0, 2));  // 1/(1 - t^2 x1)
    geometric(0, QTPolynomial::monomial(1, 1));  // 1/(1 - q t x1)
    geometric(1, QTPolynomial::monomial(0, 0));  // 1/(1 - x2)
    geometric(1, QTPolynomial::monomial(1, 0));  // 1/(1 - q x2)
    geometric(1, QTPolynomial::monomial(0, 1));  // 1/(1 - t x2)
    geometric(2, QTPolynomial::monomial(0, 0));  // 1/(1 - x3)

    // Numerator: 1 - x2 + (qt - q^2 t - q t^2) x1 x2 + q^2 t^2 x1 x2^2.
    QTPolynomial middle = QTPolynomial::monomial(1, 1);
    middle -= QTPolynomial::monomial(2, 1);
    middle -= QTPolynomial::monomial(1, 2);
    struct NumeratorTerm {
        int dx1, dx2;
        QTPolynomial coeff;
    };
    const std::vector<NumeratorTerm> numerator = {
        {0, 0, QTPolynomial::monomial(0, 0)},
        {0, 1, QTPolynomial::monomial(0, 0, -1)},
        {1, 1, middle},
        {1, 2, QTPolynomial::monomial(2, 2)},
    };

    QTPolynomial coefficient;
    for (const NumeratorTerm& term : numerator) {
        int i = a - term.dx1, j = b - term.dx2;
        if (i < 0 || j < 0) continue;
        coefficient += term.coeff *
                       series[static_cast<size_t>(i)][static_cast<size_t>(j)]
                             [static_cast<size_t>(c)];
    }
    return coefficient;
}

}  // namespace kdyck
