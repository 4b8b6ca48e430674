#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdyck/enumerate.hpp"
#include "kdyck/qt_polynomial.hpp"

namespace kdyck {

// Closed registry of path statistics usable as polynomial gradings; adding
// one requires a registry entry so the CLI and library stay in lockstep.
enum class Statistic { Area, Dinv, Bounce, Depth, Run, Ret };

Statistic statistic_from_name(std::string_view name);  // throws on unknown
std::string_view statistic_name(Statistic stat);
const std::vector<Statistic>& all_statistics();

int evaluate_statistic(Statistic stat, const DyckPath& path);

// sum over paths of q^{stat_q} t^{stat_t}.
QTPolynomial graded_poly(const std::vector<DyckPath>& paths, Statistic stat_q,
                         Statistic stat_t);

// Graded sum over the whole rearrangement class of kvec, optionally with a
// fixed first part prepended to every rearrangement.
QTPolynomial class_poly(const KVector& kvec, Statistic stat_q, Statistic stat_t,
                        std::optional<int> prefix = std::nullopt,
                        const EnumerationOptions& opts = {});

struct SymmetryResult {
    bool symmetric = false;
    QTPolynomial difference;  // p(q,t) - p(t,q)
};

SymmetryResult symmetry_check(const QTPolynomial& poly);

// Coefficient of x1^a x2^b x3^c in the rational function
//
//      1 - x2 + q*t*x1*x2 - q^2*t*x1*x2 - q*t^2*x1*x2 + q^2*t^2*x1*x2^2
//   -------------------------------------------------------------------
//   (1-q^2*x1)(1-t^2*x1)(1-q*t*x1)(1-x2)(1-q*x2)(1-t*x2)(1-x3)
//
// extracted by exact truncated power-series expansion. Equals the
// (area, depth) graded polynomial over D_(a,b,c); independent of c.
QTPolynomial closed_form_abc(int a, int b, int c);

}  // namespace kdyck
