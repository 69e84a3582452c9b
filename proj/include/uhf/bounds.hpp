#ifndef UHF_BOUNDS_HPP
#define UHF_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "uhf/rational.hpp"

namespace uhf {

/// The three universality notions a lower bound can refer to.
enum class Kind { U, DeltaU, SU };

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);  // "u" | "du" | "su"

/// A bound or threshold value: exact rational when the formula admits one
/// (all-rational arithmetic, or an integer logarithm), double otherwise.
/// `approx` is always populated.
struct BoundValue {
    std::optional<Rat> exact;
    double approx = 0.0;

    static BoundValue of(const Rat& r) { return BoundValue{r, r.to_double()}; }
    static BoundValue of(double d) { return BoundValue{std::nullopt, d}; }
};

struct LogValue {
    bool exact = false;
    std::uint32_t integer = 0;  // valid when exact
    double value = 0.0;
};

/// log_base(n) with exact integer detection (n a power of base).
LogValue log_base(std::uint64_t n, unsigned base);

enum class ThresholdState { applicable, inapplicable, negative_discriminant };

struct Threshold {
    ThresholdState state = ThresholdState::inapplicable;
    BoundValue value;  // meaningful iff state == applicable
};

/// Coefficients of the quadratic a*x^2 - b*x + c = 0 whose smaller root is
/// the strong-form threshold.
struct QuadCoeffs {
    Rat a;
    BoundValue b, c;
    double discriminant = 0.0;
};

/// The four regime thresholds for a given (n, m):
///   eps1 - collision form, needs n > m^2
///   eps2 - the Plotkin-style floor (n-m)/(m(n-1)), always defined
///   eps3 - difference form, needs n > m
///   eps4 - strong form, smaller quadratic root, needs n > 2^m
struct ThresholdSet {
    std::uint64_t n = 0;
    unsigned m = 0;
    Threshold eps1, eps2, eps3, eps4;
    QuadCoeffs quad;
};

/// (n-m)/(m(n-1)): the least epsilon any (N; n, m) collision family can
/// achieve; identical to eps2.
Rat plotkin_eps_floor(std::uint64_t n, unsigned m);

/// Least epsilon below which no family of the given kind exists: the
/// Plotkin floor for collisions, 1/m for the difference and strong forms.
Rat kind_floor(Kind kind, std::uint64_t n, unsigned m);

/// The three classical lower bounds on N (exact rational):
///   U:      n(m-1) / (n(eps*m - 1) + m^2(1 - eps))
///   DeltaU: n(m-1) / (m - n + m*eps*(n-1))
///   SU:     1 + n(m-1)^2 / (m*eps*(n-1) + m - n)
/// Throws Inapplicable when the denominator is not positive.
BoundValue bound_old(Kind kind, std::uint64_t n, unsigned m, const Rat& eps);

/// The Singleton-derived lower bounds on N:
///   U:      (log_m n - 1) / eps
///   DeltaU: (log_2 n + m - 1) / (m - 2 + 2 eps)
///   SU:     m log_2 n / (m - 2(1 - eps))
BoundValue bound_new(Kind kind, std::uint64_t n, unsigned m, const Rat& eps);

/// Same formulas evaluated in plain doubles (for crossover analysis at
/// irrational epsilon values).
double bound_old_at(Kind kind, std::uint64_t n, unsigned m, double eps);
double bound_new_at(Kind kind, std::uint64_t n, unsigned m, double eps);

ThresholdSet thresholds(std::uint64_t n, unsigned m);

/// Smallest integer N >= raw with eps*N integral (collision and difference
/// forms) or eps*N/m integral (strong form). Stepped over admissible
/// multiples rather than computed in closed form.
std::uint64_t integral_adjust(const BoundValue& raw, const Rat& eps, Kind kind, unsigned m);

enum class Dominance { old_bound, new_bound, equal, old_inapplicable, new_inapplicable };
enum class Regime { new_regime, old_regime, none };

const char* dominance_name(Dominance d);

struct BoundReport {
    Kind kind = Kind::U;
    std::uint64_t n = 0;
    unsigned m = 0;
    Rat eps;
    std::optional<BoundValue> old_raw, new_raw;
    std::optional<std::uint64_t> old_adjusted, new_adjusted;
    Threshold threshold;   // the kind's regime threshold
    Dominance dominant = Dominance::equal;  // verdict on the raw values
    Regime regime = Regime::none;           // side of the threshold eps falls on
    bool boundary = false;                  // eps within comparison slack of the threshold
};

/// Full evaluation at one (kind, n, m, eps): both raw bounds, both adjusted
/// values, the regime threshold, and the dominance verdict. The verdict
/// compares raw values (relative slack 1e-9); integrality-adjusted values
/// never drive it. Throws OutOfRange below the kind's floor.
BoundReport compare_bounds(Kind kind, std::uint64_t n, unsigned m, const Rat& eps);

struct SweepRequest {
    Kind kind = Kind::U;
    std::uint64_t n_begin = 0, n_end = 0, n_step = 1;
    unsigned m_begin = 0, m_end = 0;
    std::vector<Rat> eps_grid;
    std::uint64_t max_rows = 1'000'000;
};

/// CSV with columns kind,n,m,eps,old_raw,new_raw,old_N,new_N,threshold,
/// dominant in n-major, then m, then eps order. Grid points below the floor
/// get dominant=out_of_range, invalid combinations dominant=invalid, with
/// "na" in the value columns.
void run_sweep(const SweepRequest& req, std::ostream& out);

/// "%.12g" formatting used for every floating-point value we emit.
std::string fmt_double(double v);

}  // namespace uhf

#endif
