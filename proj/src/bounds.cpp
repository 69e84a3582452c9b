#include "uhf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace uhf {

namespace {

constexpr std::uint64_t max_domain = 1'000'000'000'000'000ull;  // 10^15
constexpr double equal_slack = 1e-9;     // raw-bound agreement
constexpr double regime_slack = 1e-12;   // rational-vs-real threshold comparison

void check_query(std::uint64_t n, unsigned m) {
    if (m < 2 || m > 1024) fail(Err::BadParams, "range size m must be in [2, 1024]");
    if (n <= m) fail(Err::BadParams, "domain size n must exceed m");
    if (n > max_domain) fail(Err::BadParams, "domain size n above 10^15 is not supported");
}

void check_eps(const Rat& eps) {
    if (eps <= Rat(0) || eps > Rat(1)) fail(Err::BadParams, "epsilon must be in (0, 1]");
}

double rel_gap(double x, double y) {
    const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) / scale;
}

std::optional<std::uint64_t> isqrt_exact(std::uint64_t v) {
    const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (std::uint64_t c = r > 2 ? r - 2 : 0; c <= r + 2; ++c)
        if (c * c == v) return c;
    return std::nullopt;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x.num < 0) return std::nullopt;
    const auto sn = isqrt_exact(static_cast<std::uint64_t>(x.num));
    const auto sd = isqrt_exact(static_cast<std::uint64_t>(x.den));
    if (sn && sd) return Rat(static_cast<std::int64_t>(*sn), static_cast<std::int64_t>(*sd));
    return std::nullopt;
}

}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::U: return "u";
        case Kind::DeltaU: return "du";
        case Kind::SU: return "su";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    if (s == "u") return Kind::U;
    if (s == "du") return Kind::DeltaU;
    if (s == "su") return Kind::SU;
    fail(Err::Parse, "unknown family kind '" + s + "' (expected u, du or su)");
}

LogValue log_base(std::uint64_t n, unsigned base) {
    if (base < 2 || n == 0) fail(Err::BadParams, "logarithm needs base >= 2 and n >= 1");
    std::uint64_t p = 1;
    std::uint32_t t = 0;
    while (p < n && p <= UINT64_MAX / base) {
        p *= base;
        ++t;
    }
    if (p == n) return LogValue{true, t, static_cast<double>(t)};
    const double v = std::log2(static_cast<double>(n)) / std::log2(static_cast<double>(base));
    return LogValue{false, 0, v};
}

Rat plotkin_eps_floor(std::uint64_t n, unsigned m) {
    check_query(n, m);
    return Rat::make(static_cast<__int128>(n) - m, static_cast<__int128>(m) * (n - 1));
}

Rat kind_floor(Kind kind, std::uint64_t n, unsigned m) {
    if (kind == Kind::U) return plotkin_eps_floor(n, m);
    check_query(n, m);
    return Rat(1, m);
}

BoundValue bound_old(Kind kind, std::uint64_t n, unsigned m, const Rat& eps) {
    check_query(n, m);
    check_eps(eps);
    const auto nn = static_cast<std::int64_t>(n);
    if (kind == Kind::U) {
        // denominator n(eps*m - 1) + m^2(1 - eps) = eps(nm - m^2) + m^2 - n
        const Rat den = eps * Rat::make((__int128)nn * m - (__int128)m * m, 1) +
                        Rat::make((__int128)m * m - nn, 1);
        if (den <= Rat(0))
            fail(Err::Inapplicable, "classical collision bound vacuous: denominator <= 0");
        return BoundValue::of(Rat::make((__int128)nn * (m - 1), 1) / den);
    }
    const Rat den = eps * Rat::make((__int128)m * (nn - 1), 1) + Rat(static_cast<std::int64_t>(m) - nn);
    if (den <= Rat(0))
        fail(Err::Inapplicable, "classical bound vacuous: denominator <= 0");
    if (kind == Kind::DeltaU) return BoundValue::of(Rat::make((__int128)nn * (m - 1), 1) / den);
    return BoundValue::of(Rat(1) + Rat::make((__int128)nn * (m - 1) * (m - 1), 1) / den);
}

BoundValue bound_new(Kind kind, std::uint64_t n, unsigned m, const Rat& eps) {
    check_query(n, m);
    check_eps(eps);
    if (kind == Kind::U) {
        const LogValue lg = log_base(n, m);
        if (lg.exact) return BoundValue::of(Rat(static_cast<std::int64_t>(lg.integer) - 1) / eps);
        return BoundValue::of((lg.value - 1.0) / eps.to_double());
    }
    const LogValue lg = log_base(n, 2);
    const Rat den = Rat(static_cast<std::int64_t>(m) - 2) + Rat(2) * eps;
    if (den <= Rat(0)) fail(Err::Inapplicable, "Singleton-derived bound vacuous: denominator <= 0");
    if (kind == Kind::DeltaU) {
        if (lg.exact)
            return BoundValue::of(Rat(static_cast<std::int64_t>(lg.integer) + m - 1) / den);
        return BoundValue::of((lg.value + m - 1.0) / den.to_double());
    }
    if (lg.exact)
        return BoundValue::of(Rat(static_cast<std::int64_t>(m) * lg.integer) / den);
    return BoundValue::of(m * lg.value / den.to_double());
}

double bound_old_at(Kind kind, std::uint64_t n, unsigned m, double eps) {
    check_query(n, m);
    const double nd = static_cast<double>(n);
    if (kind == Kind::U) {
        const double den = nd * (eps * m - 1.0) + double(m) * m * (1.0 - eps);
        if (den <= 0) fail(Err::Inapplicable, "classical collision bound vacuous");
        return nd * (m - 1.0) / den;
    }
    const double den = m * eps * (nd - 1.0) + m - nd;
    if (den <= 0) fail(Err::Inapplicable, "classical bound vacuous");
    if (kind == Kind::DeltaU) return nd * (m - 1.0) / den;
    return 1.0 + nd * (m - 1.0) * (m - 1.0) / den;
}

double bound_new_at(Kind kind, std::uint64_t n, unsigned m, double eps) {
    check_query(n, m);
    if (kind == Kind::U) return (log_base(n, m).value - 1.0) / eps;
    const double den = m - 2.0 + 2.0 * eps;
    if (den <= 0) fail(Err::Inapplicable, "Singleton-derived bound vacuous");
    if (kind == Kind::DeltaU) return (log_base(n, 2).value + m - 1.0) / den;
    return m * log_base(n, 2).value / den;
}

namespace {

// overwrite the double value with an exact rational when it fits int64
void try_exact(BoundValue& v, const std::function<Rat()>& compute) {
    try {
        v = BoundValue::of(compute());
    } catch (const Error& e) {
        if (e.kind() != Err::Overflow) throw;
    }
}

}  // namespace

ThresholdSet thresholds(std::uint64_t n, unsigned m) {
    check_query(n, m);
    ThresholdSet ts;
    ts.n = n;
    ts.m = m;
    const auto nn = static_cast<__int128>(n);
    const auto mm = static_cast<__int128>(m);
    const double nd = static_cast<double>(n), md = m;

    ts.eps2 = {ThresholdState::applicable, BoundValue::of(plotkin_eps_floor(n, m))};

    // collision-form threshold, defined for n > m^2
    if (nn > mm * mm) {
        const LogValue lg = log_base(n, m);
        BoundValue v = BoundValue::of(
            (nd - md * md) * (lg.value - 1.0) /
            ((md * nd - md * md) * lg.value + md * md + nd - 2 * md * nd));
        if (lg.exact)
            try_exact(v, [&] {
                const __int128 num = (nn - mm * mm) * (lg.integer - 1);
                const __int128 den = (mm * nn - mm * mm) * lg.integer + mm * mm + nn - 2 * mm * nn;
                return Rat::make(num, den);
            });
        ts.eps1 = {ThresholdState::applicable, v};
    }

    // difference-form threshold, defined for n > m (always true here)
    {
        const LogValue lg = log_base(n, 2);
        const double lgm = lg.value + md - 1.0;
        BoundValue v = BoundValue::of((nd * (md - 1.0) * (md - 2.0) + lgm * (nd - md)) /
                                      (md * (nd - 1.0) * lgm - 2.0 * nd * (md - 1.0)));
        if (lg.exact)
            try_exact(v, [&] {
                const __int128 lgi = static_cast<__int128>(lg.integer) + m - 1;
                const __int128 num = nn * (mm - 1) * (mm - 2) + lgi * (nn - mm);
                const __int128 den = mm * (nn - 1) * lgi - 2 * nn * (mm - 1);
                return Rat::make(num, den);
            });
        ts.eps3 = {ThresholdState::applicable, v};
    }

    // strong-form threshold: smaller root of a x^2 - b x + c = 0
    {
        const LogValue lg = log_base(n, 2);
        ts.quad.a = Rat::make(2 * (nn - 1), 1);
        ts.quad.b =
            BoundValue::of(md * (nd - 1.0) * (lg.value - 3.0) + 6.0 * nd - 2.0 * md - 4.0);
        ts.quad.c =
            BoundValue::of((md - 2.0) * (nd * md - 2.0 * nd + 1.0) + (nd - md) * lg.value);
        if (lg.exact) {
            try_exact(ts.quad.b, [&] {
                return Rat::make(
                    mm * (nn - 1) * (static_cast<__int128>(lg.integer) - 3) + 6 * nn - 2 * mm - 4,
                    1);
            });
            try_exact(ts.quad.c, [&] {
                return Rat::make((mm - 2) * (nn * mm - 2 * nn + 1) +
                                     (nn - mm) * static_cast<__int128>(lg.integer),
                                 1);
            });
        }
        ts.quad.discriminant = ts.quad.b.approx * ts.quad.b.approx -
                               4.0 * ts.quad.a.to_double() * ts.quad.c.approx;

        const bool in_range = m < 63 && n > (std::uint64_t(1) << m);
        std::optional<Rat> exact_disc;
        if (ts.quad.b.exact && ts.quad.c.exact) {
            try {
                exact_disc =
                    *ts.quad.b.exact * *ts.quad.b.exact - Rat(4) * ts.quad.a * *ts.quad.c.exact;
                ts.quad.discriminant = exact_disc->to_double();
            } catch (const Error& e) {
                if (e.kind() != Err::Overflow) throw;
            }
        }

        if (!in_range) {
            ts.eps4 = {ThresholdState::inapplicable, {}};
        } else if (exact_disc ? (*exact_disc < Rat(0)) : (ts.quad.discriminant < 0)) {
            ts.eps4 = {ThresholdState::negative_discriminant, {}};
        } else {
            BoundValue v = BoundValue::of(
                (ts.quad.b.approx - std::sqrt(std::max(0.0, ts.quad.discriminant))) /
                (2.0 * ts.quad.a.to_double()));
            if (exact_disc)
                if (auto root = exact_sqrt(*exact_disc))
                    try_exact(v, [&] { return (*ts.quad.b.exact - *root) / (Rat(2) * ts.quad.a); });
            ts.eps4 = {ThresholdState::applicable, v};
        }
    }
    return ts;
}

std::uint64_t integral_adjust(const BoundValue& raw, const Rat& eps, Kind kind, unsigned m) {
    check_eps(eps);
    __int128 modulus = eps.den;
    if (kind == Kind::SU) {
        const std::int64_t g = std::gcd(eps.num, static_cast<std::int64_t>(m));
        modulus = (__int128)eps.den * (m / g);
    }
    if (modulus > (__int128)UINT64_MAX / 4) fail(Err::Overflow, "integrality modulus too large");
    const auto step = static_cast<std::uint64_t>(modulus);

    if (!(raw.approx < 1e18)) fail(Err::Overflow, "bound value too large to adjust");

    auto reached = [&](std::uint64_t candidate) {
        if (raw.exact)
            return (__int128)candidate * raw.exact->den >= (__int128)raw.exact->num;
        const double slack = equal_slack * std::max(1.0, std::fabs(raw.approx));
        return static_cast<double>(candidate) >= raw.approx - slack;
    };

    // start a few multiples below the estimate, then walk up
    std::uint64_t k = 1;
    const double est = raw.approx / static_cast<double>(step);
    if (est > 8.0) k = static_cast<std::uint64_t>(est) - 4;
    while (!reached(k * step)) ++k;
    return k * step;
}

const char* dominance_name(Dominance d) {
    switch (d) {
        case Dominance::old_bound: return "old";
        case Dominance::new_bound: return "new";
        case Dominance::equal: return "equal";
        case Dominance::old_inapplicable: return "old_inapplicable";
        case Dominance::new_inapplicable: return "new_inapplicable";
    }
    return "?";
}

BoundReport compare_bounds(Kind kind, std::uint64_t n, unsigned m, const Rat& eps) {
    check_query(n, m);
    check_eps(eps);
    BoundReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.m = m;
    rep.eps = eps;

    const Rat floor = kind_floor(kind, n, m);
    if (eps < floor)
        fail(Err::OutOfRange, "epsilon " + eps.str() + " is below the floor " + floor.str() +
                                  " for this family kind; no such family exists");

    try {
        rep.old_raw = bound_old(kind, n, m, eps);
    } catch (const Error& e) {
        if (e.kind() != Err::Inapplicable) throw;
    }
    try {
        rep.new_raw = bound_new(kind, n, m, eps);
    } catch (const Error& e) {
        if (e.kind() != Err::Inapplicable) throw;
    }

    const ThresholdSet ts = thresholds(n, m);
    switch (kind) {
        case Kind::U: rep.threshold = ts.eps1; break;
        case Kind::DeltaU: rep.threshold = ts.eps3; break;
        case Kind::SU: rep.threshold = ts.eps4; break;
    }

    if (rep.old_raw) rep.old_adjusted = integral_adjust(*rep.old_raw, eps, kind, m);
    if (rep.new_raw) rep.new_adjusted = integral_adjust(*rep.new_raw, eps, kind, m);

    if (!rep.old_raw) {
        rep.dominant = Dominance::old_inapplicable;
    } else if (!rep.new_raw) {
        rep.dominant = Dominance::new_inapplicable;
    } else if (rep.old_raw->exact && rep.new_raw->exact &&
               *rep.old_raw->exact == *rep.new_raw->exact) {
        rep.dominant = Dominance::equal;
    } else if (rel_gap(rep.old_raw->approx, rep.new_raw->approx) <= equal_slack) {
        rep.dominant = Dominance::equal;
    } else {
        rep.dominant = rep.new_raw->approx > rep.old_raw->approx ? Dominance::new_bound
                                                                 : Dominance::old_bound;
    }

    if (rep.threshold.state == ThresholdState::applicable) {
        const auto& thr = rep.threshold.value;
        if (thr.exact) {
            rep.boundary = (eps == *thr.exact);
            rep.regime = eps >= *thr.exact ? Regime::new_regime : Regime::old_regime;
        } else {
            const double gap = eps.to_double() - thr.approx;
            const double slack = regime_slack * std::max(1.0, std::fabs(thr.approx));
            rep.boundary = std::fabs(gap) <= slack;
            rep.regime = gap >= -slack ? Regime::new_regime : Regime::old_regime;
        }
    }
    return rep;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void run_sweep(const SweepRequest& req, std::ostream& out) {
    if (req.n_begin > req.n_end || req.m_begin > req.m_end || req.n_step == 0)
        fail(Err::BadParams, "malformed sweep ranges");
    const __int128 n_count = ((__int128)req.n_end - req.n_begin) / req.n_step + 1;
    const __int128 rows = n_count * (req.m_end - req.m_begin + 1) * (__int128)req.eps_grid.size();
    if (rows > (__int128)req.max_rows)
        fail(Err::RangeTooLarge, "sweep would emit more than " + std::to_string(req.max_rows) +
                                     " rows");

    out << "kind,n,m,eps,old_raw,new_raw,old_N,new_N,threshold,dominant\n";
    for (std::uint64_t n = req.n_begin; n <= req.n_end; n += req.n_step) {
        for (unsigned m = req.m_begin; m <= req.m_end; ++m) {
            for (const Rat& eps : req.eps_grid) {
                out << kind_name(req.kind) << ',' << n << ',' << m << ',' << eps.str() << ',';
                if (n <= m) {
                    out << "na,na,na,na,na,invalid\n";
                    continue;
                }
                try {
                    const BoundReport rep = compare_bounds(req.kind, n, m, eps);
                    if (rep.old_raw)
                        out << fmt_double(rep.old_raw->approx) << ',';
                    else
                        out << "na,";
                    if (rep.new_raw)
                        out << fmt_double(rep.new_raw->approx) << ',';
                    else
                        out << "na,";
                    if (rep.old_adjusted)
                        out << *rep.old_adjusted << ',';
                    else
                        out << "na,";
                    if (rep.new_adjusted)
                        out << *rep.new_adjusted << ',';
                    else
                        out << "na,";
                    if (rep.threshold.state == ThresholdState::applicable)
                        out << fmt_double(rep.threshold.value.approx) << ',';
                    else
                        out << "na,";
                    out << dominance_name(rep.dominant) << '\n';
                } catch (const Error& e) {
                    if (e.kind() == Err::OutOfRange)
                        out << "na,na,na,na,na,out_of_range\n";
                    else
                        throw;
                }
            }
        }
    }
}

}  // namespace uhf
