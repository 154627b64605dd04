#include "triq/family.hpp"

#include <algorithm>
#include <cmath>

#include "triq/acin.hpp"

namespace triq {

namespace {

constexpr double kCosTol = 1e-9;    // |cos phi| may exceed 1 by this much
constexpr double kRadTol = 1e-10;   // lambda0^2 may undershoot 0 by this much
constexpr double kZeroC = 1e-12;    // concurrence treated as zero

struct RawParams {
    double l1, l2, l3, l4;
    double l0sq;       // before clamping
    double cos_phi;    // raw, may leave [-1,1]; 0 when c12*c13 = 0
    bool phase_active; // c12 > 0 and c13 > 0
};

RawParams raw_at(const TangleTarget& t, double l4) {
    RawParams r{};
    double st = std::sqrt(t.tau3);
    r.l4 = l4;
    r.l1 = st / (2.0 * l4);
    r.l2 = l4 * t.c12 / st;
    r.l3 = l4 * t.c13 / st;
    r.l0sq = 1.0 - r.l1 * r.l1 - r.l2 * r.l2 - r.l3 * r.l3 - l4 * l4;
    r.phase_active = t.c12 > kZeroC && t.c13 > kZeroC;
    if (r.phase_active) {
        double l0 = std::sqrt(std::max(0.0, r.l0sq));
        double num = 4.0 * r.l2 * r.l2 * r.l3 * r.l3 + 4.0 * r.l0sq * l4 * l4 -
                     t.c23 * t.c23;
        double den = 8.0 * l0 * r.l2 * r.l3 * l4;
        r.cos_phi = den > 0.0 ? num / den
                              : (num == 0.0 ? 0.0 : std::copysign(HUGE_VAL, num));
    } else {
        r.cos_phi = 0.0;
    }
    return r;
}

// Feasibility of a lambda4 value: all lambdas in [0,1], lambda0 real, and
// either |cos phi| <= 1 or (when the phase is inactive) the achieved C23
// equal to the target.
bool feasible(const TangleTarget& t, double l4, double tol_scale = 1.0) {
    if (l4 <= 0.0 || l4 > 1.0 + 1e-12) return false;
    RawParams r = raw_at(t, l4);
    if (r.l1 > 1.0 + 1e-12 || r.l2 > 1.0 + 1e-12 || r.l3 > 1.0 + 1e-12)
        return false;
    if (r.l0sq < -kRadTol * tol_scale) return false;
    if (r.phase_active) return std::abs(r.cos_phi) <= 1.0 + kCosTol * tol_scale;
    double l0 = std::sqrt(std::max(0.0, r.l0sq));
    double c23_achieved = 2.0 * std::abs(r.l2 * r.l3 - l0 * r.l4);
    return std::abs(c23_achieved - t.c23) <= 1e-9 * tol_scale;
}

AcinParams assemble(const TangleTarget& t, double l4, bool clamped) {
    RawParams r = raw_at(t, l4);
    if (!clamped) {
        if (r.l0sq < -kRadTol)
            throw NegativeRadicandError("lambda0^2 = " + std::to_string(r.l0sq) +
                                        " at lambda4 = " + std::to_string(l4));
        if (r.l1 > 1.0 + 1e-9 || r.l2 > 1.0 + 1e-9 || r.l3 > 1.0 + 1e-9)
            throw OutOfIntervalError("lambda_i > 1 at lambda4 = " + std::to_string(l4));
        if (r.phase_active && std::abs(r.cos_phi) > 1.0 + kCosTol)
            throw OutOfIntervalError("|cos phi| = " + std::to_string(std::abs(r.cos_phi)) +
                                     " at lambda4 = " + std::to_string(l4));
    }
    AcinParams p;
    p.l1 = r.l1;
    p.l2 = std::min(r.l2, 1.0);
    p.l3 = std::min(r.l3, 1.0);
    p.l4 = r.l4;
    p.l0 = std::sqrt(std::max(0.0, r.l0sq));
    if (r.phase_active) {
        double c = std::clamp(r.cos_phi, -1.0, 1.0);
        p.phi = std::acos(c);
    } else {
        p.phi = 0.0;
    }
    return p;
}

// Real roots of a real-coefficient polynomial (highest degree first) via the
// companion matrix.
std::vector<double> real_roots(std::vector<double> coeff) {
    // strip leading near-zeros
    double scale = 0.0;
    for (double c : coeff) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {};
    std::size_t first = 0;
    while (first < coeff.size() && std::abs(coeff[first]) < 1e-14 * scale) ++first;
    coeff.erase(coeff.begin(), coeff.begin() + first);
    int n = static_cast<int>(coeff.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) comp(0, k) = -coeff[k + 1] / coeff[0];
    for (int k = 1; k < n; ++k) comp(k, k - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<double> roots;
    for (int k = 0; k < n; ++k) {
        auto ev = es.eigenvalues()(k);
        // Generous filter: double roots split into conjugate pairs with
        // O(sqrt(eps)) imaginary parts. A false near-real root only adds a
        // harmless extra cut (cuts are sampling hints, later polished), while
        // a dropped real root can lose an isolated feasible point.
        if (std::abs(ev.imag()) < 1e-4 * std::max(1.0, std::abs(ev.real())))
            roots.push_back(ev.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double bisect_boundary(const TangleTarget& t, double inside, double outside) {
    // invariant: feasible(inside), !feasible(outside)
    for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-13; ++it) {
        double mid = 0.5 * (inside + outside);
        if (feasible(t, mid))
            inside = mid;
        else
            outside = mid;
    }
    return inside;
}

// The |cos phi| = 1 conditions written as signed equations in lambda4: with
// phi = pi the achieved C23 is 2(l2 l3 + l0 l4), with phi = 0 it is
// 2|l2 l3 - l0 l4|. Simple roots of these polish the companion-matrix seeds,
// whose double roots are only accurate to ~sqrt(eps).
double polish_cut(const TangleTarget& t, double seed_l4, double lo, double hi) {
    auto fvals = [&](double l4) -> std::array<double, 3> {
        RawParams r = raw_at(t, l4);
        double l0 = std::sqrt(std::max(0.0, r.l0sq));
        double s = 2.0 * (r.l2 * r.l3 + l0 * r.l4);
        double d = 2.0 * (r.l2 * r.l3 - l0 * r.l4);
        return {s - t.c23, d - t.c23, d + t.c23};
    };
    auto f0 = fvals(seed_l4);
    int which = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(f0[k]) < std::abs(f0[which])) which = k;
    // bracket around the seed
    double h = std::max(1e-7, 1e-6 * std::abs(seed_l4));
    double a = std::max(lo, seed_l4 - h), b = std::min(hi, seed_l4 + h);
    double fa = fvals(a)[which], fb = fvals(b)[which];
    for (int grow = 0; grow < 20 && fa * fb > 0.0; ++grow) {
        h *= 2.0;
        a = std::max(lo, seed_l4 - h);
        b = std::min(hi, seed_l4 + h);
        fa = fvals(a)[which];
        fb = fvals(b)[which];
        if (a == lo && b == hi) break;
    }
    if (fa * fb > 0.0) return seed_l4;  // no sign change; keep the seed
    for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
        double mid = 0.5 * (a + b);
        double fm = fvals(mid)[which];
        if (fa * fm <= 0.0) {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

void TangleTarget::validate() const {
    if (!(tau3 > 0.0))
        throw BadParamError("tau3 must be > 0 (the construction divides by sqrt(tau3))");
    for (double c : {c12, c13, c23})
        if (c < 0.0 || c > 1.0) throw BadParamError("concurrence outside [0,1]");
    if (c12 * c12 + c13 * c13 + tau3 > 1.0 + 1e-12)
        throw BadParamError("c12^2 + c13^2 + tau3 exceeds 1");
}

TangleTarget target_from_state(const PureState3& state) {
    TangleVector v = tangle_vector(state);
    TangleTarget t;
    t.tau3 = v.tau3;
    t.c12 = v.c12;
    t.c13 = v.c13;
    t.c23 = v.c23;
    return t;
}

AcinParams params_at(const TangleTarget& target, double lambda4) {
    target.validate();
    if (!(lambda4 > 0.0)) throw OutOfIntervalError("lambda4 must be > 0");
    return assemble(target, lambda4, false);
}

AcinParams params_at_clamped(const TangleTarget& target, double lambda4) {
    target.validate();
    if (!(lambda4 > 0.0)) throw OutOfIntervalError("lambda4 must be > 0");
    return assemble(target, lambda4, true);
}

ValidityInterval validity_interval(const TangleTarget& target) {
    target.validate();
    ValidityInterval out;
    const double tau3 = target.tau3;
    const double st = std::sqrt(tau3);
    const double tau11 = target.tau11();

    // Closed forms as printed, evaluated for the log only.
    {
        double s = std::sqrt(std::max(0.0, 1.0 - tau11));
        double base = tau3 / (2.0 * tau11);
        out.constraints_log.push_back(
            {"phase_window_published", std::sqrt(std::max(0.0, base * (1.0 - s))),
             std::sqrt(base * (1.0 + s)),
             tau11 <= 0.5 ? "branch tau11<=1/2" : "branch tau11>=1/2 printed reversed"});
    }
    if (target.c12 > kZeroC || target.c13 > kZeroC) {
        double cc = target.c12 * target.c12 + target.c13 * target.c13;
        double s = std::sqrt(std::max(0.0, 1.0 - cc));
        double base = tau3 / (2.0 * cc);
        out.constraints_log.push_back(
            {"lambda0_window_published", std::sqrt(std::max(0.0, base * (1.0 - s))),
             std::sqrt(base * (1.0 + s)),
             "zeros-of-lambda0 closed form; disagrees with direct feasibility "
             "(see conformance report)"});
    }
    {
        double hi = 1.0;
        if (target.c12 > kZeroC) hi = std::min(hi, st / target.c12);
        if (target.c13 > kZeroC) hi = std::min(hi, st / target.c13);
        out.constraints_log.push_back({"lambda_le_1", st / 2.0, hi, "lambda_i <= 1"});
    }

    // Normalization window: lambda0^2(v) >= 0 with v = lambda4^2 is a
    // downward parabola in v; its roots bound every other constraint.
    double v_lo, v_hi;
    {
        // lambda0^2 * v = -(tau11/tau3) v^2 + v - tau3/4
        double A = -tau11 / tau3, B = 1.0, C = -tau3 / 4.0;
        double disc = B * B - 4.0 * A * C;
        if (disc < 0.0 && disc > -1e-12) disc = 0.0;
        if (disc < 0.0) throw EmptyIntervalError("lambda0^2 < 0 for every lambda4");
        double sq = std::sqrt(disc);
        v_lo = (-B + sq) / (2.0 * A);  // A < 0: this is the smaller root
        v_hi = (-B - sq) / (2.0 * A);
        if (v_lo > v_hi) std::swap(v_lo, v_hi);
        out.constraints_log.push_back({"lambda0_nonneg", std::sqrt(std::max(0.0, v_lo)),
                                       std::sqrt(v_hi), "direct"});
    }
    double lo1 = std::max(std::sqrt(std::max(0.0, v_lo)), st / 2.0 * (1.0 - 1e-12));
    double hi1 = std::min(std::sqrt(v_hi), 1.0);
    if (target.c12 > kZeroC) hi1 = std::min(hi1, st / target.c12);
    if (target.c13 > kZeroC) hi1 = std::min(hi1, st / target.c13);
    if (hi1 < lo1) throw EmptyIntervalError("lambda range empty before phase constraint");

    // Candidate boundary points for the |cos phi| <= 1 constraint: the roots
    // of the quartic in v = lambda4^2, (4K v^2 + 4P(v) - C23^2)^2 = 64 K P(v) v^2
    // with P(v) = -(tau11/tau3) v^2 + v - tau3/4 and K = (c12 c13 / tau3)^2.
    std::vector<double> cuts{lo1, hi1};
    if (target.c12 > kZeroC && target.c13 > kZeroC) {
        double K = std::pow(target.c12 * target.c13 / tau3, 2);
        double A2 = 4.0 * K - 4.0 * tau11 / tau3;
        double A1 = 4.0;
        double A0 = -tau3 - target.c23 * target.c23;
        std::vector<double> q(5);
        q[0] = A2 * A2 + 64.0 * K * tau11 / tau3;           // v^4
        q[1] = 2.0 * A2 * A1 - 64.0 * K;                    // v^3
        q[2] = A1 * A1 + 2.0 * A2 * A0 + 16.0 * K * tau3;   // v^2
        q[3] = 2.0 * A1 * A0;                               // v^1
        q[4] = A0 * A0;                                     // v^0
        for (double v : real_roots(q)) {
            if (v <= 0.0) continue;
            double l4 = std::sqrt(v);
            if (l4 > lo1 - 1e-6 && l4 < hi1 + 1e-6)
                cuts.push_back(
                    std::clamp(polish_cut(target, l4, lo1, hi1), lo1, hi1));
        }
    } else if (target.c23 > kZeroC) {
        // Phase inactive: C23 is achieved only where 2 lambda0 lambda4 = C23,
        // i.e. 4 P(v) = C23^2 -- isolated roots of a quadratic.
        double A = -tau11 / tau3, B = 1.0, C = -tau3 / 4.0 - target.c23 * target.c23 / 4.0;
        double disc = B * B - 4.0 * A * C;
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            for (double v : {(-B + sq) / (2.0 * A), (-B - sq) / (2.0 * A)}) {
                if (v <= 0.0) continue;
                double l4 = std::sqrt(v);
                if (l4 > lo1 - 1e-9 && l4 < hi1 + 1e-9)
                    cuts.push_back(std::clamp(l4, lo1, hi1));
            }
        }
    }
    // else: c23 target is 0 and the phase is inactive; achieved C23 =
    // 2 lambda0 lambda4 vanishes only where lambda0 does, i.e. at the
    // normalization endpoints already in `cuts`.

    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               cuts.end());

    // Classify the segments between consecutive cuts on a grid, then refine
    // component edges by bisection.
    const int kGrid = 10000;
    std::vector<std::pair<double, double>> comps;

    // Grid over [lo1, hi1] plus exact evaluation at the cut points.
    std::vector<double> samples;
    samples.reserve(kGrid + cuts.size() + 2);
    for (int k = 0; k <= kGrid; ++k)
        samples.push_back(lo1 + (hi1 - lo1) * static_cast<double>(k) / kGrid);
    samples.insert(samples.end(), cuts.begin(), cuts.end());
    std::sort(samples.begin(), samples.end());

    std::vector<char> ok(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k)
        ok[k] = feasible(target, samples[k]) ? 1 : 0;

    std::size_t k = 0;
    while (k < samples.size()) {
        if (!ok[k]) {
            ++k;
            continue;
        }
        std::size_t j = k;
        while (j + 1 < samples.size() && ok[j + 1]) ++j;
        double a = samples[k], b = samples[j];
        if (k > 0 && !ok[k - 1]) a = bisect_boundary(target, samples[k], samples[k - 1]);
        if (j + 1 < samples.size() && !ok[j + 1])
            b = bisect_boundary(target, samples[j], samples[j + 1]);
        if (comps.empty() || a - comps.back().second > 1e-9)
            comps.emplace_back(a, b);
        else
            comps.back().second = b;
        k = j + 1;
    }

    if (comps.empty()) throw EmptyIntervalError("no feasible lambda4");

    // A component much narrower than the grid spacing is the tolerance halo
    // of an isolated feasible point (cos phi touching +-1, or the lambda0 = 0
    // apex). Snap it onto the analytic cut inside it so scans sit exactly on
    // the point where the target is reproduced.
    for (auto& comp : comps) {
        if (comp.second - comp.first >= 1e-4) continue;
        double mid = 0.5 * (comp.first + comp.second);
        double snapped = mid, best = 1e300;
        for (double c : cuts) {
            if (c < comp.first - 1e-9 || c > comp.second + 1e-9) continue;
            if (std::abs(c - mid) < best) {
                best = std::abs(c - mid);
                snapped = c;
            }
        }
        comp = {snapped, snapped};
    }
    out.components = comps;
    out.lo = comps.front().first;
    out.hi = comps.back().second;
    for (const auto& [a, b] : comps)
        out.constraints_log.push_back(
            {"feasible_component", a, b, b - a < 1e-9 ? "isolated point" : "interval"});
    return out;
}

FamilyTable scan(const TangleTarget& target, int npoints) {
    if (npoints < 2) throw BadParamError("npoints must be >= 2");
    FamilyTable table;
    table.target = target;
    table.interval = validity_interval(target);

    std::vector<double> xs;
    const auto& comps = table.interval.components;
    if (!table.interval.degenerate()) {
        // Largest component, open-interval sampling with endpoint margin.
        auto widest = *std::max_element(
            comps.begin(), comps.end(), [](const auto& a, const auto& b) {
                return a.second - a.first < b.second - b.first;
            });
        double m = 1e-6 * (widest.second - widest.first);
        double a = widest.first + m, b = widest.second - m;
        for (int k = 0; k < npoints; ++k)
            xs.push_back(a + (b - a) * static_cast<double>(k) / (npoints - 1));
    } else {
        // Isolated feasible points: repeat them, lambda4 nondecreasing.
        std::vector<double> pts;
        for (const auto& [a, b] : comps) pts.push_back(0.5 * (a + b));
        int per = npoints / static_cast<int>(pts.size());
        int extra = npoints % static_cast<int>(pts.size());
        for (std::size_t p = 0; p < pts.size(); ++p) {
            int reps = per + (static_cast<int>(p) < extra ? 1 : 0);
            for (int r = 0; r < reps; ++r) xs.push_back(pts[p]);
        }
    }

    for (double l4 : xs) {
        FamilyRow row;
        row.lambda4 = l4;
        row.params = params_at(target, l4);
        row.cos_phi = std::cos(row.params.phi);
        PureState3 s = from_acin(row.params);
        row.tangles = tangle_vector(s);
        row.ig = grassl(row.params);
        table.rows.push_back(row);
    }
    return table;
}

FamilyTable probe_scan(const TangleTarget& target, int npoints, double lo,
                       double hi) {
    if (npoints < 2) throw BadParamError("npoints must be >= 2");
    if (!(lo > 0.0) || !(hi > lo)) throw BadParamError("need 0 < lo < hi");
    FamilyTable table;
    table.target = target;
    table.interval.lo = lo;
    table.interval.hi = hi;
    table.interval.components = {{lo, hi}};
    table.interval.constraints_log.push_back(
        {"probe_range", lo, hi, "clamped diagnostic sweep"});
    for (int k = 0; k < npoints; ++k) {
        double l4 = lo + (hi - lo) * static_cast<double>(k) / (npoints - 1);
        FamilyRow row;
        row.lambda4 = l4;
        row.params = params_at_clamped(target, l4);
        row.cos_phi = raw_at(target, l4).cos_phi;
        PureState3 s = from_acin(row.params);
        // Clamped rows can be unnormalized; every invariant is still
        // well-defined, but tangle_vector's monogamy assertion applies to
        // normalized states only, so assemble the vector field by field.
        row.tangles.c12 = concurrence(s, {1, 2});
        row.tangles.c13 = concurrence(s, {1, 3});
        row.tangles.c23 = concurrence(s, {2, 3});
        row.tangles.tau3 = three_tangle(s);
        row.tangles.tau11 = local_tangle_raw(s, 1);
        row.tangles.tau12 = local_tangle_raw(s, 2);
        row.tangles.tau13 = local_tangle_raw(s, 3);
        row.tangles.i5 = kempe_i5(s);
        row.tangles.i6 = modulus_i6(s);
        row.ig = grassl(row.params);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace triq
