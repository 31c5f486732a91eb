// Property-level acceptance suite. Prints one PASS/FAIL line per criterion,
// followed by indented detail lines, and exits non-zero if any criterion fails.

#include "landgen/generator.hpp"
#include "landgen/instance.hpp"
#include "landgen/rotation.hpp"
#include "landgen/transforms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace landgen;

namespace {

using Rng = std::mt19937_64;
using Vec = std::vector<double>;

double uni(Rng& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }
/// Uniform on (lo, hi].
double uni_lo_open(Rng& g, double lo, double hi) { return hi - (hi - lo) * std::generate_canonical<double, 53>(g); }
double log_uni(Rng& g, double lo, double hi) { return std::exp(uni(g, std::log(lo), std::log(hi))); }
int integer(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;
    void note(const std::string& s) { details.push_back(s); }
    void require(bool ok, const std::string& s) {
        pass = pass && ok;
        note(std::string(ok ? "ok   " : "FAIL ") + s);
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// 1 ------------------------------------------------------------------------

Outcome rotation_orthogonality() {
    Outcome o;
    Rng g(101);
    double worst = 0.0;
    int draws = 0;
    for (std::size_t d : {2u, 5u, 10u, 50u}) {
        double worst_d = 0.0;
        for (int k = 0; k < 50; ++k, ++draws) {
            AngleMatrix psi(d);
            const double density = uni(g, 0.0, 1.0);
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t v = u + 1; v < d; ++v)
                    if (uni(g, 0, 1) < density || d == 2) psi(u, v) = uni(g, -std::numbers::pi, std::numbers::pi);
            worst_d = std::max(worst_d, orthogonality_residual(build_rotation(psi)));
        }
        o.note("d=" + std::to_string(d) + " max |R R^T - I| = " + fmt("%.3g", worst_d));
        worst = std::max(worst, worst_d);
    }
    o.require(worst <= 1e-10, std::to_string(draws) + " draws, max residual " + fmt("%.3g", worst) + " <= 1e-10");
    return o;
}

// 2 ------------------------------------------------------------------------

Outcome rise_by_delta() {
    Outcome o;
    Rng g(202);
    for (Form form : {Form::PerDirection, Form::SingleExponent}) {
        double worst_rise = 0.0, worst_swap = 0.0;
        for (int k = 0; k < 500; ++k) {
            const std::size_t d = static_cast<std::size_t>(integer(g, 1, 10));
            Vec c(d), kappa(d), expo(d);
            for (std::size_t i = 0; i < d; ++i) {
                c[i] = uni(g, -100, 0);
                kappa[i] = log_uni(g, 1, 1000);
                expo[i] = uni_lo_open(g, 0.2, 1.2);
            }
            const double delta = uni(g, 1, 1000), r_ref = uni_lo_open(g, 0, 100), beta = uni(g, -1000, 1000);
            Vec x(c);
            for (auto& v : x) v += r_ref;
            auto build = [&](const Vec& p) {
                return form == Form::PerDirection ? make_per_direction(c, beta, p, kappa, delta, r_ref)
                                                  : make_single_exponent(c, beta, p[0], kappa, delta, r_ref);
            };
            const double f = neutralize(build(expo)).evaluate(x);
            worst_rise = std::max(worst_rise, std::fabs(f - beta - delta) / delta);
            Vec other(d);
            for (auto& v : other) v = uni_lo_open(g, 0.2, 1.2);
            const double f2 = neutralize(build(other)).evaluate(x);
            worst_swap = std::max(worst_swap, std::fabs(f2 - f) / delta);
        }
        const std::string name = form == Form::PerDirection ? "per-direction" : "single-exponent";
        o.require(worst_rise <= 1e-9, name + ": max |f(c + r_ref 1) - beta - delta| / delta = " + fmt("%.3g", worst_rise));
        o.require(worst_swap <= 1e-9, name + ": max change under a new exponent / delta = " + fmt("%.3g", worst_swap));
    }
    return o;
}

// 3 ------------------------------------------------------------------------

Outcome known_optimum_exactness() {
    Outcome o;
    GenerationStrata strata;
    strata.blocks = {1, 4};
    strata.block_dim = {2, 3};
    strata.components = {1, 10};
    strata.shuffle_indices = true;
    Rng g(303);
    double worst_gap = 0.0, worst_violation = 0.0;
    std::size_t max_dim = 0, below = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = random_instance(1000 + seed, strata);
        max_dim = std::max(max_dim, inst.dimension);
        const Problem p(inst);
        const auto opt = known_optimum(inst);
        if (opt.exactness != Exactness::Exact) {
            o.require(false, "instance " + std::to_string(seed) + " reported a lower bound");
            continue;
        }
        worst_gap = std::max(worst_gap, std::fabs(p.value(opt.location) - opt.value));
        std::vector<Vec> pts(10000, Vec(inst.dimension));
        for (auto& x : pts)
            for (auto& v : x) v = uni(g, -100, 100);
        for (const auto& r : batch_evaluate(p, pts)) {
            if (r.value < opt.value) {
                ++below;
                worst_violation = std::max(worst_violation, opt.value - r.value);
            }
        }
    }
    o.note("largest dimension drawn: " + std::to_string(max_dim));
    o.require(worst_gap <= 1e-9, "max |f(x*) - f*| = " + fmt("%.3g", worst_gap) + " <= 1e-9");
    o.require(below == 0, std::to_string(below) + " of 2e6 random points below f* (worst by " + fmt("%.3g", worst_violation) + ")");
    return o;
}

// 4 ------------------------------------------------------------------------

Directional draw_dir(Rng& g, std::size_t d, double lo, double hi, bool matched) {
    Directional p;
    for (std::size_t i = 0; i < d; ++i) {
        p.plus.push_back(uni(g, lo, hi));
        p.minus.push_back(matched ? p.plus.back() : uni(g, lo, hi));
    }
    return p;
}

/// Draws from the suggested parameter ranges.
TransformSpec draw_transform(Rng& g, int op, std::size_t d, bool matched) {
    switch (op) {
        case 0: return AdditivePeriodic{draw_dir(g, d, 0.1, 0.7, matched), draw_dir(g, d, 0.002, 0.2, matched), draw_dir(g, d, 0.05, 1.0, matched)};
        case 1: return LogSinusoidal{draw_dir(g, d, 0.05, 0.5, matched), draw_dir(g, d, 5, 50, matched), draw_dir(g, d, 5, 50, matched)};
        case 2:
            if (uni(g, 0, 1) < 0.5) return Wavelet{draw_dir(g, d, 10, 50, matched), draw_dir(g, d, 0.3, 1.0, matched), std::nullopt, uni(g, 10, 24)};
            return Wavelet{draw_dir(g, d, 10, 50, matched), draw_dir(g, d, 0.3, 1.0, matched), draw_dir(g, d, 10, 80, matched), std::nullopt};
        case 3: return TensorInterference{draw_dir(g, d, 10, 20, matched), draw_dir(g, d, 0.1, 0.7, matched)};
        default: {
            // (q, omega) come from one of the two ring presets.
            const bool near_uniform = uni(g, 0, 1) < 0.5;
            const double q = near_uniform ? uni(g, 0.9, 1.2) : uni(g, 0.4, 0.6);
            const double omega = near_uniform ? uni(g, 0.1, 0.4) : uni(g, 5.0, 10.0);
            return RadialHybrid{uni(g, 0.4, 2.0), uni(g, 0.4, 0.7), q, omega};
        }
    }
}

const char* kOpNames[] = {"additive_periodic", "log_sinusoidal", "wavelet", "tensor_interference", "radial_hybrid"};

/// Central-difference Jacobian at the origin, max |J - I|.
double jacobian_deviation(const TransformSpec& t, std::size_t d, double h) {
    double worst = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        Vec plus(d, 0.0), minus(d, 0.0);
        plus[j] = h;
        minus[j] = -h;
        const auto fp = apply_transform(plus, t), fm = apply_transform(minus, t);
        for (std::size_t i = 0; i < d; ++i) {
            const double dij = (fp[i] - fm[i]) / (2 * h);
            worst = std::max(worst, std::fabs(dij - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

Outcome transform_center_curvature() {
    Outcome o;
    Rng g(404);
    constexpr double h = 1e-5;
    for (int op = 0; op < 5; ++op) {
        bool zero_fixed = true, odd = true;
        double worst_jac = 0.0, worst_model = 0.0;
        int jac_fail = 0;
        for (int k = 0; k < 100; ++k) {
            const std::size_t d = static_cast<std::size_t>(integer(g, 2, 5));
            const auto t = draw_transform(g, op, d, true);
            for (double v : apply_transform(Vec(d, 0.0), t)) zero_fixed = zero_fixed && v == 0.0;
            for (int rep = 0; rep < 10; ++rep) {
                Vec a(d), na(d);
                for (std::size_t i = 0; i < d; ++i) na[i] = -(a[i] = uni(g, -100, 100));
                const auto fa = apply_transform(a, t), fna = apply_transform(na, t);
                for (std::size_t i = 0; i < d; ++i) odd = odd && fna[i] == -fa[i];
            }
            if (op != 1) {
                const double dev = jacobian_deviation(t, d, h);
                worst_jac = std::max(worst_jac, dev);
                if (!(dev <= 1e-4)) ++jac_fail;
                if (auto r = std::get_if<RadialHybrid>(&t)) {
                    // Diagonal slope of a + mu r^p sin(omega r^q) a / r at r = h.
                    const double predicted = r->mu * std::pow(h, r->p - 1.0) * std::sin(r->omega * std::pow(h, r->q));
                    worst_model = std::max(worst_model, std::fabs(dev / std::fabs(predicted) - 1.0));
                }
            }
        }
        const std::string name = kOpNames[op];
        o.require(zero_fixed, name + ": T(0) = 0 exactly for 100 draws");
        o.require(odd, name + ": T(-a) = -T(a) exactly under matched parameters");
        if (op != 1) {
            o.require(jac_fail == 0, name + ": finite-difference Jacobian (h = 1e-5) within 1e-4 of I: " +
                                         std::to_string(100 - jac_fail) + "/100, max deviation " + fmt("%.3g", worst_jac));
            if (op == 4) {
                o.note("radial_hybrid: deviation equals mu h^(p-1) sin(omega h^q) ~ mu omega h^(p+q-1) to within " +
                       fmt("%.2g", worst_model) + " relative");
            }
        } else {
            o.note("log_sinusoidal: Jacobian at the origin not checked (only T(0) = 0)");
        }
    }
    return o;
}

// 5 ------------------------------------------------------------------------

Outcome separability_coupling() {
    Outcome o;
    Rng g(505);

    bool independent = true;
    for (int op : {0, 1, 2}) {
        for (int k = 0; k < 100; ++k) {
            const std::size_t d = static_cast<std::size_t>(integer(g, 2, 6));
            const auto t = draw_transform(g, op, d, false);
            Vec a(d);
            for (auto& v : a) v = uni(g, -100, 100);
            const auto base = apply_transform(a, t);
            const std::size_t j = static_cast<std::size_t>(integer(g, 0, int(d) - 1));
            Vec b(a);
            b[j] = uni(g, -100, 100);
            const auto moved = apply_transform(b, t);
            for (std::size_t i = 0; i < d; ++i)
                if (i != j) independent = independent && moved[i] == base[i];
        }
    }
    o.require(independent, "element-wise operators: changing a_j leaves every other output coordinate unchanged");

    for (std::size_t d : {2u, 3u, 4u}) {
        // Frequencies of the form m pi / 200 so that [-100, 100] spans whole
        // periods of sin^2 and the population mean of each factor is exactly 1/2.
        Vec omega(d);
        for (auto& w : omega) w = integer(g, 7, 44) * std::numbers::pi / 200.0;
        const int n = 100000;
        double sum = 0.0, sum_sq = 0.0;
        for (int s = 0; s < n; ++s) {
            double gate = 1.0;
            for (std::size_t j = 1; j < d; ++j) {
                const double v = std::sin(omega[j] * uni(g, -100, 100));
                gate *= v * v;
            }
            sum += gate;
            sum_sq += gate * gate;
        }
        const double mean = sum / n;
        const double se = std::sqrt((sum_sq / n - mean * mean) / (n - 1));
        const double target = std::ldexp(1.0, -int(d - 1));
        o.require(std::fabs(mean - target) <= 3 * se, "tensor gate d=" + std::to_string(d) + ": mean " + fmt("%.5f", mean) +
                                                          " vs " + fmt("%.5f", target) + " (3 SE = " + fmt("%.5f", 3 * se) + ")");
    }

    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const int d = integer(g, 2, 8);
        Eigen::MatrixXd m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = std::normal_distribution<double>()(g);
        const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
        const auto t = std::get<RadialHybrid>(draw_transform(g, 4, d, true));
        Eigen::VectorXd a(d);
        for (int i = 0; i < d; ++i) a(i) = uni(g, -100, 100);
        const Eigen::VectorXd qa = q * a;
        const auto lhs = apply_radial_hybrid(Vec(qa.data(), qa.data() + d), t);
        const auto ta = apply_radial_hybrid(Vec(a.data(), a.data() + d), t);
        const Eigen::VectorXd rhs = q * Eigen::Map<const Eigen::VectorXd>(ta.data(), d);
        for (int i = 0; i < d; ++i) worst = std::max(worst, std::fabs(lhs[i] - rhs(i)));
    }
    o.require(worst <= 1e-10, "radial equivariance over 100 orthogonal Q: max |T(Qa) - Q T(a)| = " + fmt("%.3g", worst));
    return o;
}

// 6 ------------------------------------------------------------------------

Outcome conditioning() {
    Outcome o;
    Rng g(606);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t d = static_cast<std::size_t>(integer(g, 2, 6));
        Vec c(d), kappa(d);
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = uni(g, -50, 50);
            kappa[i] = log_uni(g, 1, 1000);
        }
        auto spec = make_per_direction(c, uni(g, -1000, 1000), Vec(d, 1.0), kappa, uni(g, 1, 1000), uni_lo_open(g, 0, 100));
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t v = u + 1; v < d; ++v)
                if (uni(g, 0, 1) < 0.5) spec.angles(u, v) = uni(g, -std::numbers::pi, std::numbers::pi);
        const auto f = neutralize(spec);
        const double h = 1e-4 * spec.r_ref;
        Eigen::MatrixXd hess(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                auto at = [&](double si, double sj) {
                    Vec x(c);
                    x[i] += si * h;
                    x[j] += sj * h;
                    return f.evaluate(x);
                };
                hess(i, j) = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4 * h * h);
            }
        }
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(hess).eigenvalues();
        const double ratio = ev.maxCoeff() / ev.minCoeff();
        const double expected = *std::max_element(kappa.begin(), kappa.end()) / *std::min_element(kappa.begin(), kappa.end());
        worst = std::max(worst, std::fabs(ratio / expected - 1.0));
    }
    o.require(worst <= 0.01, "50 per-direction configs at exponent 1: max relative error of eigenvalue ratio vs kappa_max/kappa_min = " +
                                 fmt("%.3g", worst));
    return o;
}

// 7 ------------------------------------------------------------------------

struct GridMin {
    double value = INFINITY;
    Vec local;
};

/// Minimum of one block's landscape over an n x n grid of its bounds.
GridMin block_grid_min(const PreparedBlock& b, const BlockSpec& spec, Sense sense, int n) {
    GridMin best;
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            const Vec x{spec.bounds[0].lower + (spec.bounds[0].upper - spec.bounds[0].lower) * r / (n - 1),
                        spec.bounds[1].lower + (spec.bounds[1].upper - spec.bounds[1].lower) * s / (n - 1)};
            const double v = eval_landscape(x, b, sense).value;
            if (v < best.value) best = {v, x};
        }
    }
    return best;
}

Outcome block_separability() {
    Outcome o;
    GenerationStrata strata;
    strata.blocks = {2, 2};
    strata.block_dim = {2, 2};
    strata.shuffle_indices = true;
    Rng g(707);
    double worst_opt = 0.0, worst_cross = 0.0, worst_full = 0.0;
    bool all_above = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = random_instance(7000 + seed, strata);
        const Problem p(inst);
        const auto& blocks = p.blocks();
        auto compose = [&](const Vec& xa, const Vec& xb) {
            Vec x(4);
            for (std::size_t i = 0; i < 2; ++i) {
                x[blocks[0].indices[i]] = xa[i];
                x[blocks[1].indices[i]] = xb[i];
            }
            return x;
        };
        auto rel = [](double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); };

        const int n = 101;
        const auto ma = block_grid_min(blocks[0], inst.blocks[0], inst.sense, n);
        const auto mb = block_grid_min(blocks[1], inst.blocks[1], inst.sense, n);
        const double separable = blocks[0].weight * ma.value + blocks[1].weight * mb.value;
        worst_opt = std::max(worst_opt, rel(p.value(compose(ma.local, mb.local)), separable));

        // Cross sections of the 101^2 x 101^2 product grid through each block's argmin.
        double cross = INFINITY;
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
                const Vec u{-100.0 + 200.0 * r / (n - 1), -100.0 + 200.0 * s / (n - 1)};
                const double va = p.value(compose(u, mb.local)), vb = p.value(compose(ma.local, u));
                const double floor = separable - 1e-12 * std::max(1.0, std::fabs(separable));
                all_above = all_above && va >= floor && vb >= floor;
                cross = std::min({cross, va, vb});
            }
        }
        worst_cross = std::max(worst_cross, rel(cross, separable));

        // Complete product enumeration at 21^2 x 21^2 against the per-block 21^2 minima.
        const int m = 21;
        const auto sa = block_grid_min(blocks[0], inst.blocks[0], inst.sense, m);
        const auto sb = block_grid_min(blocks[1], inst.blocks[1], inst.sense, m);
        double full = INFINITY;
        std::vector<Vec> pts;
        for (int i0 = 0; i0 < m; ++i0)
            for (int i1 = 0; i1 < m; ++i1)
                for (int j0 = 0; j0 < m; ++j0)
                    for (int j1 = 0; j1 < m; ++j1)
                        pts.push_back(compose({-100.0 + 10.0 * i0, -100.0 + 10.0 * i1}, {-100.0 + 10.0 * j0, -100.0 + 10.0 * j1}));
        for (const auto& r : batch_evaluate(p, pts)) full = std::min(full, r.value);
        worst_full = std::max(worst_full, rel(full, blocks[0].weight * sa.value + blocks[1].weight * sb.value));
    }
    o.require(worst_opt <= 1e-12, "composite at the pair of block grid argmins vs weighted sum of 101^2 minima: max rel diff " +
                                      fmt("%.3g", worst_opt));
    o.require(worst_cross <= 1e-12 && all_above,
              "minimum over both 101^2 cross sections of the product grid: max rel diff " + fmt("%.3g", worst_cross));
    o.require(worst_full <= 1e-12, "full 21^2 x 21^2 product enumeration vs weighted sum of 21^2 minima: max rel diff " +
                                       fmt("%.3g", worst_full));
    return o;
}

// 8 ------------------------------------------------------------------------

Outcome determinism_round_trip() {
    Outcome o;
    GenerationStrata strata;
    strata.blocks = {1, 3};
    Rng g(808);
    bool same_bytes = true, bitwise = true, parallel = true;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::string a = serialize(random_instance(seed * 7919, strata));
        const std::string b = serialize(random_instance(seed * 7919, strata));
        same_bytes = same_bytes && a == b;
        const Problem p1(deserialize(a));
        const Problem p0(random_instance(seed * 7919, strata));
        std::vector<Vec> pts(100, Vec(p0.dimension()));
        for (auto& x : pts)
            for (auto& v : x) v = uni(g, -100, 100);
        for (const auto& x : pts) {
            bitwise = bitwise && std::bit_cast<std::uint64_t>(p0.value(x)) == std::bit_cast<std::uint64_t>(p1.value(x));
        }
        std::vector<Vec> many(2000, Vec(p0.dimension()));
        for (auto& x : many)
            for (auto& v : x) v = uni(g, -100, 100);
        parallel = parallel && batch_evaluate(p0, many, {1}) == batch_evaluate(p0, many, {4});
    }
    o.require(same_bytes, "same seed twice gives byte-identical documents (25 seeds)");
    o.require(bitwise, "deserialize(serialize(x)) evaluates bit-identically at 100 points (25 instances)");
    o.require(parallel, "batch evaluation with 1 and 4 threads identical (25 x 2000 points)");
    return o;
}

// 9 ------------------------------------------------------------------------

Outcome min_max_duality() {
    Outcome o;
    GenerationStrata strata;
    strata.blocks = {1, 3};
    Rng g(909);
    double worst = 0.0;
    bool optimum_mirrors = true;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = random_instance(9000 + seed, strata);
        auto flipped = inst;
        flipped.sense = Sense::Maximize;
        for (auto& b : flipped.blocks)
            for (auto& c : b.components) c.offset = -c.offset;
        const Problem pmin(inst), pmax(flipped);
        for (int k = 0; k < 100; ++k) {
            Vec x(inst.dimension);
            for (auto& v : x) v = uni(g, -100, 100);
            const double a = pmin.value(x), b = pmax.value(x);
            worst = std::max(worst, std::fabs(a + b) / std::max(1.0, std::fabs(a)));
        }
        const auto o1 = known_optimum(inst), o2 = known_optimum(flipped);
        optimum_mirrors = optimum_mirrors && o1.location == o2.location && o1.value == -o2.value;
    }
    o.require(worst <= 1e-12, "negated offsets under maximize: max rel |f_min + f_max| = " + fmt("%.3g", worst));
    o.require(optimum_mirrors, "known optimum location shared and value negated");
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"rotation orthogonality", rotation_orthogonality},
        {"rise by delta at the reference radius", rise_by_delta},
        {"known-optimum exactness", known_optimum_exactness},
        {"transform center and curvature", transform_center_curvature},
        {"separability and coupling", separability_coupling},
        {"conditioning at exponent 1", conditioning},
        {"block separability oracle", block_separability},
        {"determinism and round trip", determinism_round_trip},
        {"min/max duality", min_max_duality},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome out = run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  [%d] %s (%.1f s)\n", out.pass ? "PASS" : "FAIL", ++index, name, secs);
        for (const auto& line : out.details) std::printf("        %s\n", line.c_str());
        std::fflush(stdout);
        failed += out.pass ? 0 : 1;
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed ? 1 : 0;
}
