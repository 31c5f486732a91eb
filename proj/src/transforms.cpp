#include "landgen/transforms.hpp"

#include "landgen/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace landgen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

void require_len(const Directional& p, std::size_t dim, const char* name) {
    if (p.plus.size() != dim || p.minus.size() != dim) {
        throw InvalidArgument(std::string(name) + ": parameter length " + std::to_string(p.plus.size()) + "/" +
                              std::to_string(p.minus.size()) + " does not match dimension " +
                              std::to_string(dim));
    }
}

double signum(double a) { return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0); }

void additive_periodic(std::span<const double> a, std::span<double> out, const AdditivePeriodic& t) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        const double abs_a = std::abs(ai);
        const double envelope = 1.0 - std::exp(-t.gamma.select(i, ai) * abs_a);
        out[i] = ai + t.mu.select(i, ai) * ai * envelope * std::sin(t.omega.select(i, ai) * abs_a);
    }
}

void log_sinusoidal(std::span<const double> a, std::span<double> out, const LogSinusoidal& t) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        const double s = signum(ai);
        if (s == 0.0) {
            out[i] = 0.0;
            continue;
        }
        const double la = std::log(std::abs(ai) + kEpsilon);
        const double mod = std::sin(t.omega1.select(i, ai) * la) + std::sin(t.omega2.select(i, ai) * la);
        out[i] = s * std::exp(la + t.mu.select(i, ai) * mod);
    }
}

void wavelet(std::span<const double> a, std::span<double> out, const Wavelet& t) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ai = a[i];
        const double abs_a = std::abs(ai);
        const double omega = t.omega.select(i, ai);
        const double ell = t.eta ? *t.eta / omega : t.ell->select(i, ai);
        const double u = abs_a / ell;
        const double phi = u * u * std::exp(-u * u) * std::sin(omega * abs_a - std::numbers::pi / 2.0);
        out[i] = ai + t.mu.select(i, ai) * phi * ai / (abs_a + kEpsilon);
    }
}

void tensor_interference(std::span<const double> a, std::span<double> out, const TensorInterference& t) {
    const std::size_t d = a.size();
    if (d == 0) return;
    const double scale = std::ldexp(1.0, static_cast<int>(d) - 1);
    // gate[j] = sin^2(omega_j a_j); the gate for coordinate i is the product
    // over j != i, built from prefix and suffix products.
    std::vector<double> gate(d);
    for (std::size_t j = 0; j < d; ++j) {
        const double s = std::sin(t.omega.select(j, a[j]) * a[j]);
        gate[j] = s * s;
    }
    std::vector<double> suffix(d + 1, 1.0);
    for (std::size_t j = d; j-- > 0;) suffix[j] = suffix[j + 1] * gate[j];
    double prefix = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double ai = a[i];
        const double others = prefix * suffix[i + 1];
        const double mu = t.mu0.select(i, ai) * scale;
        out[i] = ai + mu * std::sin(t.omega.select(i, ai) * ai) * others;
        prefix *= gate[i];
    }
}

void radial_hybrid(std::span<const double> a, std::span<double> out, const RadialHybrid& t) {
    double sq = 0.0;
    for (double v : a) sq += v * v;
    const double r = std::sqrt(sq);
    const double phi = std::pow(r, t.p) * std::sin(t.omega * std::pow(r, t.q));
    const double factor = t.mu * phi / (r + kEpsilon);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + factor * a[i];
}

void apply_into(std::span<const double> a, std::span<double> out, const TransformSpec& t) {
    std::visit(Overloaded{
                   [&](const AdditivePeriodic& s) { additive_periodic(a, out, s); },
                   [&](const LogSinusoidal& s) { log_sinusoidal(a, out, s); },
                   [&](const Wavelet& s) { wavelet(a, out, s); },
                   [&](const TensorInterference& s) { tensor_interference(a, out, s); },
                   [&](const RadialHybrid& s) { radial_hybrid(a, out, s); },
               },
               t);
}

template <class Spec>
std::vector<double> apply_checked(std::span<const double> a, const Spec& spec) {
    const TransformSpec t = spec;
    check_transform_dimension(t, a.size());
    std::vector<double> out(a.size());
    apply_into(a, out, t);
    return out;
}

}  // namespace

std::string_view transform_tag(const TransformSpec& t) {
    return std::visit(Overloaded{
                          [](const AdditivePeriodic&) { return std::string_view("additive_periodic"); },
                          [](const LogSinusoidal&) { return std::string_view("log_sinusoidal"); },
                          [](const Wavelet&) { return std::string_view("wavelet"); },
                          [](const TensorInterference&) { return std::string_view("tensor_interference"); },
                          [](const RadialHybrid&) { return std::string_view("radial_hybrid"); },
                      },
                      t);
}

void check_transform_dimension(const TransformSpec& t, std::size_t dim) {
    std::visit(Overloaded{
                   [&](const AdditivePeriodic& s) {
                       require_len(s.mu, dim, "additive_periodic.mu");
                       require_len(s.gamma, dim, "additive_periodic.gamma");
                       require_len(s.omega, dim, "additive_periodic.omega");
                   },
                   [&](const LogSinusoidal& s) {
                       require_len(s.mu, dim, "log_sinusoidal.mu");
                       require_len(s.omega1, dim, "log_sinusoidal.omega1");
                       require_len(s.omega2, dim, "log_sinusoidal.omega2");
                   },
                   [&](const Wavelet& s) {
                       require_len(s.mu, dim, "wavelet.mu");
                       require_len(s.omega, dim, "wavelet.omega");
                       if (s.ell.has_value() == s.eta.has_value()) {
                           throw InvalidArgument("wavelet: exactly one of ell or eta must be set");
                       }
                       if (s.ell) require_len(*s.ell, dim, "wavelet.ell");
                   },
                   [&](const TensorInterference& s) {
                       require_len(s.mu0, dim, "tensor_interference.mu0");
                       require_len(s.omega, dim, "tensor_interference.omega");
                   },
                   [](const RadialHybrid&) {},
               },
               t);
}

std::vector<double> apply_additive_periodic(std::span<const double> a, const AdditivePeriodic& t) {
    return apply_checked(a, t);
}
std::vector<double> apply_log_sinusoidal(std::span<const double> a, const LogSinusoidal& t) {
    return apply_checked(a, t);
}
std::vector<double> apply_wavelet(std::span<const double> a, const Wavelet& t) { return apply_checked(a, t); }
std::vector<double> apply_tensor_interference(std::span<const double> a, const TensorInterference& t) {
    return apply_checked(a, t);
}
std::vector<double> apply_radial_hybrid(std::span<const double> a, const RadialHybrid& t) {
    return apply_checked(a, t);
}

std::vector<double> apply_transform(std::span<const double> a, const TransformSpec& t) {
    check_transform_dimension(t, a.size());
    std::vector<double> out(a.size());
    apply_into(a, out, t);
    return out;
}

std::vector<double> apply_chain(std::span<const double> a, const TransformChain& chain) {
    for (const auto& t : chain) check_transform_dimension(t, a.size());
    std::vector<double> cur(a.begin(), a.end());
    std::vector<double> scratch;
    apply_chain_inplace(cur, chain, scratch);
    return cur;
}

void apply_chain_inplace(std::vector<double>& a, const TransformChain& chain, std::vector<double>& scratch) {
    for (const auto& t : chain) {
        scratch.resize(a.size());
        apply_into(a, scratch, t);
        a.swap(scratch);
    }
}

}  // namespace landgen
