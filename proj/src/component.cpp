#include "landgen/component.hpp"

#include <cmath>
#include <string>

namespace landgen {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(name) + " must be strictly positive and finite");
    }
}

void require_positive(const Directional& p, std::size_t dim, const char* name) {
    if (p.plus.size() != dim || p.minus.size() != dim) {
        throw InvalidArgument(std::string(name) + " length does not match component dimension");
    }
    for (std::size_t i = 0; i < dim; ++i) {
        require_positive(p.plus[i], name);
        require_positive(p.minus[i], name);
    }
}

// |z|^(2p) as exp(2p log|z|); zero maps to zero.
double abs_pow(double z, double two_p) {
    const double az = std::abs(z);
    if (az == 0.0) return 0.0;
    return std::exp(two_p * std::log(az));
}

}  // namespace

ComponentSpec make_per_direction(std::vector<double> center, double offset, std::vector<double> exponents,
                                 std::vector<double> kappa, double delta, double r_ref) {
    ComponentSpec s;
    s.form = Form::PerDirection;
    s.angles = AngleMatrix(center.size());
    s.center = std::move(center);
    s.offset = offset;
    s.exponents = Directional::matched(std::move(exponents));
    s.kappa = Directional::matched(std::move(kappa));
    s.delta = delta;
    s.r_ref = r_ref;
    return s;
}

ComponentSpec make_single_exponent(std::vector<double> center, double offset, double exponent,
                                   std::vector<double> kappa, double delta, double r_ref) {
    ComponentSpec s;
    s.form = Form::SingleExponent;
    s.angles = AngleMatrix(center.size());
    s.center = std::move(center);
    s.offset = offset;
    s.exponent = exponent;
    s.exponents = {};
    s.kappa = Directional::matched(std::move(kappa));
    s.delta = delta;
    s.r_ref = r_ref;
    return s;
}

NeutralizedComponent::NeutralizedComponent(const ComponentSpec& spec, ComponentId id) : spec_(spec), id_(id) {
    const std::size_t d = spec.dim();
    if (d == 0) throw InvalidArgument("component must have at least one dimension");
    require_positive(spec.delta, "delta");
    require_positive(spec.r_ref, "r_ref");
    require_positive(spec.kappa, d, "kappa");
    if (spec.angles.dim() != d) throw InvalidArgument("angle matrix dimension does not match component");
    for (const auto& t : spec.chain) check_transform_dimension(t, d);

    rotation_ = build_rotation(spec.angles);
    identity_rotation_ = spec.angles.is_zero();

    kappa_bar_i_.resize(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        kappa_bar_i_[i] = (spec.kappa.plus[i] + spec.kappa.minus[i]) / 2.0;
        sum += kappa_bar_i_[i];
    }
    kappa_bar_ = sum / static_cast<double>(d);
}

NeutralizedComponent neutralize_form1(const ComponentSpec& spec, ComponentId id) {
    if (spec.form != Form::PerDirection) throw InvalidArgument("neutralize_form1 requires a PerDirection spec");
    require_positive(spec.exponents, spec.dim(), "exponent");
    NeutralizedComponent c(spec, id);
    const std::size_t d = spec.dim();
    const double per_term = spec.delta / static_cast<double>(d);
    const double log_r = std::log(spec.r_ref);
    c.rho_dir_.plus.resize(d);
    c.rho_dir_.minus.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        c.rho_dir_.plus[i] = per_term / (c.kappa_bar_ * std::exp(2.0 * spec.exponents.plus[i] * log_r));
        c.rho_dir_.minus[i] = per_term / (c.kappa_bar_ * std::exp(2.0 * spec.exponents.minus[i] * log_r));
    }
    return c;
}

NeutralizedComponent neutralize_form2(const ComponentSpec& spec, ComponentId id) {
    if (spec.form != Form::SingleExponent) throw InvalidArgument("neutralize_form2 requires a SingleExponent spec");
    require_positive(spec.exponent, "exponent");
    NeutralizedComponent c(spec, id);
    const std::size_t d = spec.dim();
    const double inv_p = 1.0 / spec.exponent;
    double mass = 0.0;
    for (std::size_t i = 0; i < d; ++i) mass += std::pow(c.kappa_bar_i_[i], inv_p);
    const double s_star = spec.r_ref * spec.r_ref * mass;
    c.rho_ = spec.delta / std::pow(s_star, spec.exponent);
    c.kappa_root_.plus.resize(d);
    c.kappa_root_.minus.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        c.kappa_root_.plus[i] = std::pow(spec.kappa.plus[i], inv_p);
        c.kappa_root_.minus[i] = std::pow(spec.kappa.minus[i], inv_p);
    }
    return c;
}

NeutralizedComponent neutralize(const ComponentSpec& spec, ComponentId id) {
    return spec.form == Form::PerDirection ? neutralize_form1(spec, id) : neutralize_form2(spec, id);
}

std::vector<double> NeutralizedComponent::internal_coords(std::span<const double> x) const {
    const std::size_t d = spec_.dim();
    if (x.size() != d) {
        throw InvalidArgument("point has dimension " + std::to_string(x.size()) + ", component expects " +
                              std::to_string(d));
    }
    std::vector<double> a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = x[i] - spec_.center[i];
    if (!identity_rotation_) {
        std::vector<double> rotated(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) acc += rotation_(i, j) * a[j];
            rotated[i] = acc;
        }
        a.swap(rotated);
    }
    if (!spec_.chain.empty()) {
        std::vector<double> scratch;
        apply_chain_inplace(a, spec_.chain, scratch);
    }
    return a;
}

double NeutralizedComponent::powered_form1(std::span<const double> z) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double zi = z[i];
        const double term = rho_dir_.select(i, zi) * spec_.kappa.select(i, zi) *
                            abs_pow(zi, 2.0 * spec_.exponents.select(i, zi));
        sum += term;
    }
    return sum;
}

double NeutralizedComponent::powered_form2(std::span<const double> z) const {
    double inner = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) inner += kappa_root_.select(i, z[i]) * z[i] * z[i];
    if (inner == 0.0) return 0.0;
    return rho_ * std::exp(spec_.exponent * std::log(inner));
}

double NeutralizedComponent::powered_term(std::span<const double> z) const {
    const double v = spec_.form == Form::PerDirection ? powered_form1(z) : powered_form2(z);
    if (!std::isfinite(v)) throw EvaluationOverflow(id_);
    return v;
}

double NeutralizedComponent::evaluate(std::span<const double> x, Sense sense) const {
    const auto z = internal_coords(x);
    const double powered = powered_term(z);
    const double value = sense == Sense::Minimize ? spec_.offset + powered : spec_.offset - powered;
    if (!std::isfinite(value)) throw EvaluationOverflow(id_);
    return value;
}

}  // namespace landgen
