#pragma once

#include "landgen/error.hpp"
#include "landgen/rotation.hpp"
#include "landgen/transforms.hpp"

#include <span>
#include <vector>

namespace landgen {

enum class Form {
    PerDirection,    ///< sum of per-term powers, exponents per dimension and direction
    SingleExponent,  ///< one exponent applied to the anisotropic quadratic sum
};

enum class Sense { Minimize, Maximize };

/// All user-facing parameters of one basin.
struct ComponentSpec {
    Form form = Form::PerDirection;
    std::vector<double> center;
    double offset = 0.0;       ///< value at the center
    Directional exponents;     ///< PerDirection only
    double exponent = 0.6;     ///< SingleExponent only
    Directional kappa;         ///< anisotropy, strictly positive
    AngleMatrix angles;
    TransformChain chain;
    double delta = 100.0;      ///< rise at the reference radius
    double r_ref = 100.0;

    std::size_t dim() const noexcept { return center.size(); }

    friend bool operator==(const ComponentSpec&, const ComponentSpec&) = default;
};

/// Builds a PerDirection spec with matched directions and no rotation.
ComponentSpec make_per_direction(std::vector<double> center, double offset, std::vector<double> exponents,
                                 std::vector<double> kappa, double delta = 100.0, double r_ref = 100.0);

/// Builds a SingleExponent spec with matched directions and no rotation.
ComponentSpec make_single_exponent(std::vector<double> center, double offset, double exponent,
                                   std::vector<double> kappa, double delta = 100.0, double r_ref = 100.0);

/// A component with its rotation and neutralizing factors precomputed.
/// Immutable after construction and safe to evaluate concurrently.
class NeutralizedComponent {
public:
    const ComponentSpec& spec() const noexcept { return spec_; }
    const Matrix& rotation() const noexcept { return rotation_; }
    ComponentId id() const noexcept { return id_; }

    /// PerDirection factors, one per dimension and direction.
    const Directional& rho_per_direction() const noexcept { return rho_dir_; }
    /// SingleExponent factor.
    double rho() const noexcept { return rho_; }
    /// (kappa+_i + kappa-_i) / 2.
    const std::vector<double>& kappa_bar_per_dim() const noexcept { return kappa_bar_i_; }
    /// Mean of kappa_bar_per_dim.
    double kappa_bar() const noexcept { return kappa_bar_; }

    /// Transformed, rotated offset from the center.
    std::vector<double> internal_coords(std::span<const double> x) const;

    /// Component value; in maximize sense the powered term is subtracted.
    double evaluate(std::span<const double> x, Sense sense = Sense::Minimize) const;

    /// Powered (non-negative) part of the value, given internal coordinates.
    double powered_term(std::span<const double> z) const;

private:
    friend NeutralizedComponent neutralize_form1(const ComponentSpec&, ComponentId);
    friend NeutralizedComponent neutralize_form2(const ComponentSpec&, ComponentId);

    NeutralizedComponent(const ComponentSpec& spec, ComponentId id);

    double powered_form1(std::span<const double> z) const;
    double powered_form2(std::span<const double> z) const;

    ComponentSpec spec_;
    ComponentId id_;
    Matrix rotation_;
    bool identity_rotation_ = true;
    Directional rho_dir_;
    double rho_ = 0.0;
    std::vector<double> kappa_bar_i_;
    double kappa_bar_ = 0.0;
    Directional kappa_root_;  ///< kappa^(1/p), SingleExponent only
};

/// rho(i,s) = (delta / d) / (kappa_bar * r_ref^(2 p(i,s))).
NeutralizedComponent neutralize_form1(const ComponentSpec& spec, ComponentId id = {});

/// rho = delta / (r_ref^2 * sum_i kappa_bar_i^(1/p))^p.
NeutralizedComponent neutralize_form2(const ComponentSpec& spec, ComponentId id = {});

/// Dispatches on spec.form.
NeutralizedComponent neutralize(const ComponentSpec& spec, ComponentId id = {});

}  // namespace landgen
