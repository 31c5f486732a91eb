#include "landgen/instance.hpp"

#include "landgen/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>

namespace landgen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

class Checker {
public:
    explicit Checker(ValidationReport& r) : r_(r) {}

    void error(const std::string& path, std::string msg) { r_.errors.push_back({path, std::move(msg)}); }
    void warn(const std::string& path, std::string msg) { r_.warnings.push_back({path, std::move(msg)}); }

    // Hard constraint: strictly positive (or non-negative) and finite.
    bool positive(double v, const std::string& path, const char* what, bool allow_zero = false) {
        if (!std::isfinite(v) || (allow_zero ? v < 0.0 : v <= 0.0)) {
            error(path, std::string(what) + (allow_zero ? " must be non-negative" : " must be strictly positive"));
            return false;
        }
        return true;
    }

    void suggested(double v, const std::string& path, std::string_view key) {
        const auto& info = parameter_info(key);
        if (std::isfinite(v) && !info.suggested.contains(v)) {
            warn(path, fmt(v) + " is outside the suggested range " + info.suggested.to_string() + " for " +
                           std::string(key));
        }
    }

    bool length(const std::vector<double>& v, std::size_t d, const std::string& path) {
        if (v.size() != d) {
            error(path, "expected " + std::to_string(d) + " values, found " + std::to_string(v.size()));
            return false;
        }
        return true;
    }

    // Per-coordinate directional parameter: length, hard bound, suggested range.
    void directional(const Directional& p, std::size_t d, const std::string& path, const char* what,
                     std::string_view key, bool allow_zero) {
        const bool ok_plus = length(p.plus, d, path + "/plus");
        const bool ok_minus = length(p.minus, d, path + "/minus");
        if (!ok_plus || !ok_minus) return;
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& [side, vec] : {std::pair{"/plus/", &p.plus}, std::pair{"/minus/", &p.minus}}) {
                const std::string at = path + side + std::to_string(i);
                if (positive((*vec)[i], at, what, allow_zero) && !key.empty()) suggested((*vec)[i], at, key);
            }
        }
    }

private:
    ValidationReport& r_;
};

void check_transform(Checker& ck, const TransformSpec& t, std::size_t d, const std::string& path) {
    std::visit(Overloaded{
                   [&](const AdditivePeriodic& s) {
                       ck.directional(s.mu, d, path + "/mu", "ripple strength", "additive_periodic.mu", true);
                       ck.directional(s.gamma, d, path + "/gamma", "envelope rate", "additive_periodic.gamma", false);
                       ck.directional(s.omega, d, path + "/omega", "frequency", "additive_periodic.omega", false);
                   },
                   [&](const LogSinusoidal& s) {
                       ck.directional(s.mu, d, path + "/mu", "modulation strength", "log_sinusoidal.mu", true);
                       ck.directional(s.omega1, d, path + "/omega1", "log-space frequency", "log_sinusoidal.omega1",
                                      false);
                       ck.directional(s.omega2, d, path + "/omega2", "log-space frequency", "log_sinusoidal.omega2",
                                      false);
                   },
                   [&](const Wavelet& s) {
                       ck.directional(s.mu, d, path + "/mu", "amplitude", "wavelet.mu", true);
                       ck.directional(s.omega, d, path + "/omega", "carrier frequency", "wavelet.omega", false);
                       if (s.ell && s.eta) {
                           ck.error(path, "wavelet sets both ell and eta; choose exactly one extent mode");
                       } else if (!s.ell && !s.eta) {
                           ck.error(path, "wavelet needs either ell or eta");
                       } else if (s.ell) {
                           ck.directional(*s.ell, d, path + "/ell", "envelope length", "wavelet.ell", false);
                       } else if (ck.positive(*s.eta, path + "/eta", "extent scale")) {
                           ck.suggested(*s.eta, path + "/eta", "wavelet.eta");
                       }
                   },
                   [&](const TensorInterference& s) {
                       ck.directional(s.mu0, d, path + "/mu0", "base amplitude", "tensor_interference.mu0", true);
                       ck.directional(s.omega, d, path + "/omega", "frequency", "tensor_interference.omega", false);
                       if (d == 1) {
                           ck.warn(path, "tensor_interference on a 1-dimensional block has no coupling partners");
                       }
                   },
                   [&](const RadialHybrid& s) {
                       if (ck.positive(s.mu, path + "/mu", "amplitude", true)) {
                           ck.suggested(s.mu, path + "/mu", "radial_hybrid.mu");
                       }
                       if (!std::isfinite(s.p) || s.p <= 0.0 || s.p >= 1.0) {
                           ck.error(path + "/p", "radial exponent p must lie in (0, 1)");
                       } else {
                           ck.suggested(s.p, path + "/p", "radial_hybrid.p");
                       }
                       if (ck.positive(s.q, path + "/q", "ring spacing q")) {
                           ck.suggested(s.q, path + "/q", "radial_hybrid.q");
                       }
                       if (ck.positive(s.omega, path + "/omega", "ring density")) {
                           ck.suggested(s.omega, path + "/omega", "radial_hybrid.omega");
                       }
                   },
               },
               t);
}

void check_angles(Checker& ck, ValidationReport& report, const AngleMatrix& angles, std::size_t d,
                  const std::string& path) {
    if (angles.dim() != d) {
        ck.error(path, "angle matrix has dimension " + std::to_string(angles.dim()) + ", expected " +
                           std::to_string(d));
        return;
    }
    bool ok = true;
    for (std::size_t u = 0; u < d; ++u) {
        for (std::size_t v = 0; v < d; ++v) {
            const double a = angles(u, v);
            if (a == 0.0) continue;
            const std::string at = path + "/" + std::to_string(u + 1) + "," + std::to_string(v + 1);
            if (u >= v) {
                ck.error(at, "angle matrix must be strictly upper-triangular");
                ok = false;
            } else if (!std::isfinite(a) || a < -std::numbers::pi || a >= std::numbers::pi) {
                ck.error(at, "angle " + fmt(a) + " outside [-pi, pi)");
                ok = false;
            }
        }
    }
    if (!ok) return;
    const double residual = orthogonality_residual(build_rotation(angles));
    report.rotation_residuals.push_back({path, residual});
    if (!(residual <= kOrthogonalityTolerance)) {
        ck.error(path, "rotation orthogonality residual " + fmt(residual) + " exceeds tolerance");
    }
}

void check_component(Checker& ck, ValidationReport& report, const ComponentSpec& c, const BlockSpec& block,
                     const std::string& path) {
    const std::size_t d = block.dim();
    if (ck.length(c.center, d, path + "/center") && block.bounds.size() == d) {
        for (std::size_t i = 0; i < d; ++i) {
            const double x = c.center[i];
            const auto& b = block.bounds[i];
            if (!std::isfinite(x) || x < b.lower || x > b.upper) {
                ck.error(path + "/center/" + std::to_string(i),
                         "center coordinate " + fmt(x) + " outside block bounds");
            }
        }
    }
    if (!std::isfinite(c.offset)) ck.error(path + "/offset", "offset must be finite");

    ck.directional(c.kappa, d, path + "/kappa", "anisotropy", "component.kappa", false);
    if (c.form == Form::PerDirection) {
        ck.directional(c.exponents, d, path + "/exponents", "exponent", "component.exponent", false);
    } else if (ck.positive(c.exponent, path + "/exponent", "exponent")) {
        ck.suggested(c.exponent, path + "/exponent", "component.exponent");
    }
    if (ck.positive(c.delta, path + "/delta", "delta")) ck.suggested(c.delta, path + "/delta", "component.delta");
    if (ck.positive(c.r_ref, path + "/r_ref", "r_ref")) ck.suggested(c.r_ref, path + "/r_ref", "component.r_ref");

    check_angles(ck, report, c.angles, d, path + "/angles");
    for (std::size_t t = 0; t < c.chain.size(); ++t) {
        check_transform(ck, c.chain[t], d, path + "/transforms/" + std::to_string(t));
    }
}

}  // namespace

double ValidationReport::max_rotation_residual() const noexcept {
    double m = 0.0;
    for (const auto& r : rotation_residuals) m = std::max(m, r.residual);
    return m;
}

InvalidInstance::InvalidInstance(ValidationReport report)
    : std::invalid_argument("invalid instance: " +
                            (report.errors.empty() ? std::string("unknown error")
                                                   : report.errors.front().path + ": " +
                                                         report.errors.front().message)),
      report_(std::move(report)) {}

BatchDimensionError::BatchDimensionError(std::size_t index, std::size_t found, std::size_t expected)
    : InvalidArgument("point " + std::to_string(index) + " has dimension " + std::to_string(found) +
                      ", instance expects " + std::to_string(expected)),
      index_(index) {}

ValidationReport validate(const ProblemInstance& inst) {
    ValidationReport report;
    Checker ck(report);

    if (inst.schema_version != kSchemaVersion) {
        ck.error("/schema_version", "unsupported schema_version " + std::to_string(inst.schema_version));
    }
    if (inst.dimension == 0) ck.error("/dimension", "dimension must be at least 1");
    if (inst.blocks.empty()) ck.error("/blocks", "instance needs at least one block");

    std::vector<int> owners(inst.dimension, 0);
    for (std::size_t j = 0; j < inst.blocks.size(); ++j) {
        const auto& block = inst.blocks[j];
        const std::string path = "/blocks/" + std::to_string(j);
        const std::size_t d = block.dim();
        if (d == 0) {
            ck.error(path + "/indices", "block has no variables");
        } else if (d < 2) {
            ck.warn(path + "/indices", "block dimension 1 is below the suggested minimum of 2");
        }
        std::vector<std::size_t> sorted = block.indices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            ck.error(path + "/indices", "block lists a variable more than once");
        }
        for (std::size_t idx : block.indices) {
            if (idx >= inst.dimension) {
                ck.error(path + "/indices", "variable index " + std::to_string(idx + 1) + " outside 1.." +
                                                std::to_string(inst.dimension));
            } else {
                ++owners[idx];
            }
        }
        if (!std::isfinite(block.weight) || block.weight <= 0.0) {
            ck.error(path + "/weight", "block weight must be strictly positive");
        }
        if (block.bounds.size() != d) {
            ck.error(path + "/bounds", "expected " + std::to_string(d) + " bounds, found " +
                                           std::to_string(block.bounds.size()));
        } else {
            for (std::size_t i = 0; i < d; ++i) {
                const auto& b = block.bounds[i];
                if (!std::isfinite(b.lower) || !std::isfinite(b.upper) || !(b.lower < b.upper)) {
                    ck.error(path + "/bounds/" + std::to_string(i), "bounds need finite lower < upper");
                }
            }
        }
        if (block.components.empty()) {
            ck.error(path + "/components", "block needs at least one component");
        } else if (block.components.size() > kMaxSuggestedComponents) {
            ck.warn(path + "/components", std::to_string(block.components.size()) +
                                              " components exceed the suggested maximum of " +
                                              std::to_string(kMaxSuggestedComponents));
        }
        for (std::size_t k = 0; k < block.components.size(); ++k) {
            check_component(ck, report, block.components[k], block, path + "/components/" + std::to_string(k));
        }
    }

    for (std::size_t i = 0; i < owners.size(); ++i) {
        if (owners[i] == 0) {
            ck.error("/blocks", "variable " + std::to_string(i + 1) + " is not covered by any block");
        } else if (owners[i] > 1 && !inst.overlap_allowed) {
            ck.error("/blocks", "variable " + std::to_string(i + 1) +
                                    " belongs to several blocks but overlap_allowed is false");
        }
    }
    return report;
}

std::vector<EvalResult> batch_evaluate(const Problem& problem, std::span<const std::vector<double>> points,
                                       BatchOptions options) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != problem.dimension()) {
            throw BatchDimensionError(i, points[i].size(), problem.dimension());
        }
    }
    std::vector<EvalResult> results(points.size());
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, points.size() / 64)));

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) results[i] = problem.evaluate(points[i]);
    };
    if (threads <= 1) {
        run(0, points.size());
        return results;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    const std::size_t chunk = (points.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(points.size(), t * chunk);
        const std::size_t end = std::min(points.size(), begin + chunk);
        pool.emplace_back([&, t, begin, end] {
            try {
                run(begin, end);
            } catch (...) {
                failures[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return results;
}

}  // namespace landgen
