#include "landgen/generator.hpp"

#include "landgen/instance.hpp"
#include "landgen/rng.hpp"
#include "landgen/version.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

namespace landgen {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr const char* kTransformKeys[] = {
    "additive_periodic.mu",  "additive_periodic.gamma", "additive_periodic.omega", "log_sinusoidal.mu",
    "log_sinusoidal.omega1", "log_sinusoidal.omega2",   "wavelet.mu",              "wavelet.omega",
    "wavelet.ell",           "wavelet.eta",             "tensor_interference.mu0", "tensor_interference.omega",
    "radial_hybrid.mu",      "radial_hybrid.p",
};

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

double sample(RandomStream& rs, const Interval& iv) {
    if (iv.lo == iv.hi) return iv.lo;
    if (iv.lo_open && !iv.hi_open) return rs.uniform_left_open(iv.lo, iv.hi);
    double v = rs.uniform(iv.lo, iv.hi);
    if (iv.lo_open && v == iv.lo) v = std::nextafter(iv.lo, iv.hi);
    return v;
}

Directional sample_directional(RandomStream rs, const Interval& iv, std::size_t d, SymmetryPolicy sym,
                               bool log_scale = false) {
    auto draw = [&] { return log_scale ? rs.log_uniform(iv.lo, iv.hi) : sample(rs, iv); };
    Directional out;
    out.plus.resize(d);
    out.minus.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        out.plus[i] = draw();
        out.minus[i] = sym == SymmetryPolicy::Matched ? out.plus[i] : draw();
    }
    return out;
}

[[noreturn]] void bad(const std::string& msg) { throw InvalidArgument("invalid strata: " + msg); }

void check_interval(const Interval& iv, const std::string& name, double min_lo, bool zero_allowed) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) bad(name + " bounds must be finite");
    if (iv.lo > iv.hi) bad(name + " has lo > hi");
    if (iv.lo < min_lo) bad(name + " lower end below " + std::to_string(min_lo));
    if (!zero_allowed && iv.lo == min_lo && !iv.lo_open) bad(name + " must exclude " + std::to_string(min_lo));
}

void check_int_range(const IntRange& r, const std::string& name, std::int64_t min_lo) {
    if (r.lo < min_lo) bad(name + " lower end below " + std::to_string(min_lo));
    if (r.lo > r.hi) bad(name + " has lo > hi");
}

const char* to_string(SymmetryPolicy s) { return s == SymmetryPolicy::Matched ? "matched" : "independent"; }
const char* to_string(WaveletExtent w) { return w == WaveletExtent::Eta ? "eta" : "explicit"; }

json interval_json(const Interval& iv) {
    return {{"lo", iv.lo}, {"hi", iv.hi}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

Interval interval_from(const json& j, Interval base, const std::string& path) {
    auto num = [&](const json& v, const std::string& at) {
        if (!v.is_number()) throw ParseError(at, "expected a number");
        return v.get<double>();
    };
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError(path, "expected [lo, hi]");
        base.lo = num(j[0], path + "/0");
        base.hi = num(j[1], path + "/1");
        return base;
    }
    if (j.is_number()) {
        base.lo = base.hi = j.get<double>();
        base.lo_open = base.hi_open = false;
        return base;
    }
    if (!j.is_object()) throw ParseError(path, "expected [lo, hi] or {lo, hi, lo_open, hi_open}");
    if (j.contains("lo")) base.lo = num(j["lo"], path + "/lo");
    if (j.contains("hi")) base.hi = num(j["hi"], path + "/hi");
    if (j.contains("lo_open")) base.lo_open = j["lo_open"].get<bool>();
    if (j.contains("hi_open")) base.hi_open = j["hi_open"].get<bool>();
    return base;
}

IntRange int_range_from(const json& j, const std::string& path) {
    if (j.is_number_integer()) return {j.get<std::int64_t>(), j.get<std::int64_t>()};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw ParseError(path, "expected [lo, hi] integers");
    }
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

TransformSpec sample_transform(const std::string& tag, RandomStream rs, std::size_t d, const GenerationStrata& s) {
    const auto& r = s.chain.ranges;
    const auto sym = s.symmetry;
    if (tag == "additive_periodic") {
        return AdditivePeriodic{sample_directional(rs.child("mu"), r.at("additive_periodic.mu"), d, sym),
                                sample_directional(rs.child("gamma"), r.at("additive_periodic.gamma"), d, sym),
                                sample_directional(rs.child("omega"), r.at("additive_periodic.omega"), d, sym)};
    }
    if (tag == "log_sinusoidal") {
        return LogSinusoidal{sample_directional(rs.child("mu"), r.at("log_sinusoidal.mu"), d, sym),
                             sample_directional(rs.child("omega1"), r.at("log_sinusoidal.omega1"), d, sym),
                             sample_directional(rs.child("omega2"), r.at("log_sinusoidal.omega2"), d, sym)};
    }
    if (tag == "wavelet") {
        Wavelet w{sample_directional(rs.child("mu"), r.at("wavelet.mu"), d, sym),
                  sample_directional(rs.child("omega"), r.at("wavelet.omega"), d, sym), std::nullopt, std::nullopt};
        if (s.chain.wavelet_extent == WaveletExtent::Eta) {
            auto es = rs.child("eta");
            w.eta = sample(es, r.at("wavelet.eta"));
        } else {
            w.ell = sample_directional(rs.child("ell"), r.at("wavelet.ell"), d, sym);
        }
        return w;
    }
    if (tag == "tensor_interference") {
        return TensorInterference{sample_directional(rs.child("mu0"), r.at("tensor_interference.mu0"), d, sym),
                                  sample_directional(rs.child("omega"), r.at("tensor_interference.omega"), d, sym)};
    }
    auto ps = rs.child("preset");
    const auto& preset = s.chain.radial_presets[static_cast<std::size_t>(
        ps.integer(0, static_cast<std::int64_t>(s.chain.radial_presets.size()) - 1))];
    auto ms = rs.child("mu");
    auto pp = rs.child("p");
    auto qs = rs.child("q");
    auto ws = rs.child("omega");
    RadialHybrid h;
    h.mu = sample(ms, r.at("radial_hybrid.mu"));
    h.p = sample(pp, r.at("radial_hybrid.p"));
    h.q = sample(qs, preset.q);
    h.omega = sample(ws, preset.omega);
    return h;
}

ComponentSpec sample_component(RandomStream cs, const BlockSpec& block, double offset, const GenerationStrata& s) {
    const std::size_t d = block.dim();
    ComponentSpec c;
    c.offset = offset;
    c.form = cs.child("form").bernoulli(s.form1_probability) ? Form::PerDirection : Form::SingleExponent;

    auto centers = cs.child("center");
    c.center.resize(d);
    for (std::size_t i = 0; i < d; ++i) c.center[i] = centers.uniform(block.bounds[i].lower, block.bounds[i].upper);

    if (c.form == Form::PerDirection) {
        c.exponents = sample_directional(cs.child("exponent"), s.exponent, d, s.symmetry);
    } else {
        auto es = cs.child("exponent");
        c.exponent = sample(es, s.exponent);
    }
    c.kappa = sample_directional(cs.child("kappa"), s.kappa, d, s.symmetry, true);
    auto ds = cs.child("delta");
    c.delta = sample(ds, s.delta);
    auto rs = cs.child("r_ref");
    c.r_ref = sample(rs, s.r_ref);

    c.angles = AngleMatrix(d);
    auto as = cs.child("angles");
    for (std::size_t u = 0; u + 1 < d; ++u) {
        for (std::size_t v = u + 1; v < d; ++v) {
            if (as.bernoulli(s.angle_fraction)) c.angles(u, v) = sample(as, s.angle);
        }
    }

    auto chain = cs.child("chain");
    const auto length = chain.integer(s.chain.length.lo, s.chain.length.hi);
    std::vector<std::pair<std::string, double>> ops;
    double total = 0.0;
    for (const auto& [tag, w] : s.chain.operator_weights) {
        if (w <= 0.0 || (tag == "tensor_interference" && d < 2)) continue;
        ops.emplace_back(tag, w);
        total += w;
    }
    for (std::int64_t t = 0; t < length && total > 0.0; ++t) {
        double pick = chain.uniform01() * total;
        std::size_t chosen = ops.size() - 1;
        for (std::size_t o = 0; o < ops.size(); ++o) {
            if (pick < ops[o].second) {
                chosen = o;
                break;
            }
            pick -= ops[o].second;
        }
        c.chain.push_back(sample_transform(ops[chosen].first, chain.child("transform/" + std::to_string(t)), d, s));
    }
    return c;
}

}  // namespace

GenerationStrata::GenerationStrata() {
    for (const char* key : kTransformKeys) chain.ranges[key] = parameter_info(key).suggested;
    chain.radial_presets = {
        {"near_uniform", Interval{0.9, 1.2, false, false}, Interval{0.1, 0.4, false, false}},
        {"widening", Interval{0.4, 0.6, false, false}, Interval{5.0, 10.0, false, false}},
    };
}

void check_strata(const GenerationStrata& s) {
    check_int_range(s.blocks, "blocks", 1);
    check_int_range(s.block_dim, "block_dim", 1);
    check_int_range(s.components, "components", 1);
    if (!std::isfinite(s.bounds.lower) || !std::isfinite(s.bounds.upper) || !(s.bounds.lower < s.bounds.upper)) {
        bad("bounds need finite lower < upper");
    }
    check_interval(s.weight, "weight", 0.0, false);
    if (!(s.form1_probability >= 0.0 && s.form1_probability <= 1.0)) bad("form1_probability must lie in [0, 1]");
    check_interval(s.exponent, "exponent", 0.0, false);
    check_interval(s.kappa, "kappa", 0.0, false);
    if (s.kappa.lo <= 0.0) bad("kappa lower end must be positive (log-uniform sampling)");
    check_interval(s.delta, "delta", 0.0, false);
    check_interval(s.r_ref, "r_ref", 0.0, false);
    check_interval(s.offset_base, "offset_base", -std::numeric_limits<double>::max(), true);
    check_interval(s.offset_gap, "offset_gap", 0.0, true);
    if (!(s.angle_fraction >= 0.0 && s.angle_fraction <= 1.0)) bad("angle_fraction must lie in [0, 1]");
    check_interval(s.angle, "angle", -kPi, true);
    if (s.angle.hi > kPi || (s.angle.hi == kPi && !s.angle.hi_open && s.angle.lo != s.angle.hi)) {
        bad("angle range must stay inside [-pi, pi)");
    }
    if (s.angle.lo == s.angle.hi && s.angle.lo == kPi) bad("angle range must stay inside [-pi, pi)");

    check_int_range(s.chain.length, "chain.length", 0);
    if (s.chain.length.hi > 3) bad("chain.length may not exceed 3");
    double total = 0.0;
    for (const auto& [tag, w] : s.chain.operator_weights) {
        const bool known = tag == "additive_periodic" || tag == "log_sinusoidal" || tag == "wavelet" ||
                           tag == "tensor_interference" || tag == "radial_hybrid";
        if (!known) bad("unknown operator \"" + tag + "\" in chain.operator_weights");
        if (!(w >= 0.0) || !std::isfinite(w)) bad("operator weight for " + tag + " must be non-negative");
        total += w;
    }
    if (s.chain.length.hi > 0 && total <= 0.0) bad("chain.operator_weights must enable at least one operator");
    for (const char* key : kTransformKeys) {
        auto it = s.chain.ranges.find(key);
        if (it == s.chain.ranges.end()) bad(std::string("missing range for ") + key);
        const std::string k = key;
        const bool amplitude = k.ends_with(".mu") || k.ends_with(".mu0");
        check_interval(it->second, k, 0.0, amplitude);
    }
    for (const auto& [key, iv] : s.chain.ranges) {
        if (std::find_if(std::begin(kTransformKeys), std::end(kTransformKeys),
                         [&](const char* k) { return key == k; }) == std::end(kTransformKeys)) {
            bad("unknown transform range \"" + key + "\"");
        }
    }
    const auto& p = s.chain.ranges.at("radial_hybrid.p");
    if (p.hi > 1.0 || (p.hi == 1.0 && !p.hi_open)) bad("radial_hybrid.p must stay below 1");
    auto radial = s.chain.operator_weights.find("radial_hybrid");
    if (radial != s.chain.operator_weights.end() && radial->second > 0.0 && s.chain.radial_presets.empty()) {
        bad("radial_hybrid enabled without presets");
    }
    for (const auto& preset : s.chain.radial_presets) {
        check_interval(preset.q, "radial preset " + preset.name + " q", 0.0, false);
        check_interval(preset.omega, "radial preset " + preset.name + " omega", 0.0, false);
    }
}

json strata_to_json(const GenerationStrata& s) {
    json ranges = json::object();
    for (const auto& [k, iv] : s.chain.ranges) ranges[k] = interval_json(iv);
    json presets = json::array();
    for (const auto& p : s.chain.radial_presets) {
        presets.push_back({{"name", p.name}, {"q", interval_json(p.q)}, {"omega", interval_json(p.omega)}});
    }
    return {
        {"blocks", {s.blocks.lo, s.blocks.hi}},
        {"block_dim", {s.block_dim.lo, s.block_dim.hi}},
        {"components", {s.components.lo, s.components.hi}},
        {"bounds", {s.bounds.lower, s.bounds.upper}},
        {"weight", interval_json(s.weight)},
        {"form1_probability", s.form1_probability},
        {"exponent", interval_json(s.exponent)},
        {"kappa", interval_json(s.kappa)},
        {"delta", interval_json(s.delta)},
        {"r_ref", interval_json(s.r_ref)},
        {"offset_base", interval_json(s.offset_base)},
        {"offset_gap", interval_json(s.offset_gap)},
        {"symmetry", to_string(s.symmetry)},
        {"angle_fraction", s.angle_fraction},
        {"angle", interval_json(s.angle)},
        {"chain",
         {{"length", {s.chain.length.lo, s.chain.length.hi}},
          {"operator_weights", s.chain.operator_weights},
          {"wavelet_extent", to_string(s.chain.wavelet_extent)},
          {"ranges", ranges},
          {"radial_presets", presets}}},
        {"objective_sense", std::string(to_string(s.sense))},
        {"shuffle_indices", s.shuffle_indices},
    };
}

GenerationStrata strata_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("", "strata document must be a JSON object");
    GenerationStrata s;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& key = it.key();
            const json& v = it.value();
            const std::string path = "/" + key;
            if (key == "blocks") s.blocks = int_range_from(v, path);
            else if (key == "block_dim") s.block_dim = int_range_from(v, path);
            else if (key == "components") s.components = int_range_from(v, path);
            else if (key == "bounds") {
                if (!v.is_array() || v.size() != 2) throw ParseError(path, "expected [lower, upper]");
                s.bounds = {v[0].get<double>(), v[1].get<double>()};
            }
            else if (key == "weight") s.weight = interval_from(v, s.weight, path);
            else if (key == "form1_probability") s.form1_probability = v.get<double>();
            else if (key == "exponent") s.exponent = interval_from(v, s.exponent, path);
            else if (key == "kappa") s.kappa = interval_from(v, s.kappa, path);
            else if (key == "delta") s.delta = interval_from(v, s.delta, path);
            else if (key == "r_ref") s.r_ref = interval_from(v, s.r_ref, path);
            else if (key == "offset_base") s.offset_base = interval_from(v, s.offset_base, path);
            else if (key == "offset_gap") s.offset_gap = interval_from(v, s.offset_gap, path);
            else if (key == "symmetry") {
                const auto name = v.get<std::string>();
                if (name == "matched") s.symmetry = SymmetryPolicy::Matched;
                else if (name == "independent") s.symmetry = SymmetryPolicy::Independent;
                else throw ParseError(path, "expected \"matched\" or \"independent\"");
            }
            else if (key == "angle_fraction") s.angle_fraction = v.get<double>();
            else if (key == "angle") s.angle = interval_from(v, s.angle, path);
            else if (key == "objective_sense") {
                const auto name = v.get<std::string>();
                if (name == "minimize") s.sense = Sense::Minimize;
                else if (name == "maximize") s.sense = Sense::Maximize;
                else throw ParseError(path, "expected \"minimize\" or \"maximize\"");
            }
            else if (key == "shuffle_indices") s.shuffle_indices = v.get<bool>();
            else if (key == "chain") {
                if (!v.is_object()) throw ParseError(path, "expected an object");
                for (auto c = v.begin(); c != v.end(); ++c) {
                    const std::string cpath = path + "/" + c.key();
                    if (c.key() == "length") s.chain.length = int_range_from(c.value(), cpath);
                    else if (c.key() == "operator_weights") {
                        s.chain.operator_weights.clear();
                        for (auto w = c.value().begin(); w != c.value().end(); ++w) {
                            s.chain.operator_weights[w.key()] = w.value().get<double>();
                        }
                    }
                    else if (c.key() == "wavelet_extent") {
                        const auto name = c.value().get<std::string>();
                        if (name == "eta") s.chain.wavelet_extent = WaveletExtent::Eta;
                        else if (name == "explicit") s.chain.wavelet_extent = WaveletExtent::Explicit;
                        else throw ParseError(cpath, "expected \"eta\" or \"explicit\"");
                    }
                    else if (c.key() == "ranges") {
                        for (auto r = c.value().begin(); r != c.value().end(); ++r) {
                            auto found = s.chain.ranges.find(r.key());
                            if (found == s.chain.ranges.end()) {
                                throw ParseError(cpath + "/" + r.key(), "unknown transform range");
                            }
                            found->second = interval_from(r.value(), found->second, cpath + "/" + r.key());
                        }
                    }
                    else if (c.key() == "radial_presets") {
                        s.chain.radial_presets.clear();
                        for (const auto& p : c.value()) {
                            s.chain.radial_presets.push_back({p.at("name").get<std::string>(),
                                                              interval_from(p.at("q"), {}, cpath + "/q"),
                                                              interval_from(p.at("omega"), {}, cpath + "/omega")});
                        }
                    }
                    else throw ParseError(cpath, "unknown key \"" + c.key() + "\"");
                }
            }
            else throw ParseError(path, "unknown key \"" + key + "\"");
        }
    } catch (const json::exception& e) {
        throw ParseError("", e.what());
    }
    return s;
}

GenerationStrata load_strata(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    json doc;
    try {
        doc = json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    return strata_from_json(doc);
}

std::string strata_digest(const GenerationStrata& strata) {
    return hex64(fnv1a64(strata_to_json(strata).dump()));
}

ProblemInstance random_instance(std::uint64_t seed, const GenerationStrata& s) {
    check_strata(s);
    RandomStream root(seed, "instance");

    auto structure = root.child("structure");
    const auto nblocks = static_cast<std::size_t>(structure.integer(s.blocks.lo, s.blocks.hi));
    std::vector<std::size_t> dims(nblocks);
    for (auto& d : dims) d = static_cast<std::size_t>(structure.integer(s.block_dim.lo, s.block_dim.hi));
    const std::size_t total = std::accumulate(dims.begin(), dims.end(), std::size_t{0});

    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (s.shuffle_indices) {
        auto shuffle = root.child("indices");
        for (std::size_t i = total; i > 1; --i) {
            std::swap(order[i - 1], order[static_cast<std::size_t>(shuffle.integer(0, static_cast<std::int64_t>(i) - 1))]);
        }
    }

    ProblemInstance inst;
    inst.dimension = total;
    inst.sense = s.sense;
    std::size_t next_index = 0;
    for (std::size_t j = 0; j < nblocks; ++j) {
        const auto bs = root.child("block/" + std::to_string(j));
        BlockSpec block;
        block.indices.assign(order.begin() + static_cast<std::ptrdiff_t>(next_index),
                             order.begin() + static_cast<std::ptrdiff_t>(next_index + dims[j]));
        next_index += dims[j];
        block.bounds.assign(dims[j], s.bounds);
        auto ws = bs.child("weight");
        block.weight = sample(ws, s.weight);
        const auto ncomp = static_cast<std::size_t>(bs.child("components").integer(s.components.lo, s.components.hi));

        // Offsets: one base level plus non-negative gaps, assigned in random order.
        auto os = bs.child("offsets");
        std::vector<double> offsets(ncomp);
        offsets[0] = sample(os, s.offset_base);
        for (std::size_t k = 1; k < ncomp; ++k) offsets[k] = offsets[k - 1] + sample(os, s.offset_gap);
        for (std::size_t i = ncomp; i > 1; --i) {
            std::swap(offsets[i - 1], offsets[static_cast<std::size_t>(os.integer(0, static_cast<std::int64_t>(i) - 1))]);
        }
        if (s.sense == Sense::Maximize) {
            for (auto& b : offsets) b = -b;
        }

        for (std::size_t k = 0; k < ncomp; ++k) {
            block.components.push_back(sample_component(bs.child("component/" + std::to_string(k)), block, offsets[k], s));
        }
        inst.blocks.push_back(std::move(block));
    }

    inst.provenance = Provenance{seed, std::string(kGeneratorVersion), std::string(RandomStream::kAlgorithm),
                                 strata_digest(s), std::nullopt, std::nullopt};
    return inst;
}

std::vector<ProblemInstance> instance_family(std::uint64_t seed, const ProblemInstance& base, std::size_t count,
                                             const FamilyOptions& options) {
    auto report = validate(base);
    if (!report.ok()) throw InvalidInstance(std::move(report));
    if (count == 0) throw InvalidArgument("instance_family: count must be positive");
    const std::string digest = global_characteristics_digest(base);
    const bool minimize = base.sense == Sense::Minimize;

    double reference = minimize ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
    for (const auto& b : base.blocks) {
        for (const auto& c : b.components) reference = minimize ? std::min(reference, c.offset) : std::max(reference, c.offset);
    }

    RandomStream root(seed, "family");
    std::vector<ProblemInstance> family;
    family.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
        const auto ms = root.child("member/" + std::to_string(m));
        ProblemInstance inst = base;
        double shift = 0.0;
        if (options.offsets) {
            auto ss = ms.child("offset_shift");
            double level = sample(ss, options.offset_base);
            if (!minimize) level = -level;
            shift = level - reference;
        }
        for (std::size_t j = 0; j < inst.blocks.size(); ++j) {
            auto& block = inst.blocks[j];
            for (std::size_t k = 0; k < block.components.size(); ++k) {
                auto& c = block.components[k];
                const std::string id = std::to_string(j) + "/" + std::to_string(k);
                if (options.offsets) c.offset += shift;
                if (options.centers) {
                    auto cs = ms.child("center/" + id);
                    for (std::size_t i = 0; i < c.center.size(); ++i) {
                        c.center[i] = cs.uniform(block.bounds[i].lower, block.bounds[i].upper);
                    }
                }
                if (options.angles) {
                    auto as = ms.child("angles/" + id);
                    for (std::size_t u = 0; u < c.angles.dim(); ++u) {
                        for (std::size_t v = u + 1; v < c.angles.dim(); ++v) {
                            if (c.angles(u, v) == 0.0) continue;
                            double a = 0.0;
                            while (a == 0.0) a = as.uniform(-kPi, kPi);
                            c.angles(u, v) = a;
                        }
                    }
                }
            }
        }
        Provenance p;
        p.seed = seed;
        p.generator_version = std::string(kGeneratorVersion);
        p.prng = std::string(RandomStream::kAlgorithm);
        p.strata_digest = base.provenance ? base.provenance->strata_digest : "";
        p.family_of = digest;
        p.member = m;
        inst.provenance = std::move(p);
        family.push_back(std::move(inst));
    }
    return family;
}

std::string global_characteristics_digest(const ProblemInstance& instance) {
    json doc = to_json(instance);
    doc.erase("provenance");
    for (auto& block : doc["blocks"]) {
        for (auto& c : block["components"]) {
            c.erase("center");
            c.erase("offset");
            json pattern = json::array();
            for (const auto& tri : c["angles"]) pattern.push_back({tri[0], tri[1]});
            c["angles"] = std::move(pattern);
        }
    }
    return hex64(fnv1a64(doc.dump()));
}

}  // namespace landgen
