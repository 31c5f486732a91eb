#include "landgen/serialize.hpp"

#include "landgen/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace landgen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

constexpr std::string_view kValidTags =
    "additive_periodic, log_sinusoidal, wavelet, tensor_interference, radial_hybrid";

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path, msg); }

const json& field(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing required key \"") + key + "\"");
    return *it;
}

void only_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto a : allowed) known = known || it.key() == a;
        if (!known) fail(path + "/" + it.key(), "unknown key \"" + it.key() + "\"");
    }
}

// Reals may be JSON numbers or decimal strings.
double real(const json& j, const std::string& path) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size()) return v;
        fail(path, "malformed number \"" + s + "\"");
    }
    fail(path, "expected a number");
}

std::uint64_t unsigned_int(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size()) return v;
    }
    fail(path, "expected a non-negative integer");
}

std::vector<double> reals(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(real(j[i], path + "/" + std::to_string(i)));
    return out;
}

json directional_to_json(const Directional& d) { return {{"plus", d.plus}, {"minus", d.minus}}; }

// {"plus": [...], "minus": [...]}, or a bare array for matched directions.
Directional directional(const json& j, const std::string& path) {
    if (j.is_array()) return Directional::matched(reals(j, path));
    only_keys(j, {"plus", "minus"}, path);
    return {reals(field(j, "plus", path), path + "/plus"), reals(field(j, "minus", path), path + "/minus")};
}

json angles_to_json(const AngleMatrix& a) {
    json out = json::array();
    for (std::size_t u = 0; u < a.dim(); ++u) {
        for (std::size_t v = 0; v < a.dim(); ++v) {
            if (a(u, v) != 0.0) out.push_back({u + 1, v + 1, a(u, v)});
        }
    }
    return out;
}

AngleMatrix angles_from_json(const json& j, std::size_t d, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of [u, v, angle] triples");
    AngleMatrix a(d);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string at = path + "/" + std::to_string(t);
        const auto& tri = j[t];
        if (!tri.is_array() || tri.size() != 3) fail(at, "expected [u, v, angle]");
        const auto u = unsigned_int(tri[0], at + "/0");
        const auto v = unsigned_int(tri[1], at + "/1");
        if (u < 1 || v < 1 || u > d || v > d) fail(at, "angle index outside 1.." + std::to_string(d));
        a(u - 1, v - 1) = real(tri[2], at + "/2");
    }
    return a;
}

json component_to_json(const ComponentSpec& c) {
    json j;
    j["center"] = c.center;
    j["offset"] = c.offset;
    j["kappa"] = directional_to_json(c.kappa);
    j["angles"] = angles_to_json(c.angles);
    j["delta"] = c.delta;
    j["r_ref"] = c.r_ref;
    if (c.form == Form::PerDirection) {
        j["form"] = "per_direction";
        j["exponents"] = directional_to_json(c.exponents);
    } else {
        j["form"] = "single_exponent";
        j["exponent"] = c.exponent;
    }
    json chain = json::array();
    for (const auto& t : c.chain) chain.push_back(transform_to_json(t));
    j["transforms"] = std::move(chain);
    return j;
}

ComponentSpec component_from_json(const json& j, std::size_t d, const std::string& path) {
    only_keys(j, {"form", "center", "offset", "exponents", "exponent", "kappa", "angles", "transforms", "delta", "r_ref"},
              path);
    ComponentSpec c;
    const auto& form = field(j, "form", path);
    if (form == "per_direction") {
        c.form = Form::PerDirection;
        c.exponents = directional(field(j, "exponents", path), path + "/exponents");
        if (j.contains("exponent")) fail(path + "/exponent", "per_direction components use \"exponents\"");
    } else if (form == "single_exponent") {
        c.form = Form::SingleExponent;
        c.exponent = real(field(j, "exponent", path), path + "/exponent");
        if (j.contains("exponents")) fail(path + "/exponents", "single_exponent components use \"exponent\"");
    } else {
        fail(path + "/form", "unknown form (expected per_direction or single_exponent)");
    }
    c.center = reals(field(j, "center", path), path + "/center");
    c.offset = real(field(j, "offset", path), path + "/offset");
    c.kappa = directional(field(j, "kappa", path), path + "/kappa");
    c.angles = j.contains("angles") ? angles_from_json(j["angles"], d, path + "/angles") : AngleMatrix(d);
    c.delta = j.contains("delta") ? real(j["delta"], path + "/delta") : 100.0;
    c.r_ref = j.contains("r_ref") ? real(j["r_ref"], path + "/r_ref") : 100.0;
    if (j.contains("transforms")) {
        const auto& chain = j["transforms"];
        if (!chain.is_array()) fail(path + "/transforms", "expected an array");
        for (std::size_t t = 0; t < chain.size(); ++t) {
            c.chain.push_back(transform_from_json(chain[t], path + "/transforms/" + std::to_string(t)));
        }
    }
    return c;
}

json block_to_json(const BlockSpec& b) {
    json j;
    json idx = json::array();
    for (auto i : b.indices) idx.push_back(i + 1);
    j["indices"] = std::move(idx);
    j["weight"] = b.weight;
    json bounds = json::array();
    for (const auto& bd : b.bounds) bounds.push_back({bd.lower, bd.upper});
    j["bounds"] = std::move(bounds);
    json comps = json::array();
    for (const auto& c : b.components) comps.push_back(component_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

BlockSpec block_from_json(const json& j, const std::string& path) {
    only_keys(j, {"indices", "weight", "bounds", "components"}, path);
    BlockSpec b;
    const auto& idx = field(j, "indices", path);
    if (!idx.is_array()) fail(path + "/indices", "expected an array of 1-based indices");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const auto v = unsigned_int(idx[i], path + "/indices/" + std::to_string(i));
        if (v == 0) fail(path + "/indices/" + std::to_string(i), "indices are 1-based");
        b.indices.push_back(static_cast<std::size_t>(v - 1));
    }
    b.weight = j.contains("weight") ? real(j["weight"], path + "/weight") : 1.0;
    if (j.contains("bounds")) {
        const auto& bounds = j["bounds"];
        if (!bounds.is_array()) fail(path + "/bounds", "expected an array of [lower, upper] pairs");
        for (std::size_t i = 0; i < bounds.size(); ++i) {
            const std::string at = path + "/bounds/" + std::to_string(i);
            if (!bounds[i].is_array() || bounds[i].size() != 2) fail(at, "expected [lower, upper]");
            b.bounds.push_back({real(bounds[i][0], at + "/0"), real(bounds[i][1], at + "/1")});
        }
    } else {
        b.bounds.assign(b.indices.size(), Bounds{});
    }
    const auto& comps = field(j, "components", path);
    if (!comps.is_array()) fail(path + "/components", "expected an array");
    for (std::size_t k = 0; k < comps.size(); ++k) {
        b.components.push_back(component_from_json(comps[k], b.indices.size(), path + "/components/" + std::to_string(k)));
    }
    return b;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

json transform_to_json(const TransformSpec& t) {
    json j = std::visit(Overloaded{
                            [](const AdditivePeriodic& s) -> json {
                                return {{"mu", directional_to_json(s.mu)},
                                        {"gamma", directional_to_json(s.gamma)},
                                        {"omega", directional_to_json(s.omega)}};
                            },
                            [](const LogSinusoidal& s) -> json {
                                return {{"mu", directional_to_json(s.mu)},
                                        {"omega1", directional_to_json(s.omega1)},
                                        {"omega2", directional_to_json(s.omega2)}};
                            },
                            [](const Wavelet& s) -> json {
                                json w = {{"mu", directional_to_json(s.mu)}, {"omega", directional_to_json(s.omega)}};
                                if (s.ell) w["ell"] = directional_to_json(*s.ell);
                                if (s.eta) w["eta"] = *s.eta;
                                return w;
                            },
                            [](const TensorInterference& s) -> json {
                                return {{"mu0", directional_to_json(s.mu0)}, {"omega", directional_to_json(s.omega)}};
                            },
                            [](const RadialHybrid& s) -> json {
                                return {{"mu", s.mu}, {"p", s.p}, {"q", s.q}, {"omega", s.omega}};
                            },
                        },
                        t);
    j["type"] = std::string(transform_tag(t));
    return j;
}

TransformSpec transform_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a transform object");
    const auto& type = field(j, "type", path);
    if (!type.is_string()) fail(path + "/type", "transform type must be a string");
    const auto& tag = type.get_ref<const std::string&>();
    auto dir = [&](const char* key) { return directional(field(j, key, path), path + "/" + key); };
    if (tag == "additive_periodic") {
        only_keys(j, {"type", "mu", "gamma", "omega"}, path);
        return AdditivePeriodic{dir("mu"), dir("gamma"), dir("omega")};
    }
    if (tag == "log_sinusoidal") {
        only_keys(j, {"type", "mu", "omega1", "omega2"}, path);
        return LogSinusoidal{dir("mu"), dir("omega1"), dir("omega2")};
    }
    if (tag == "wavelet") {
        only_keys(j, {"type", "mu", "omega", "ell", "eta"}, path);
        Wavelet w{dir("mu"), dir("omega"), std::nullopt, std::nullopt};
        if (j.contains("ell")) w.ell = dir("ell");
        if (j.contains("eta")) w.eta = real(j["eta"], path + "/eta");
        return w;
    }
    if (tag == "tensor_interference") {
        only_keys(j, {"type", "mu0", "omega"}, path);
        return TensorInterference{dir("mu0"), dir("omega")};
    }
    if (tag == "radial_hybrid") {
        only_keys(j, {"type", "mu", "p", "q", "omega"}, path);
        return RadialHybrid{real(field(j, "mu", path), path + "/mu"), real(field(j, "p", path), path + "/p"),
                            real(field(j, "q", path), path + "/q"), real(field(j, "omega", path), path + "/omega")};
    }
    fail(path + "/type", "unknown transform type \"" + tag + "\" (valid: " + std::string(kValidTags) + ")");
}

json to_json(const ProblemInstance& inst) {
    json j;
    j["schema_version"] = inst.schema_version;
    j["objective_sense"] = std::string(to_string(inst.sense));
    j["dimension"] = inst.dimension;
    j["overlap_allowed"] = inst.overlap_allowed;
    json blocks = json::array();
    for (const auto& b : inst.blocks) blocks.push_back(block_to_json(b));
    j["blocks"] = std::move(blocks);
    if (inst.provenance) {
        const auto& p = *inst.provenance;
        json pj = {{"seed", p.seed}, {"generator_version", p.generator_version}, {"prng", p.prng},
                   {"strata_digest", p.strata_digest}};
        if (p.family_of) pj["family_of"] = *p.family_of;
        if (p.member) pj["member"] = *p.member;
        j["provenance"] = std::move(pj);
    }
    return j;
}

ProblemInstance instance_from_json(const json& doc) {
    if (!doc.is_object()) fail("", "instance document must be a JSON object");
    ProblemInstance inst;
    const auto& version = field(doc, "schema_version", "");
    if (!version.is_number_integer()) fail("/schema_version", "schema_version must be an integer");
    inst.schema_version = version.get<int>();
    if (inst.schema_version > kSchemaVersion) throw SchemaVersionError(inst.schema_version, kSchemaVersion);
    if (inst.schema_version < 1) fail("/schema_version", "schema_version must be at least 1");
    only_keys(doc, {"schema_version", "objective_sense", "dimension", "overlap_allowed", "blocks", "provenance"}, "");

    const auto& sense = field(doc, "objective_sense", "");
    if (sense == "minimize") {
        inst.sense = Sense::Minimize;
    } else if (sense == "maximize") {
        inst.sense = Sense::Maximize;
    } else {
        fail("/objective_sense", "expected \"minimize\" or \"maximize\"");
    }
    inst.dimension = static_cast<std::size_t>(unsigned_int(field(doc, "dimension", ""), "/dimension"));
    if (doc.contains("overlap_allowed")) {
        if (!doc["overlap_allowed"].is_boolean()) fail("/overlap_allowed", "expected a boolean");
        inst.overlap_allowed = doc["overlap_allowed"].get<bool>();
    }
    const auto& blocks = field(doc, "blocks", "");
    if (!blocks.is_array()) fail("/blocks", "expected an array");
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        inst.blocks.push_back(block_from_json(blocks[b], "/blocks/" + std::to_string(b)));
    }
    if (doc.contains("provenance")) {
        const auto& pj = doc["provenance"];
        only_keys(pj, {"seed", "generator_version", "prng", "strata_digest", "family_of", "member"}, "/provenance");
        Provenance p;
        p.seed = unsigned_int(field(pj, "seed", "/provenance"), "/provenance/seed");
        p.generator_version = pj.value("generator_version", "");
        p.prng = pj.value("prng", "");
        p.strata_digest = pj.value("strata_digest", "");
        if (pj.contains("family_of")) p.family_of = pj["family_of"].get<std::string>();
        if (pj.contains("member")) p.member = unsigned_int(pj["member"], "/provenance/member");
        inst.provenance = std::move(p);
    }
    return inst;
}

std::string serialize(const ProblemInstance& instance) {
    auto report = validate(instance);
    if (!report.ok()) throw InvalidInstance(std::move(report));
    return to_json(instance).dump(2) + "\n";
}

ProblemInstance deserialize(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    try {
        return instance_from_json(doc);
    } catch (const json::exception& e) {
        throw ParseError("", e.what());
    }
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return deserialize(ss.str());
}

void save_instance(const ProblemInstance& instance, const std::string& path) {
    const std::string text = serialize(instance);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace landgen
