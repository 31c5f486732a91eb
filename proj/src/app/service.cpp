#include "landgen/app/grid.hpp"
#include "landgen/app/http.hpp"
#include "landgen/app/service.hpp"
#include "landgen/generator.hpp"
#include "landgen/parameters.hpp"

#include <cmath>
#include <iostream>

namespace landgen::app {

namespace {

json with_version(json body) {
    body["schema_version"] = kSchemaVersion;
    return body;
}

Response error(int status, const std::string& message, json extra = json::object()) {
    extra["error"] = message;
    return {status, with_version(std::move(extra))};
}

Response no_instance() { return error(409, "no instance loaded; PUT /api/instance or POST /api/random with apply"); }

json parse_body(std::string_view body) {
    try {
        return json::parse(body.begin(), body.end());
    } catch (const json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
}

json interval_to_json(const Interval& iv) {
    auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    return {{"lo", num(iv.lo)}, {"hi", num(iv.hi)}, {"lo_open", iv.lo_open}, {"hi_open", iv.hi_open}};
}

}  // namespace

json report_to_json(const ValidationReport& report) {
    auto issues = [](const std::vector<Issue>& list) {
        json a = json::array();
        for (const auto& i : list) a.push_back({{"path", i.path}, {"message", i.message}});
        return a;
    };
    json residuals = json::array();
    for (const auto& r : report.rotation_residuals) residuals.push_back({{"path", r.path}, {"residual", r.residual}});
    return {{"valid", report.ok()},
            {"errors", issues(report.errors)},
            {"warnings", issues(report.warnings)},
            {"rotation_residuals", residuals},
            {"max_rotation_residual", report.max_rotation_residual()}};
}

json optimum_to_json(const KnownOptimum& opt) {
    return {{"location", opt.location},
            {"value", opt.value},
            {"exactness", std::string(to_string(opt.exactness))},
            {"co_optimal", opt.co_optimal}};
}

json defaults_json() {
    json params = json::array();
    for (const auto& row : parameter_table()) {
        params.push_back({{"key", std::string(row.key)},
                          {"description", std::string(row.description)},
                          {"suggested", interval_to_json(row.suggested)},
                          {"default", row.default_value ? json(*row.default_value) : json(nullptr)}});
    }
    return {{"parameters", params}, {"strata", strata_to_json(GenerationStrata{})}};
}

Service::Service(ProblemInstance initial) : current_(std::make_shared<const Snapshot>(std::move(initial))) {}

std::shared_ptr<const Snapshot> Service::snapshot() const {
    std::lock_guard lock(mutex_);
    return current_;
}

Response Service::get_instance() const {
    auto snap = snapshot();
    if (!snap) return no_instance();
    return {200, with_version({{"instance", snap->document}})};
}

Response Service::put_instance(std::string_view body) {
    ProblemInstance inst;
    try {
        json doc = parse_body(body);
        if (doc.is_object() && doc.contains("instance")) doc = doc["instance"];
        inst = instance_from_json(doc);
    } catch (const ParseError& e) {
        return error(400, e.what(), {{"where", e.where()}});
    } catch (const json::exception& e) {
        return error(400, e.what());
    }
    auto report = validate(inst);
    json body_json = with_version({{"report", report_to_json(report)}});
    if (!report.ok()) return {422, std::move(body_json)};
    auto next = std::make_shared<const Snapshot>(std::move(inst));
    {
        std::lock_guard lock(mutex_);
        current_ = std::move(next);
    }
    return {200, std::move(body_json)};
}

Response Service::post_random(std::string_view body) {
    try {
        const json req = body.empty() ? json::object() : parse_body(body);
        if (!req.is_object() || !req.contains("seed")) return error(400, "request needs a seed");
        const auto& seed_json = req["seed"];
        if (!seed_json.is_number_unsigned() && !(seed_json.is_number_integer() && seed_json.get<long long>() >= 0)) {
            return error(400, "seed must be a non-negative integer");
        }
        const auto seed = seed_json.get<std::uint64_t>();
        const GenerationStrata strata = req.contains("strata") ? strata_from_json(req["strata"]) : GenerationStrata{};
        auto inst = random_instance(seed, strata);
        auto report = validate(inst);
        json out = with_version({{"instance", to_json(inst)}, {"report", report_to_json(report)}});
        if (req.value("apply", false)) {
            auto next = std::make_shared<const Snapshot>(std::move(inst));
            std::lock_guard lock(mutex_);
            current_ = std::move(next);
        }
        return {200, std::move(out)};
    } catch (const ParseError& e) {
        return error(400, e.what(), {{"where", e.where()}});
    } catch (const InvalidArgument& e) {
        return error(400, e.what());
    } catch (const json::exception& e) {
        return error(400, e.what());
    }
}

Response Service::post_evaluate(std::string_view body) const {
    auto snap = snapshot();
    if (!snap) return no_instance();
    std::vector<std::vector<double>> points;
    try {
        const json req = parse_body(body);
        if (!req.is_object() || !req.contains("points") || !req["points"].is_array()) {
            return error(400, "request needs \"points\": [[...], ...]");
        }
        points = req["points"].get<std::vector<std::vector<double>>>();
    } catch (const ParseError& e) {
        return error(400, e.what());
    } catch (const json::exception& e) {
        return error(400, e.what());
    }
    try {
        const auto results = batch_evaluate(snap->problem, points);
        json values = json::array();
        json attribution = json::array();
        for (const auto& r : results) {
            values.push_back(r.value);
            json blocks = json::array();
            for (const auto& b : r.blocks) {
                blocks.push_back({{"block", b.block}, {"component", b.active}, {"value", b.value}});
            }
            attribution.push_back(std::move(blocks));
        }
        return {200, with_version({{"values", values}, {"attribution", attribution}})};
    } catch (const BatchDimensionError& e) {
        return error(400, e.what(), {{"index", e.index()}});
    } catch (const EvaluationOverflow& e) {
        return error(422, e.what(), {{"block", e.component().block}, {"component", e.component().component}});
    }
}

Response Service::post_grid(std::string_view body) const {
    auto snap = snapshot();
    if (!snap) return no_instance();
    try {
        const auto request = grid_request_from_json(parse_body(body));
        return {200, grid_to_json(compute_grid(snap->problem, request))};
    } catch (const ParseError& e) {
        return error(400, e.what());
    } catch (const InvalidArgument& e) {
        return error(400, e.what());
    } catch (const EvaluationOverflow& e) {
        return error(422, e.what());
    }
}

Response Service::get_optimum() const {
    auto snap = snapshot();
    if (!snap) return no_instance();
    return {200, with_version(optimum_to_json(snap->optimum))};
}

Response Service::get_defaults() const { return {200, with_version(defaults_json())}; }

void mount_routes(httplib::Server& server, Service& service, const std::optional<std::string>& static_dir) {
    auto reply = [](httplib::Response& res, const Response& r) {
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    server.Get("/api/instance", [&, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, service.get_instance());
    });
    server.Put("/api/instance", [&, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.put_instance(req.body));
    });
    server.Post("/api/random", [&, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.post_random(req.body));
    });
    server.Post("/api/evaluate", [&, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.post_evaluate(req.body));
    });
    server.Post("/api/grid", [&, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, service.post_grid(req.body));
    });
    server.Get("/api/optimum", [&, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, service.get_optimum());
    });
    server.Get("/api/defaults", [&, reply](const httplib::Request&, httplib::Response& res) {
        reply(res, service.get_defaults());
    });
    if (static_dir) server.set_mount_point("/", *static_dir);
}

bool serve(Service& service, const ServeOptions& options) {
    httplib::Server server;
    mount_routes(server, service, options.static_dir);
    std::cerr << "listening on http://" << options.host << ":" << options.port << "\n";
    return server.listen(options.host, options.port);
}

}  // namespace landgen::app
