#pragma once

#include "landgen/instance.hpp"
#include "landgen/serialize.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace landgen::app {

/// Immutable view of the served instance.
struct Snapshot {
    explicit Snapshot(ProblemInstance instance)
        : problem(std::move(instance)), optimum(known_optimum(problem.instance())),
          document(to_json(problem.instance())) {}

    Problem problem;
    KnownOptimum optimum;
    json document;
};

struct Response {
    int status = 200;
    json body;
};

/// Request handlers behind the local HTTP API, independent of the transport.
/// Readers grab the current snapshot under a short lock and evaluate without
/// holding it; PUT swaps in a fully built snapshot.
class Service {
public:
    Service() = default;
    explicit Service(ProblemInstance initial);

    std::shared_ptr<const Snapshot> snapshot() const;

    Response get_instance() const;
    Response put_instance(std::string_view body);
    Response post_random(std::string_view body);
    Response post_evaluate(std::string_view body) const;
    Response post_grid(std::string_view body) const;
    Response get_optimum() const;
    Response get_defaults() const;

private:
    mutable std::mutex mutex_;
    std::shared_ptr<const Snapshot> current_;
};

json report_to_json(const ValidationReport& report);
json optimum_to_json(const KnownOptimum& optimum);
json defaults_json();

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::optional<std::string> static_dir;
};

/// Blocks until the server stops. Returns false if the socket could not be bound.
bool serve(Service& service, const ServeOptions& options);

}  // namespace landgen::app
