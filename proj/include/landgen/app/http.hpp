#pragma once

#include "landgen/app/service.hpp"

#include <httplib.h>

namespace landgen::app {

/// Registers the /api routes (and optional static files) on `server`.
void mount_routes(httplib::Server& server, Service& service, const std::optional<std::string>& static_dir = {});

}  // namespace landgen::app
