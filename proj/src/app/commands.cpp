#include "landgen/app/cli.hpp"
#include "landgen/app/grid.hpp"
#include "landgen/app/service.hpp"
#include "landgen/generator.hpp"
#include "landgen/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace landgen::app {

namespace {

/// Raised for problems that should end the command with a message and exit 2.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t\r"));
        item.erase(item.find_last_not_of(" \t\r") + 1);
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Failure(what + ": cannot parse \"" + item + "\" as a number");
        out.push_back(v);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// CSV (one point per row, '#' comments, optional non-numeric header) or a JSON array of arrays.
std::vector<std::vector<double>> read_points(const std::string& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        try {
            return json::parse(text).get<std::vector<std::vector<double>>>();
        } catch (const json::exception& e) {
            throw Failure(path + ": " + e.what());
        }
    }
    std::vector<std::vector<double>> points;
    std::stringstream ss(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        const char c = line[start];
        const bool numeric = std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
        if (!numeric && points.empty()) continue;
        points.push_back(parse_list(line, path + ":" + std::to_string(lineno)));
    }
    return points;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure("cannot write " + path);
    f << text;
}

std::string join_ids(const EvalResult& r, bool component) {
    std::string s;
    for (std::size_t b = 0; b < r.blocks.size(); ++b) {
        if (b) s += ';';
        s += std::to_string(component ? r.blocks[b].active : r.blocks[b].block);
    }
    return s;
}

void print_report(const ValidationReport& report, std::ostream& out) {
    for (const auto& e : report.errors) out << "error   " << (e.path.empty() ? "/" : e.path) << ": " << e.message << "\n";
    for (const auto& w : report.warnings) out << "warning " << (w.path.empty() ? "/" : w.path) << ": " << w.message << "\n";
    out << "max rotation residual: " << format_double(report.max_rotation_residual()) << "\n";
    out << report.errors.size() << " error(s), " << report.warnings.size() << " warning(s)\n";
}

int report_exit(const ValidationReport& report) {
    if (!report.ok()) return kExitError;
    return report.clean() ? kExitOk : kExitWarnings;
}

void write_raw(const GridResult& grid, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Failure("cannot write " + path);
    for (double v : grid.values) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        unsigned char bytes[8];
        for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
        f.write(reinterpret_cast<const char*>(bytes), 8);
    }
    json meta = grid_to_json(grid);
    meta.erase("values");
    meta["raw"] = {{"file", std::filesystem::path(path).filename().string()},
                   {"dtype", "float64"},
                   {"byte_order", "little"},
                   {"shape", {grid.y.resolution, grid.x.resolution}}};
    std::ofstream side(path + ".json", std::ios::binary);
    if (!side) throw Failure("cannot write " + path + ".json");
    side << meta.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Benchmark landscape generator: build, validate, evaluate and serve problem instances."};
    app.name(args.empty() ? "landgen" : std::filesystem::path(args.front()).filename().string());
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kGeneratorVersion));

    // generate
    std::uint64_t seed = 0;
    std::string strata_path, out_path;
    auto* gen = app.add_subcommand("generate", "Draw a random instance");
    gen->add_option("--seed", seed, "64-bit seed")->required();
    gen->add_option("--strata", strata_path, "Strata JSON file")->check(CLI::ExistingFile);
    gen->add_option("-o,--output", out_path, "Output file (default stdout)");

    // family
    std::string base_path, out_dir;
    std::size_t count = 1;
    bool keep_centers = false, keep_offsets = false, keep_angles = false;
    auto* fam = app.add_subcommand("family", "Derive globally equivalent variants of an instance");
    fam->add_option("instance", base_path, "Base instance")->required()->check(CLI::ExistingFile);
    fam->add_option("--seed", seed, "64-bit seed")->required();
    fam->add_option("--count", count, "Number of members")->required()->check(CLI::PositiveNumber);
    fam->add_option("-o,--out-dir", out_dir, "Directory for member_NNN.json files")->required();
    fam->add_flag("--keep-centers", keep_centers);
    fam->add_flag("--keep-offsets", keep_offsets);
    fam->add_flag("--keep-angles", keep_angles);

    // validate
    std::string instance_path, format = "text";
    auto* val = app.add_subcommand("validate", "Check an instance file");
    val->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
    val->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // eval
    std::string points_path, point_text;
    bool attribution = false;
    unsigned threads = 0;
    auto* ev = app.add_subcommand("eval", "Evaluate points");
    ev->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
    auto* points_opt = ev->add_option("--points", points_path, "CSV or JSON file of points")->check(CLI::ExistingFile);
    auto* point_opt = ev->add_option("--point", point_text, "Single point x1,x2,...");
    points_opt->excludes(point_opt);
    ev->add_flag("--attribution", attribution, "CSV with value,block_id,component_id");
    ev->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    ev->add_option("--threads", threads, "Worker threads (0 = auto)");

    // optimum
    auto* opt = app.add_subcommand("optimum", "Print the known optimum");
    opt->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
    opt->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    // grid
    std::string axes_text, x_range, y_range, fixed_text, raw_path;
    std::size_t resolution = 101;
    auto* grd = app.add_subcommand("grid", "Evaluate a 2-D slice");
    grd->add_option("instance", instance_path)->required()->check(CLI::ExistingFile);
    grd->add_option("--axes", axes_text, "Two 1-based variable indices, e.g. 1,2")->required();
    grd->add_option("--x-range", x_range, "lo,hi");
    grd->add_option("--y-range", y_range, "lo,hi");
    grd->add_option("--resolution", resolution, "Cells per axis (2..2048)");
    grd->add_option("--fixed", fixed_text, "Values for all d variables (default: optimum)");
    grd->add_option("--raw", raw_path, "Write little-endian float64 raster plus .json sidecar");
    grd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    grd->add_option("-o,--output", out_path);

    // defaults
    bool strata_only = false;
    auto* defs = app.add_subcommand("defaults", "Print the parameter table and default strata as JSON");
    defs->add_flag("--strata", strata_only, "Only the default strata document");

    // serve
    ServeOptions serve_opts;
    std::string static_dir;
    auto* srv = app.add_subcommand("serve", "Run the local HTTP/JSON service");
    srv->add_option("--port", serve_opts.port)->check(CLI::Range(0, 65535));
    srv->add_option("--host", serve_opts.host);
    srv->add_option("--instance", instance_path)->check(CLI::ExistingFile);
    srv->add_option("--static", static_dir, "Directory of static assets")->check(CLI::ExistingDirectory);

    try {
        std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(rev.begin(), rev.end());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* shown = &app;
        for (const auto* sub : app.get_subcommands()) shown = sub;
        out << shown->help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kGeneratorVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << app.get_name() << ": " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kExitError;
    }

    try {
        if (gen->parsed()) {
            GenerationStrata strata;
            if (!strata_path.empty()) strata = load_strata(strata_path);
            write_output(serialize(random_instance(seed, strata)), out_path, out);
            return kExitOk;
        }
        if (fam->parsed()) {
            const auto base = load_instance(base_path);
            FamilyOptions fo;
            fo.centers = !keep_centers;
            fo.offsets = !keep_offsets;
            fo.angles = !keep_angles;
            const auto members = instance_family(seed, base, count, fo);
            std::filesystem::create_directories(out_dir);
            for (std::size_t m = 0; m < members.size(); ++m) {
                char name[32];
                std::snprintf(name, sizeof name, "member_%03zu.json", m);
                save_instance(members[m], (std::filesystem::path(out_dir) / name).string());
            }
            return kExitOk;
        }
        if (defs->parsed()) {
            json j = defaults_json();
            if (strata_only) j = j["strata"];
            else j["schema_version"] = kSchemaVersion;
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (val->parsed()) {
            const auto report = validate(deserialize(read_file(instance_path)));
            if (format == "json") {
                json j = report_to_json(report);
                j["schema_version"] = kSchemaVersion;
                out << j.dump(2) << "\n";
            } else {
                print_report(report, out);
            }
            return report_exit(report);
        }

        if (srv->parsed()) {
            auto service = instance_path.empty() ? std::make_unique<Service>()
                                                 : std::make_unique<Service>(deserialize(read_file(instance_path)));
            if (!static_dir.empty()) serve_opts.static_dir = static_dir;
            if (!serve(*service, serve_opts)) throw Failure("cannot listen on " + serve_opts.host + ":" + std::to_string(serve_opts.port));
            return kExitOk;
        }

        const Problem problem(deserialize(read_file(instance_path)));

        if (ev->parsed()) {
            std::vector<std::vector<double>> points;
            if (!points_path.empty()) points = read_points(points_path);
            else if (!point_text.empty()) points.push_back(parse_list(point_text, "--point"));
            else throw Failure("eval needs --points or --point");
            const auto results = batch_evaluate(problem, points, BatchOptions{threads});
            if (format == "json") {
                json values = json::array(), attr = json::array();
                for (const auto& r : results) {
                    values.push_back(r.value);
                    json blocks = json::array();
                    for (const auto& b : r.blocks) blocks.push_back({{"block", b.block}, {"component", b.active}, {"value", b.value}});
                    attr.push_back(std::move(blocks));
                }
                json j = {{"schema_version", kSchemaVersion}, {"values", values}};
                if (attribution) j["attribution"] = attr;
                out << j.dump(2) << "\n";
            } else if (attribution) {
                out << "value,block_id,component_id\n";
                for (const auto& r : results) out << format_double(r.value) << "," << join_ids(r, false) << "," << join_ids(r, true) << "\n";
            } else {
                for (const auto& r : results) out << format_double(r.value) << "\n";
            }
            return kExitOk;
        }
        if (opt->parsed()) {
            const auto o = known_optimum(problem.instance());
            if (format == "json") {
                json j = optimum_to_json(o);
                j["schema_version"] = kSchemaVersion;
                out << j.dump(2) << "\n";
            } else {
                out << "value " << format_double(o.value) << "\n";
                out << "exactness " << to_string(o.exactness) << "\n";
                out << "location";
                for (double v : o.location) out << " " << format_double(v);
                out << "\n";
            }
            return kExitOk;
        }
        if (grd->parsed()) {
            const auto axes = parse_list(axes_text, "--axes");
            if (axes.size() != 2) throw Failure("--axes needs exactly two indices");
            GridRequest request;
            GridAxis* targets[2] = {&request.x, &request.y};
            const std::string* ranges[2] = {&x_range, &y_range};
            for (int k = 0; k < 2; ++k) {
                if (axes[k] < 1 || axes[k] != std::floor(axes[k])) throw Failure("--axes takes 1-based integer indices");
                targets[k]->index = static_cast<std::size_t>(axes[k]) - 1;
                targets[k]->resolution = resolution;
                if (!ranges[k]->empty()) {
                    const auto r = parse_list(*ranges[k], k ? "--y-range" : "--x-range");
                    if (r.size() != 2) throw Failure("ranges take lo,hi");
                    targets[k]->min = r[0];
                    targets[k]->max = r[1];
                }
            }
            if (!fixed_text.empty()) request.fixed = parse_list(fixed_text, "--fixed");
            const auto grid = compute_grid(problem, request);
            if (!raw_path.empty()) {
                write_raw(grid, raw_path);
                return kExitOk;
            }
            std::ostringstream text;
            if (format == "json") {
                text << grid_to_json(grid).dump(2) << "\n";
            } else {
                text << "x" << grid.x.index + 1 << ",x" << grid.y.index + 1 << ",value\n";
                for (std::size_t row = 0; row < grid.y.resolution; ++row) {
                    for (std::size_t col = 0; col < grid.x.resolution; ++col) {
                        text << format_double(grid.x_values[col]) << "," << format_double(grid.y_values[row]) << ","
                             << format_double(grid.values[row * grid.x.resolution + col]) << "\n";
                    }
                }
            }
            write_output(text.str(), out_path, out);
            return kExitOk;
        }
    } catch (const InvalidInstance& e) {
        err << "invalid instance:\n";
        print_report(e.report(), err);
        return kExitError;
    } catch (const BatchDimensionError& e) {
        err << "point " << e.index() + 1 << ": " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << app.get_name() << ": " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace landgen::app
