#include "landgen/landscape.hpp"

#include "landgen/instance.hpp"

#include <string>

namespace landgen {

ProblemInstance single_block_instance(std::vector<ComponentSpec> components, Sense sense, Bounds bounds) {
    ProblemInstance inst;
    const std::size_t d = components.empty() ? 0 : components.front().dim();
    inst.dimension = d;
    inst.sense = sense;
    BlockSpec block;
    for (std::size_t i = 0; i < d; ++i) block.indices.push_back(i);
    block.bounds.assign(d, bounds);
    block.components = std::move(components);
    inst.blocks.push_back(std::move(block));
    return inst;
}

LandscapeValue eval_landscape(std::span<const double> x_local, const PreparedBlock& block, Sense sense) {
    if (block.components.empty()) throw InvalidArgument("block has no components");
    LandscapeValue best{block.components.front().evaluate(x_local, sense), 0};
    for (std::size_t k = 1; k < block.components.size(); ++k) {
        const double v = block.components[k].evaluate(x_local, sense);
        const bool better = sense == Sense::Minimize ? v < best.value : v > best.value;
        if (better) best = {v, k};
    }
    return best;
}

Problem::Problem(ProblemInstance instance) : instance_(std::move(instance)) {
    auto report = validate(instance_);
    if (!report.ok()) throw InvalidInstance(std::move(report));
    blocks_.reserve(instance_.blocks.size());
    for (std::size_t j = 0; j < instance_.blocks.size(); ++j) {
        const auto& spec = instance_.blocks[j];
        PreparedBlock block;
        block.indices = spec.indices;
        block.weight = spec.weight;
        block.components.reserve(spec.components.size());
        for (std::size_t k = 0; k < spec.components.size(); ++k) {
            block.components.push_back(neutralize(spec.components[k], {j, k}));
        }
        blocks_.push_back(std::move(block));
    }
}

EvalResult Problem::evaluate(std::span<const double> x) const {
    if (x.size() != instance_.dimension) {
        throw InvalidArgument("point has dimension " + std::to_string(x.size()) + ", instance expects " +
                              std::to_string(instance_.dimension));
    }
    EvalResult result;
    result.blocks.reserve(blocks_.size());
    std::vector<double> local;
    double total = 0.0;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        const auto& block = blocks_[j];
        local.resize(block.dim());
        for (std::size_t i = 0; i < block.dim(); ++i) local[i] = x[block.indices[i]];
        const auto lv = eval_landscape(local, block, instance_.sense);
        total += block.weight * lv.value;
        result.blocks.push_back({j, lv.value, lv.active});
    }
    result.value = total;
    return result;
}

KnownOptimum known_optimum(const ProblemInstance& instance) {
    KnownOptimum opt;
    opt.location.assign(instance.dimension, 0.0);
    std::vector<bool> placed(instance.dimension, false);
    const bool minimize = instance.sense == Sense::Minimize;
    double total = 0.0;
    for (const auto& block : instance.blocks) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < block.components.size(); ++k) {
            const double b = block.components[k].offset;
            if (minimize ? b < block.components[best].offset : b > block.components[best].offset) best = k;
        }
        std::vector<std::size_t> ties;
        for (std::size_t k = 0; k < block.components.size(); ++k) {
            if (block.components[k].offset == block.components[best].offset) ties.push_back(k);
        }
        opt.co_optimal.push_back(std::move(ties));
        if (block.components.empty()) continue;
        const auto& c = block.components[best];
        total += block.weight * c.offset;
        for (std::size_t i = 0; i < block.dim() && i < c.center.size(); ++i) {
            const std::size_t g = block.indices[i];
            if (g >= instance.dimension) continue;
            if (!placed[g]) {
                opt.location[g] = c.center[i];
                placed[g] = true;
            } else if (opt.location[g] != c.center[i]) {
                opt.exactness = Exactness::LowerBound;
            }
        }
    }
    opt.value = total;
    return opt;
}

std::string_view to_string(Sense s) { return s == Sense::Minimize ? "minimize" : "maximize"; }

std::string_view to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "lower_bound"; }

}  // namespace landgen
