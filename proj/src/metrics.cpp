#include "hgcrp/metrics.hpp"

#include <optional>

namespace hgcrp {
namespace {

struct CoreScan {
    Utility opt_welfare = 0;
    std::optional<Utility> worst_stable;
    std::optional<Utility> best_stable;
};

// One enumeration pass collecting the optimum and the core stable extremes.
CoreScan scan_core(const Instance& inst, const EnumerationBudget& budget) {
    CoreScan scan;
    bool first = true;
    for_each_ir_partition(inst, budget, [&](const Partition& pi) {
        Utility w = welfare(inst, pi);
        if (first || scan.opt_welfare < w) scan.opt_welfare = w;
        first = false;
        if (!find_blocking_coalition(inst, pi)) {
            if (!scan.worst_stable || w < *scan.worst_stable) scan.worst_stable = w;
            if (!scan.best_stable || *scan.best_stable < w) scan.best_stable = w;
        }
        return true;
    });
    return scan;
}

}  // namespace

std::vector<Partition> enumerate_core_stable(const Instance& inst,
                                             const EnumerationBudget& budget) {
    std::vector<Partition> out;
    for_each_ir_partition(inst, budget, [&](const Partition& pi) {
        if (!find_blocking_coalition(inst, pi)) out.push_back(pi);
        return true;
    });
    return out;
}

Utility price_of_anarchy(const Instance& inst, const EnumerationBudget& budget) {
    CoreScan scan = scan_core(inst, budget);
    if (scan.worst_stable->is_zero()) {
        throw UnboundedError("worst core stable welfare is zero");
    }
    return scan.opt_welfare / *scan.worst_stable;
}

Utility price_of_stability(const Instance& inst, const EnumerationBudget& budget) {
    CoreScan scan = scan_core(inst, budget);
    if (scan.best_stable->is_zero()) {
        throw UnboundedError("best core stable welfare is zero");
    }
    return scan.opt_welfare / *scan.best_stable;
}

}  // namespace hgcrp
