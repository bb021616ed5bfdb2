#pragma once

#include <pcpk/pcp_kernel.hh>

#include <optional>
#include <string>
#include <vector>

namespace pcpk
{
    enum class ForcedClass
    {
        None,
        Exact,
        Acyclic,
        ProperlyConnected,
        ProperColoring,
        Cycle,
        Unicyclic,
        SemiComplete,
        Bipartite
    };

    auto parse_forced_class(const std::string & text) -> ForcedClass;
    auto forced_class_names() -> std::vector<std::string>;

    struct DispatchOptions
    {
        SolveOptions solve;
        ForcedClass forced = ForcedClass::None;
    };

    /// Tries, in order: acyclic, properly connected, proper arc coloring, cycle, unicyclic with a
    /// PC cycle, semi-complete without a monochromatic triangle, bipartite tournament under a
    /// known condition, and finally the exact solver. A fast path whose set fails verification,
    /// or that reports no kernel, hands over to the exact solver. Rainbow mode only has the
    /// acyclic fast path. A forced class runs that constructor alone and lets its precondition
    /// errors through.
    auto solve_pcp(const ColoredDigraph & d, PathMode mode = PathMode::ProperlyColored,
            const DispatchOptions & options = {}) -> std::optional<PcpKernelCertificate>;
}
