#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/pc_paths.hh>
#include <pcpk/plain_digraph.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pcpk
{
    /// A verified PCP-kernel: the members, one witness path from every outsider into the set,
    /// and every ordered member pair for which a path search found nothing.
    struct PcpKernelCertificate
    {
        std::vector<Vertex> members;
        std::vector<PcPath> absorption;
        std::vector<VertexPair> independence;
        PathMode mode = PathMode::ProperlyColored;
        std::string method;
        std::vector<std::string> trail;
        bool fallback_used = false;
    };

    struct SolveOptions
    {
        std::uint64_t budget = default_search_budget;   ///< per path search
        unsigned jobs = 1;
    };

    /// Throws VertexOutOfRange and BudgetExceeded.
    auto verify_pcp_kernel(const ColoredDigraph & d, std::span<const Vertex> s,
            PathMode mode = PathMode::ProperlyColored, const SolveOptions & options = {})
        -> std::optional<PcpKernelCertificate>;

    /// Kernel of the closure, lifted back with the closure's witness paths.
    auto solve_pcp_exact(const ColoredDigraph & d, PathMode mode = PathMode::ProperlyColored,
            const SolveOptions & options = {}) -> std::optional<PcpKernelCertificate>;

    /// Line format:
    ///
    ///     # mode pc
    ///     # method exact
    ///     # trail <note>
    ///     S: {a,b}
    ///     abs <v> : <v> ... <s>
    ///     ind <s> <t> : none
    auto format_certificate(const ColoredDigraph & d, const PcpKernelCertificate & c) -> std::string;

    struct ParsedCertificate
    {
        std::vector<Vertex> members;
        std::vector<std::vector<Vertex>> absorption;
        std::vector<VertexPair> independence;
        std::optional<PathMode> mode;
    };

    /// Throws SyntaxError and UnknownVertexLabel.
    auto parse_certificate(const ColoredDigraph & d, std::string_view text) -> ParsedCertificate;

    struct CertificateCheck
    {
        bool valid = false;
        std::string reason;
    };

    /// Re-checks every listed path against `d`, requires a path for every outsider, and
    /// re-runs the independence searches for every ordered member pair.
    auto check_certificate(const ColoredDigraph & d, const ParsedCertificate & c, PathMode mode,
            const SolveOptions & options = {}) -> CertificateCheck;
}
