#pragma once

#include <pcpk/colored_digraph.hh>
#include <pcpk/generators.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcpk
{
    struct Counterexample
    {
        std::uint64_t index = 0;         ///< attempt index within the run
        std::uint64_t seed = 0;          ///< generator seed of the instance
        std::string property;            ///< family id; re-checking runs this family's property
        std::string failure;
        std::string note;                ///< extra input of the property, if any
        std::string acd;
        std::optional<std::string> certificate;

        auto operator==(const Counterexample &) const -> bool = default;
    };

    struct CheckReport
    {
        std::string family;
        std::vector<std::pair<std::string, std::string>> params;
        std::uint64_t seed = 0;
        std::uint64_t examined = 0;
        std::uint64_t passing = 0;
        std::uint64_t budget_exceeded = 0;
        std::map<std::string, std::uint64_t> tallies;
        std::vector<Counterexample> counterexamples;
        double wall_seconds = 0;   ///< not part of either serialization
    };

    /// Outcome of one property check on one instance.
    struct InstanceOutcome
    {
        bool passing = false;
        bool budget_exceeded = false;
        std::map<std::string, std::uint64_t> tallies;
        std::optional<std::string> failure;
        std::optional<std::string> certificate;
    };

    /// Families: conjecture, thm4-exhaustive, thm5-fuzz, thm6-fuzz, thm7i-fuzz, thm7ii-fuzz,
    /// lemma1-fuzz, lemma2-fuzz, obs1-fuzz, reduction-iff.
    auto family_names() -> std::vector<std::string>;

    /// Runs the property of `family` on one digraph. BudgetExceeded is caught and tallied.
    auto check_property(const std::string & family, const ColoredDigraph & d, const std::string & note = "")
        -> InstanceOutcome;

    /// Re-parses the stored digraph and re-runs its property; true iff it still fails.
    auto recheck_counterexample(const Counterexample & c) -> bool;

    struct FuzzParams
    {
        std::size_t n = 5;
        std::size_t nx = 0;
        std::size_t ny = 0;
        Color m = 3;
        std::uint64_t samples = 0;
        std::uint64_t seed = 0;
        GeneratorKind kind = GeneratorKind::RandomDigraph;
        double arc_probability = 0.5;
        unsigned jobs = 1;
    };

    /// Generates `samples` digraphs, keeps those whose cycles are all properly colored and
    /// solves them; survivors without a PCP-kernel are counterexamples. `injected` digraphs are
    /// examined first. Throws BadParameter for n > 10.
    auto fuzz_conjecture(const FuzzParams & params, const std::vector<ColoredDigraph> & injected = {}) -> CheckReport;

    struct SweepParams
    {
        std::size_t n = 7;      ///< largest vertex count (cycle length for thm4-exhaustive)
        std::size_t nx = 4;     ///< largest |X| of bipartite families
        std::size_t ny = 4;     ///< largest |Y| of bipartite families
        Color m = 3;            ///< largest color count
        std::uint64_t samples = 1000;   ///< instances passing the precondition
        std::uint64_t max_attempts = 0; ///< 0 means 100 * samples + 1000
        std::uint64_t seed = 1;
        double arc_probability = 0.5;
        unsigned jobs = 1;
    };

    /// thm4-exhaustive enumerates all m^n colorings of C_n (n <= 8, m <= 3); every other family
    /// samples random instances until `samples` pass its precondition. Throws BadParameter.
    auto sweep_theorem(const std::string & family, const SweepParams & params) -> CheckReport;

    auto report_to_json(const CheckReport & r) -> std::string;

    /// `key value` lines; counterexample digraphs follow as ACD text prefixed with "| ".
    auto report_to_lines(const CheckReport & r) -> std::string;

    /// Inverse of report_to_json (wall time is not stored and comes back as 0).
    auto report_from_json(const std::string & text) -> CheckReport;
}
