#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pcpk::cli
{
    namespace exit_code
    {
        inline constexpr int holds = 0;
        inline constexpr int fails = 1;
        inline constexpr int not_applicable = 2;
        inline constexpr int discovery = 10;
        inline constexpr int usage = 64;
        inline constexpr int parse = 65;
        inline constexpr int no_input = 66;
        inline constexpr int budget = 70;
    }

    struct CommandResult
    {
        int exit_code = exit_code::holds;
        std::string summary;
        std::optional<std::string> payload;
    };

    /// Runs one command line (without the program name). `in` backs the "-" input path.
    /// The payload, when there is one, goes to `out` and the summary to `err`; otherwise
    /// the summary goes to `out`.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
        -> CommandResult;
}
