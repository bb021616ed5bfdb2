#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcpk
{
    enum class Errc
    {
        LoopArc,
        DuplicateArc,
        NonPositiveColor,
        VertexOutOfRange,
        SyntaxError,
        UnknownVertexLabel,
        UnknownInstance,
        BadParameter,
        SameVertex,
        BudgetExceeded,
        TooLarge,
        NotAcyclic,
        NotACycle,
        NotUnicyclic,
        CycleNotProperlyColored,
        NotSemiComplete,
        NotBipartiteTournament,
        NoApplicableCondition,
        EmptyDigraph
    };

    auto errc_name(Errc code) -> std::string_view;

    class Error : public std::runtime_error
    {
        private:
            Errc _code;

        public:
            Error(Errc code, const std::string & message);

            auto code() const noexcept -> Errc { return _code; }
    };
}
