#include <pcpk/error.hh>

using std::string;
using std::string_view;

namespace pcpk
{
    auto errc_name(Errc code) -> string_view
    {
        switch (code) {
            case Errc::LoopArc: return "LoopArc";
            case Errc::DuplicateArc: return "DuplicateArc";
            case Errc::NonPositiveColor: return "NonPositiveColor";
            case Errc::VertexOutOfRange: return "VertexOutOfRange";
            case Errc::SyntaxError: return "SyntaxError";
            case Errc::UnknownVertexLabel: return "UnknownVertexLabel";
            case Errc::UnknownInstance: return "UnknownInstance";
            case Errc::BadParameter: return "BadParameter";
            case Errc::SameVertex: return "SameVertex";
            case Errc::BudgetExceeded: return "BudgetExceeded";
            case Errc::TooLarge: return "TooLarge";
            case Errc::NotAcyclic: return "NotAcyclic";
            case Errc::NotACycle: return "NotACycle";
            case Errc::NotUnicyclic: return "NotUnicyclic";
            case Errc::CycleNotProperlyColored: return "CycleNotProperlyColored";
            case Errc::NotSemiComplete: return "NotSemiComplete";
            case Errc::NotBipartiteTournament: return "NotBipartiteTournament";
            case Errc::NoApplicableCondition: return "NoApplicableCondition";
            case Errc::EmptyDigraph: return "EmptyDigraph";
        }
        return "Unknown";
    }

    Error::Error(Errc code, const string & message) :
        std::runtime_error(string(errc_name(code)) + ": " + message),
        _code(code)
    {
    }
}
