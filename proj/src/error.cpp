#include "cstar/error.hpp"

namespace cstar {

const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::zero_tail: return "ZeroTail";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::site_not_found: return "SiteNotFound";
    case Errc::not_minus_one: return "NotMinusOne";
    case Errc::not_rational: return "NotRational";
    case Errc::branching: return "Branching";
    case Errc::not_simple: return "NotSimple";
    case Errc::not_zero: return "NotZero";
    case Errc::not_linear: return "NotLinear";
    case Errc::not_negative_semidefinite_enough: return "NotNegativeSemidefiniteEnough";
    case Errc::no_standard_form: return "NoStandardForm";
    case Errc::chain_entry_below_two: return "ChainEntryBelowTwo";
    case Errc::unsupported_base: return "UnsupportedBase";
    case Errc::constraint_violated: return "ConstraintViolated";
    case Errc::not_ample: return "NotAmple";
    case Errc::not_standard: return "NotStandard";
    case Errc::not_gizatullin: return "NotGizatullin";
    case Errc::negative_rank: return "NegativeRank";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
    }
    return "Unknown";
}

Error::Error(Errc c, const std::string& what)
    : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c)
{
}

void fail(Errc c, const std::string& what)
{
    throw Error(c, what);
}

}  // namespace cstar
