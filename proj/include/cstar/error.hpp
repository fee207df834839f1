#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

enum class Errc {
    zero_tail,
    not_coprime,
    out_of_range,
    site_not_found,
    not_minus_one,
    not_rational,
    branching,
    not_simple,
    not_zero,
    not_linear,
    not_negative_semidefinite_enough,
    no_standard_form,
    chain_entry_below_two,
    unsupported_base,
    constraint_violated,
    not_ample,
    not_standard,
    not_gizatullin,
    negative_rank,
    parse_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc c, const std::string& what);

}  // namespace cstar
