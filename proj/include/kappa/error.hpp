#pragma once

#include <stdexcept>
#include <string>

namespace kappa {

enum class errc {
    zero_denominator,
    division_by_zero,
    unknown_parameter,
    non_terminating,
    unknown_algebra,
    unknown_generator,
    axiom_failure,
    divergent_structure_constant,
    non_invertible_map,
    parse,
    validation,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

const char* errc_name(errc c);

} // namespace kappa
