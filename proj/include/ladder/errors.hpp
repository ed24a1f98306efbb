#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

enum class errc {
    not_a_ladder,
    non_standard_shape,
    convention_violation,
    too_many_components,
    no_t_minor,
    missing_corner,
    not_2_connected,
    not_thin,
    not_two_sided,
    not_supported,
    cell_outside_ladder,
    dimension_mismatch,
    out_of_scope,
    index_out_of_range,
    internal,
};

inline const char* errc_name(errc c)
{
    switch (c) {
        case errc::not_a_ladder: return "NotALadder";
        case errc::non_standard_shape: return "NonStandardShape";
        case errc::convention_violation: return "ConventionViolation";
        case errc::too_many_components: return "TooManyComponents";
        case errc::no_t_minor: return "NoTMinor";
        case errc::missing_corner: return "MissingCorner";
        case errc::not_2_connected: return "Not2Connected";
        case errc::not_thin: return "NotThin";
        case errc::not_two_sided: return "NotTwoSided";
        case errc::not_supported: return "NotSupported";
        case errc::cell_outside_ladder: return "CellOutsideLadder";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::out_of_scope: return "OutOfScope";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

/// Domain error carrying a stable machine-readable code.
class ladder_error : public std::runtime_error {
public:
    ladder_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what)
{
    throw ladder_error(code, what);
}

inline void require(bool ok, errc code, const std::string& what)
{
    if (!ok) fail(code, what);
}

} // namespace ladder
