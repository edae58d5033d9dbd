#pragma once

#include <stdexcept>
#include <string>

namespace loopkit {

// Machine-checkable failure kinds. CLI maps any loopkit::error to exit code 2.
enum class errc {
    empty_input,
    bad_header,
    not_square,
    entry_out_of_range,
    unsupported_order,
    no_identity,
    empty_seed,
    bad_subset,
    not_a_loop,
    not_a_subsystem,
    not_invertible_loop,
    bad_map_range,
    phi_not_quasigroup,
    shape_mismatch,
    not_normal,
    order_mismatch,
    inconsistent_decomposition,
    invalid_search_spec,
    unknown_id,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::bad_header: return "BadHeader";
        case errc::not_square: return "NotSquare";
        case errc::entry_out_of_range: return "EntryOutOfRange";
        case errc::unsupported_order: return "UnsupportedOrder";
        case errc::no_identity: return "NoIdentity";
        case errc::empty_seed: return "EmptySeed";
        case errc::bad_subset: return "BadSubset";
        case errc::not_a_loop: return "NotALoop";
        case errc::not_a_subsystem: return "NotASubsystem";
        case errc::not_invertible_loop: return "NotInvertibleLoop";
        case errc::bad_map_range: return "BadMapRange";
        case errc::phi_not_quasigroup: return "PhiNotQuasigroup";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_normal: return "NotNormal";
        case errc::order_mismatch: return "OrderMismatch";
        case errc::inconsistent_decomposition: return "InconsistentDecomposition";
        case errc::invalid_search_spec: return "InvalidSearchSpec";
        case errc::unknown_id: return "UnknownId";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace loopkit
