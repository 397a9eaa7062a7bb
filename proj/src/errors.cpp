#include "regbisim/errors.hpp"

namespace regbisim {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::endpoint_mismatch: return "endpoint_mismatch";
        case ErrorCode::backend_mismatch: return "backend_mismatch";
        case ErrorCode::functor_mismatch: return "functor_mismatch";
        case ErrorCode::non_commuting: return "non_commuting";
        case ErrorCode::capability: return "capability";
        case ErrorCode::cap_exceeded: return "cap_exceeded";
        case ErrorCode::not_equivariant: return "not_equivariant";
        case ErrorCode::invalid_group: return "invalid_group";
        case ErrorCode::invalid_action: return "invalid_action";
        case ErrorCode::non_prime: return "non_prime";
        case ErrorCode::non_reduced: return "non_reduced";
        case ErrorCode::schema: return "schema";
        case ErrorCode::dangling_identifier: return "dangling_identifier";
        case ErrorCode::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

}  // namespace regbisim
