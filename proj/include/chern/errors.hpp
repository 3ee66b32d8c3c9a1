#pragma once

#include <stdexcept>

namespace chern {

/// Input polynomial is not invariant under variable transpositions.
struct non_symmetric_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input polynomial mixes total degrees where a homogeneous one is required.
struct non_homogeneous_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Leading-term elimination exceeded its iteration budget. Cannot happen for
/// valid symmetric input; kept as a hard guard.
struct no_termination_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Chern-number combination was paired with a manifold of a different
/// complex dimension.
struct weight_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested property is not recoverable from the supplied data
/// (e.g. spin-ness from bare Chern numbers).
struct not_decidable_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace chern
