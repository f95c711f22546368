#include "kitopt/error.hpp"

namespace kitopt {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MissingFile: return "MissingFile";
        case ErrorCode::MalformedRow: return "MalformedRow";
        case ErrorCode::DuplicateItemId: return "DuplicateItemId";
        case ErrorCode::UnknownCategory: return "UnknownCategory";
        case ErrorCode::EmptyCategory: return "EmptyCategory";
        case ErrorCode::HeaderMismatch: return "HeaderMismatch";
        case ErrorCode::WidthMismatch: return "WidthMismatch";
        case ErrorCode::NonBinaryEntry: return "NonBinaryEntry";
        case ErrorCode::DuplicateUserId: return "DuplicateUserId";
        case ErrorCode::EmptyMatrix: return "EmptyMatrix";
        case ErrorCode::InvalidConstraint: return "InvalidConstraint";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonFiniteInput: return "NonFiniteInput";
        case ErrorCode::NumericFailure: return "NumericFailure";
        case ErrorCode::RankOutOfRange: return "RankOutOfRange";
        case ErrorCode::TooFewClusters: return "TooFewClusters";
        case ErrorCode::EmptyCluster: return "EmptyCluster";
        case ErrorCode::EmptyKitList: return "EmptyKitList";
        case ErrorCode::IoFailure: return "IoFailure";
    }
    return "Unknown";
}

}  // namespace kitopt
