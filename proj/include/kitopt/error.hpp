#pragma once

#include <stdexcept>
#include <string>

namespace kitopt {

enum class ErrorCode {
    MissingFile,
    MalformedRow,
    DuplicateItemId,
    UnknownCategory,
    EmptyCategory,
    HeaderMismatch,
    WidthMismatch,
    NonBinaryEntry,
    DuplicateUserId,
    EmptyMatrix,
    InvalidConstraint,
    InvalidSpec,
    InvalidArgument,
    NonFiniteInput,
    NumericFailure,
    RankOutOfRange,
    TooFewClusters,
    EmptyCluster,
    EmptyKitList,
    IoFailure,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kitopt
