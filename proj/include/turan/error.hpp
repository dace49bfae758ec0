#pragma once

#include <stdexcept>
#include <string>

namespace turan {

enum class Err {
    NonTransversalEdge,
    DuplicateEdge,
    VertexOutOfRange,
    WrongArity,
    InvalidTuple,
    BadPartIndex,
    UnknownEdge,
    ParseError,
    ArityMismatch,
    InvalidSet,
    UNotOutsideS,
    ExactCoverTooLarge,
    NotDivisible,
    EmptyInput,
    NotSubgraph,
    TooFewEdges,
    UnequalParts,
    UNotInT,
    VNotInLink,
    SamePart,
    EdgeNotPresent,
    NotRegular,
    NoMajorityIndex,
    DensityPreconditionFailed,
    MarginTooSmall,
    EmptyX,
    BadTargetPart,
    CeilingExceeded,
    TooSmall,
    BadConfig,
};

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace turan
