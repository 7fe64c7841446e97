#pragma once

#include <stdexcept>
#include <string>

namespace tridom {

enum class Errc {
    // planar-core
    NonTriangularFace,
    InconsistentRotation,
    MultiEdgeInSimpleMode,
    Disconnected,
    DisconnectingDeletion,
    UnclassifiableWalk,
    MultiEdgeCreated,
    NotOnFace,
    // graph-io
    BadHeader,
    TruncatedStream,
    VertexCountTooLarge,
    ValidationFailed,
    ParseError,
    DigestMismatch,
    // generators
    UnknownName,
    NoPerfectMatching,
    // coloring
    BudgetExhausted,
    NoHeavyDiagonal,
    PsiInvariantViolation,
    // pipeline
    UnreducibleFace,
    ExtensionFailed,
    NotBipartite,
    CoverTooLarge,
    AssemblyInvariantViolation,
    CertificationFailed,
    // oracle
    TooLarge,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace tridom
