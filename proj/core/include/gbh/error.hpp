#pragma once

#include <stdexcept>
#include <string>

namespace gbh {

// Error taxonomy shared by the whole library. The CLI maps classes of
// codes onto exit statuses, so keep the grouping stable.
enum class Errc {
  // graph construction / homomorphisms
  LoopEdge,
  ParallelEdge,
  UnknownEndpoint,
  DuplicateId,
  UnknownVertex,
  UnknownEdge,
  InvalidK,
  NotAdjacencyPreserving,
  // complexes
  IsolatedVertexInReducedMode,
  SliceMismatch,
  // exact linear algebra
  NotAComplex,
  DimensionMismatch,
  BadField,
  // graded modules
  TruncationTooSmall,
  IndexOutOfRange,
  // families and scans
  NBelowTail,
  NotInjective,
  NotEdgeLinear,
  WindowTooSmall,
  // discretized oracle
  InsufficientSubdivision,
  BudgetExceeded,
  // verification
  ExactnessFailure,
  RegressionFailure,
  // io
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::ParallelEdge: return "ParallelEdge";
    case Errc::UnknownEndpoint: return "UnknownEndpoint";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::InvalidK: return "InvalidK";
    case Errc::NotAdjacencyPreserving: return "NotAdjacencyPreserving";
    case Errc::IsolatedVertexInReducedMode: return "IsolatedVertexInReducedMode";
    case Errc::SliceMismatch: return "SliceMismatch";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadField: return "BadField";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NBelowTail: return "NBelowTail";
    case Errc::NotInjective: return "NotInjective";
    case Errc::NotEdgeLinear: return "NotEdgeLinear";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InsufficientSubdivision: return "InsufficientSubdivision";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ExactnessFailure: return "ExactnessFailure";
    case Errc::RegressionFailure: return "RegressionFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace gbh
