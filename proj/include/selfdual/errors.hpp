// Domain error types. Every throwing operation documents which of these it
// raises; the CLI maps them to structured {error_kind, detail} objects.
#pragma once

#include <stdexcept>
#include <string>

namespace sd {

struct DomainError : std::runtime_error {
  DomainError(std::string kind_, const std::string& detail)
      : std::runtime_error(kind_ + ": " + detail), kind(std::move(kind_)) {}
  std::string kind;
};

struct EmptyBasisList : DomainError {
  explicit EmptyBasisList(const std::string& d) : DomainError("EmptyBasisList", d) {}
};

struct ExchangeAxiomViolation : DomainError {
  explicit ExchangeAxiomViolation(const std::string& d)
      : DomainError("ExchangeAxiomViolation", d) {}
};

struct GroundSizeNotTwiceRank : DomainError {
  explicit GroundSizeNotTwiceRank(const std::string& d)
      : DomainError("GroundSizeNotTwiceRank", d) {}
};

struct NotSelfDual : DomainError {
  explicit NotSelfDual(const std::string& d) : DomainError("NotSelfDual", d) {}
};

struct DegeneratePoints : DomainError {
  explicit DegeneratePoints(const std::string& d) : DomainError("DegeneratePoints", d) {}
};

struct DegenerateSevenPoints : DomainError {
  explicit DegenerateSevenPoints(const std::string& d)
      : DomainError("DegenerateSevenPoints", d) {}
};

struct OnTwistedCubicOrConicProjection : DomainError {
  explicit OnTwistedCubicOrConicProjection(const std::string& d)
      : DomainError("OnTwistedCubicOrConicProjection", d) {}
};

struct NotOnGrassmannian : DomainError {
  explicit NotOnGrassmannian(const std::string& d)
      : DomainError("NotOnGrassmannian", d) {}
};

struct RetryBoundExceeded : DomainError {
  explicit RetryBoundExceeded(const std::string& d)
      : DomainError("RetryBoundExceeded", d) {}
};

struct NotTrivalent3Connected : DomainError {
  explicit NotTrivalent3Connected(const std::string& d)
      : DomainError("NotTrivalent3Connected", d) {}
};

struct BadInput : DomainError {
  explicit BadInput(const std::string& d) : DomainError("BadInput", d) {}
};

struct RankDeficient : DomainError {
  explicit RankDeficient(const std::string& d) : DomainError("RankDeficient", d) {}
};

struct DisconnectedSupport : DomainError {
  explicit DisconnectedSupport(const std::string& d)
      : DomainError("DisconnectedSupport", d) {}
};

struct NormalFormUnavailable : DomainError {
  explicit NormalFormUnavailable(const std::string& d)
      : DomainError("NormalFormUnavailable", d) {}
};

struct SamplerExhausted : DomainError {
  explicit SamplerExhausted(const std::string& d)
      : DomainError("SamplerExhausted", d) {}
};

struct DegenerateParameters : DomainError {
  explicit DegenerateParameters(const std::string& d)
      : DomainError("DegenerateParameters", d) {}
};

struct WrongDimensions : DomainError {
  explicit WrongDimensions(const std::string& d)
      : DomainError("WrongDimensions", d) {}
};

struct NotConnected : DomainError {
  explicit NotConnected(const std::string& d) : DomainError("NotConnected", d) {}
};

struct DegenerateHyperplane : DomainError {
  explicit DegenerateHyperplane(const std::string& d)
      : DomainError("DegenerateHyperplane", d) {}
};

struct GenericityNotCertified : DomainError {
  explicit GenericityNotCertified(const std::string& d)
      : DomainError("GenericityNotCertified", d) {}
};

struct NotAMatroid : DomainError {
  explicit NotAMatroid(const std::string& d) : DomainError("NotAMatroid", d) {}
};

struct NotATreePoint : DomainError {
  explicit NotATreePoint(const std::string& d) : DomainError("NotATreePoint", d) {}
};

struct BadIndices : DomainError {
  explicit BadIndices(const std::string& d) : DomainError("BadIndices", d) {}
};

struct MalformedGraph6 : DomainError {
  explicit MalformedGraph6(const std::string& d)
      : DomainError("MalformedGraph6", d) {}
};

struct WrongGenus : DomainError {
  explicit WrongGenus(const std::string& d) : DomainError("WrongGenus", d) {}
};

struct WrongLength : DomainError {
  explicit WrongLength(const std::string& d) : DomainError("WrongLength", d) {}
};

struct NotSkew : DomainError {
  explicit NotSkew(const std::string& d) : DomainError("NotSkew", d) {}
};

}  // namespace sd
