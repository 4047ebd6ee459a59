#pragma once

#include <stdexcept>
#include <string>

namespace tamecheck {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// format_algebra
struct DegenerateInnerDegree : Error {
  explicit DegenerateInnerDegree(const std::string& msg) : Error(msg) {}
};

// gate_catalog
struct UnknownGate : Error {
  explicit UnknownGate(const std::string& name)
      : Error("unknown gate: " + name) {}
};
struct UnknownLoss : Error {
  explicit UnknownLoss(const std::string& name)
      : Error("unknown loss: " + name) {}
};
struct MissingHyperparam : Error {
  explicit MissingHyperparam(const std::string& msg) : Error(msg) {}
};
struct UnboundedDomain : Error {
  explicit UnboundedDomain(const std::string& msg) : Error(msg) {}
};
struct InvalidSequenceLength : Error {
  explicit InvalidSequenceLength(const std::string& msg) : Error(msg) {}
};

// arch_graph
struct CycleDetected : Error {
  explicit CycleDetected(const std::string& msg) : Error(msg) {}
};
struct BadWidths : Error {
  explicit BadWidths(const std::string& msg) : Error(msg) {}
};
struct BadConfig : Error {
  explicit BadConfig(const std::string& msg) : Error(msg) {}
};
struct UnboundedPE : Error {
  explicit UnboundedPE(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// tame_analyzer
struct NoFormatAvailable : Error {
  std::string node;
  explicit NoFormatAvailable(const std::string& node_id)
      : Error("no Pfaffian format available at node: " + node_id),
        node(node_id) {}
};

// bound_engine
struct NonPositive : Error {
  explicit NonPositive(const std::string& msg) : Error(msg) {}
};
struct NegativeBase : Error {
  explicit NegativeBase(const std::string& msg) : Error(msg) {}
};
struct InvalidFormat : Error {
  explicit InvalidFormat(const std::string& msg) : Error(msg) {}
};
struct BadRange : Error {
  explicit BadRange(const std::string& msg) : Error(msg) {}
};
struct DegenerateLog : Error {
  explicit DegenerateLog(const std::string& msg) : Error(msg) {}
};

// empirical_lab
struct GridTooLarge : Error {
  explicit GridTooLarge(const std::string& msg) : Error(msg) {}
};
struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};

}  // namespace tamecheck
