#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cotree {

using Vertex = int;
using Dart = int;    // half-edge id; twin(d) == d ^ 1
using EdgeId = int;  // edge_of(d) == d >> 1
using FaceId = int;

inline Dart twin(Dart d) { return d ^ 1; }
inline EdgeId edge_of(Dart d) { return d >> 1; }

enum class Err {
  NonSymmetricAdjacency,
  EulerViolation,
  OuterFaceNotFound,
  BadRoots,
  ParallelOrLoopEdge,
  TooLargeForBruteCheck,
  NotThreeConnected,
  AugmentationNotThreeConnected,
  NotASpanningTree,
  PreconditionDegree,
  InternalInvariantBroken,
  TooLarge,
  BadParams,
  BadInput,
};

const char* err_name(Err e);

class GraphError : public std::runtime_error {
 public:
  GraphError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

// One failed check from a validator. `check` is a stable id usable in tests,
// `where` locates the offender (vertex/group/edge as text), `message` explains.
struct Finding {
  std::string check;
  std::string where;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const { return findings.empty(); }
  void add(std::string check, std::string where, std::string message) {
    findings.push_back({std::move(check), std::move(where), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }
};

}  // namespace cotree
