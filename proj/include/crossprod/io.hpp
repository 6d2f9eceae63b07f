#pragma once

// JSON specs (schemaVersion 1, strict) and report serialization.
// Block and ideal indices are 1-based in every file.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossprod/algebra.hpp"
#include "crossprod/landstad.hpp"
#include "crossprod/report.hpp"

namespace crossprod::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr int kMaxWindow = 6;
inline constexpr int kMaxDepth = 6;

std::string tool_version();

/// Malformed or schema-invalid input.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> window;
  std::optional<int> depth;
  std::optional<double> eps;
  std::optional<std::uint64_t> seed;
  std::optional<int> attempts;
};

enum class SpecKind { PartialAction, GradedAlgebra, Cuntz, WienerHopf };

const char* to_string(SpecKind k);

struct SystemSpec {
  SpecKind kind = SpecKind::PartialAction;
  std::string name;
  Options options;
  Json raw;

  std::optional<PartialActionSystem> system;    // partial-action
  std::optional<GradedMatrixAlgebra> graded;    // graded-algebra
  int n = 0;                                    // cuntz
  std::vector<std::vector<int>> ck;             // cuntz, optional transition matrix
  std::string qlo;                              // wiener-hopf
};

SystemSpec parse_spec(const std::string& text);
SystemSpec load_spec(const std::string& path);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);

Json system_to_json(const PartialActionSystem& sys);
Json graded_to_json(const GradedMatrixAlgebra& g, const std::string& name);

/// {toolVersion, spec, checks: [{name, paperAnchor, verdict, witness, timingMs}], summary, notes}
Json report_to_json(const Report& r, const Json& spec);

void write_file(const std::string& path, const std::string& text);

}  // namespace crossprod::io
