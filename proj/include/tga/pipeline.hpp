#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tga/algelt.hpp"
#include "tga/scalar.hpp"

namespace tga {

/// Raised when a computed element differs from its pinned expected form; the
/// pipelines stop at the first mismatch and surface the diff.
class VerificationError : public std::runtime_error {
public:
  VerificationError(std::string label, std::string expected, std::string got)
      : std::runtime_error("verification failed at '" + label + "'\n  expected: " +
                           expected + "\n  got:      " + got),
        label(std::move(label)), expected(std::move(expected)), got(std::move(got)) {}

  std::string label, expected, got;
};

struct CheckLine {
  std::string label;
  std::string detail;
};

/// Machine-checkable residue of an obstruction run: the ordered intermediate
/// elements plus the final witness and its 2-adic defect.
struct Certificate {
  std::string pipeline;
  std::vector<std::pair<std::string, nlohmann::json>> trail;
  Scalar witness;
  int defect = 0;
};

struct PipelineResult {
  std::string name;
  std::vector<CheckLine> checks;  // everything listed here was verified exactly
  std::optional<Certificate> certificate;
  nlohmann::json extra;           // e.g. the S4 closure matrices
};

PipelineResult pipeline_a5();
PipelineResult pipeline_s4();
PipelineResult pipeline_s8();

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json report_json(const std::vector<PipelineResult>& results);

/// Re-derives every trail element of a serialized certificate and confirms
/// the witness bit-exactly; `why` receives the first discrepancy.
bool replay_certificate(const nlohmann::json& cert, std::string* why = nullptr);

}  // namespace tga
