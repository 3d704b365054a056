#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "hopfz/matrix.hpp"

namespace hopfz {

using Json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Machine-readable record of a verified claim: a list of named sub-checks
/// with an overall verdict, plus witness data (bases, matrices, divisors).
/// A negative mathematical fact recorded as such is still a passing
/// certificate; "failed" means a check the claim requires did not hold.
class Certificate {
 public:
  Certificate(std::string claim, std::string statement)
      : claim_(std::move(claim)), statement_(std::move(statement)) {}

  /// Record one sub-check. Returns `pass` so calls can be chained into
  /// control flow.
  bool check(const std::string& name, bool pass, const std::string& detail = "");

  /// Mark the whole certificate as not applicable (e.g. a claim conditional
  /// on a nonzero integral, evaluated on an algebra without one). An
  /// inapplicable certificate does not fail.
  void mark_inapplicable(const std::string& reason);

  bool passed() const;
  bool inapplicable() const { return inapplicable_; }
  std::string verdict() const;

  const std::string& claim() const { return claim_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* first_failure() const;

  Json& witness() { return witness_; }
  const Json& witness() const { return witness_; }

  Json to_json() const;

 private:
  std::string claim_;
  std::string statement_;
  std::vector<CheckResult> checks_;
  Json witness_ = Json::object();
  bool inapplicable_ = false;
  std::string inapplicable_reason_;
};

Json matrix_to_json(const ExactMatrix& m);
Json int_vector_to_json(const std::vector<Int>& v);

}  // namespace hopfz
