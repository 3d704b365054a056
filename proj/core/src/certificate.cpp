#include "hopfz/certificate.hpp"

namespace hopfz {

bool Certificate::check(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back(CheckResult{name, pass, detail});
  return pass;
}

void Certificate::mark_inapplicable(const std::string& reason) {
  inapplicable_ = true;
  inapplicable_reason_ = reason;
}

bool Certificate::passed() const {
  if (inapplicable_) return true;
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

std::string Certificate::verdict() const {
  if (inapplicable_) return "inapplicable";
  return passed() ? "pass" : "fail";
}

const CheckResult* Certificate::first_failure() const {
  for (const auto& c : checks_)
    if (!c.pass) return &c;
  return nullptr;
}

Json Certificate::to_json() const {
  Json j;
  j["claim"] = claim_;
  j["statement"] = statement_;
  j["verdict"] = verdict();
  if (inapplicable_) j["reason"] = inapplicable_reason_;
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  if (!witness_.empty()) j["witness"] = witness_;
  return j;
}

Json matrix_to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Json int_vector_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

}  // namespace hopfz
