#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "flagphase/gaussian.hpp"
#include "flagphase/rational.hpp"

namespace flagphase::cli {

using Json = nlohmann::ordered_json;

std::string format_float(double x);  // 6 significant digits

// Collects one command's results and renders them as text or as
// {command, inputs, exact, float, verdicts}.
class Report {
 public:
  explicit Report(std::string command);

  void input(const std::string& key, const std::string& value);

  void rational(const std::string& key, const Rational& q);
  void rationals(const std::string& key, const std::vector<Rational>& qs);
  void rational_rows(const std::string& key, const std::vector<std::vector<Rational>>& rows);
  void complex(const std::string& key, const GaussianRational& z);
  void text(const std::string& key, const std::string& value);
  void texts(const std::string& key, const std::vector<std::string>& values);

  void real(const std::string& key, double x);
  void reals(const std::string& key, const std::vector<double>& xs);

  void verdict(const std::string& key, const Json& value);

  const Json& json() const { return doc_; }
  void write(std::ostream& out, bool as_json) const;

 private:
  Json doc_;
  std::vector<std::string> lines_;
};

}  // namespace flagphase::cli
