#include "cli/report.hpp"

#include <cstdio>

namespace flagphase::cli {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Report::Report(std::string command) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = Json::object();
  doc_["exact"] = Json::object();
  doc_["float"] = Json::object();
  doc_["verdicts"] = Json::object();
}

void Report::input(const std::string& key, const std::string& value) {
  doc_["inputs"][key] = value;
}

void Report::rational(const std::string& key, const Rational& q) {
  doc_["exact"][key] = to_string(q);
  doc_["float"][key] = to_double(q);
  lines_.push_back(key + " = " + to_string(q) + "  (" + format_float(to_double(q)) + ")");
}

void Report::rationals(const std::string& key, const std::vector<Rational>& qs) {
  Json exact = Json::array();
  Json approx = Json::array();
  std::vector<std::string> e;
  std::vector<std::string> f;
  for (const auto& q : qs) {
    exact.push_back(to_string(q));
    approx.push_back(to_double(q));
    e.push_back(to_string(q));
    f.push_back(format_float(to_double(q)));
  }
  doc_["exact"][key] = std::move(exact);
  doc_["float"][key] = std::move(approx);
  lines_.push_back(key + " = (" + join(e) + ")  (" + join(f) + ")");
}

void Report::rational_rows(const std::string& key, const std::vector<std::vector<Rational>>& rows) {
  Json exact = Json::array();
  Json approx = Json::array();
  std::vector<std::string> e;
  std::vector<std::string> f;
  for (const auto& row : rows) {
    Json er = Json::array();
    Json fr = Json::array();
    std::vector<std::string> es;
    std::vector<std::string> fs;
    for (const auto& q : row) {
      er.push_back(to_string(q));
      fr.push_back(to_double(q));
      es.push_back(to_string(q));
      fs.push_back(format_float(to_double(q)));
    }
    exact.push_back(std::move(er));
    approx.push_back(std::move(fr));
    e.push_back("[" + join(es) + "]");
    f.push_back("[" + join(fs) + "]");
  }
  doc_["exact"][key] = std::move(exact);
  doc_["float"][key] = std::move(approx);
  lines_.push_back(key + " = [" + join(e) + "]  ([" + join(f) + "])");
}

void Report::complex(const std::string& key, const GaussianRational& z) {
  doc_["exact"][key] = {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
  doc_["float"][key] = {{"re", to_double(z.re)}, {"im", to_double(z.im)}};
  const double im = to_double(z.im);
  lines_.push_back(key + " = " + to_string(z) + "  (" + format_float(to_double(z.re)) + (im < 0 ? " - " : " + ") +
                   format_float(im < 0 ? -im : im) + "i)");
}

void Report::text(const std::string& key, const std::string& value) {
  doc_["exact"][key] = value;
  lines_.push_back(key + " = " + value);
}

void Report::texts(const std::string& key, const std::vector<std::string>& values) {
  doc_["exact"][key] = values;
  lines_.push_back(key + " = " + join(values, " "));
}

void Report::real(const std::string& key, double x) {
  doc_["float"][key] = x;
  lines_.push_back(key + " ~ " + format_float(x));
}

void Report::reals(const std::string& key, const std::vector<double>& xs) {
  doc_["float"][key] = xs;
  std::vector<std::string> f;
  for (double x : xs) f.push_back(format_float(x));
  lines_.push_back(key + " ~ (" + join(f) + ")");
}

void Report::verdict(const std::string& key, const Json& value) {
  doc_["verdicts"][key] = value;
  lines_.push_back(key + ": " + render(value));
}

void Report::write(std::ostream& out, bool as_json) const {
  if (as_json) {
    out << doc_.dump(2) << '\n';
    return;
  }
  for (const auto& line : lines_) out << line << '\n';
}

}  // namespace flagphase::cli
