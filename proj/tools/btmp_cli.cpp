// Command-line frontend: exact sequences, weight evaluation, verification
// suites, positivity reports, plot data and spec dumps in CSV/JSON.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "btmp/exact.hpp"
#include "btmp/json_io.hpp"
#include "btmp/positivity.hpp"
#include "btmp/quadrature.hpp"
#include "btmp/weight.hpp"

namespace {

using btmp::Json;
using btmp::Rational;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "2", "0..4" or "0,2,3" -> list of nonnegative M values.
std::vector<unsigned> parse_m_list(const std::string& text) {
  std::vector<unsigned> out;
  auto parse_one = [](const std::string& s) {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size() || v < 0) throw UsageError("--M values must be nonnegative integers");
    return static_cast<unsigned>(v);
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    unsigned lo = parse_one(text.substr(0, dots));
    unsigned hi = parse_one(text.substr(dots + 2));
    if (hi < lo) throw UsageError("--M range must be increasing");
    for (unsigned m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_one(item));
  if (out.empty()) throw UsageError("--M list is empty");
  return out;
}

// Decimal, integer or "p/q" string as an exact rational.
Rational parse_rational(const std::string& text) {
  try {
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      size_t frac_len = text.size() - dot - 1;
      Rational r(mpz_class(digits), mpz_class(1));
      for (size_t i = 0; i < frac_len; ++i) r /= 10;
      r.canonicalize();
      return r;
    }
    Rational r(text);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("cannot parse rational value '" + text + "'");
  }
}

// "2R" or "1.5R" stays an exact multiple of R = 256/27; a bare number is a
// plain rational. Returns the value as a rational so z > R stays exact.
Rational parse_z(const std::string& text) {
  if (!text.empty() && (text.back() == 'R' || text.back() == 'r')) {
    std::string head = text.substr(0, text.size() - 1);
    Rational mult = head.empty() ? Rational(1) : parse_rational(head);
    Rational z = mult * btmp::support_radius();
    z.canonicalize();
    return z;
  }
  return parse_rational(text);
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void emit_reports(const std::vector<btmp::VerificationReport>& reports,
                  const std::string& format, std::ostream& os) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(btmp::to_json(r));
    os << arr.dump(2) << "\n";
    return;
  }
  os << "name,M,parameter,expected,computed,rel_error,passed,tolerance\n";
  for (const auto& r : reports) {
    os << r.name << "," << r.M << "," << btmp::format_double(r.parameter) << ","
       << btmp::format_double(r.expected) << "," << btmp::format_double(r.computed) << ","
       << btmp::format_double(r.rel_error) << "," << (r.passed ? "true" : "false") << ","
       << btmp::format_double(r.tolerance) << "\n";
  }
}

int run_seq(unsigned M, unsigned count) {
  for (unsigned n = 0; n < count; ++n) {
    if (n > 0) std::cout << ",";
    std::cout << btmp::brown_tutte(M, n).get_str();
  }
  std::cout << "\n";
  return kExitOk;
}

int run_weight(unsigned M, double x, bool normalized) {
  double w = normalized ? btmp::weight_tilde(M, x) : btmp::weight(M, x);
  std::cout << btmp::format_double(w) << "\n";
  return kExitOk;
}

int run_verify(const std::vector<unsigned>& Ms, unsigned n_max, const std::vector<Rational>& zs,
               double tol, const std::string& format, const std::string& out) {
  std::vector<double> z_values;
  for (const auto& z : zs) {
    if (z <= btmp::support_radius()) {
      throw UsageError("--z values must exceed R = 256/27");
    }
    z_values.push_back(z.get_d());
  }
  auto reports = btmp::verify_suite(Ms, n_max, z_values, tol);
  std::ofstream file;
  emit_reports(reports, format, open_sink(out, file));
  bool all_passed = std::all_of(reports.begin(), reports.end(),
                                [](const auto& r) { return r.passed; });
  return all_passed ? kExitOk : kExitVerifyFailed;
}

int run_positivity(const std::vector<unsigned>& Ms, const std::string& format,
                   const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_sink(out, file);
  if (format == "json") {
    Json arr = Json::array();
    for (unsigned M : Ms) arr.push_back(btmp::to_json(btmp::convolution_certificate(M)));
    os << arr.dump(2) << "\n";
  } else {
    os << "M,status,pairing,witness_index,witness_a,witness_b\n";
    for (unsigned M : Ms) {
      auto r = btmp::convolution_certificate(M);
      os << M << "," << (r.certified ? "certified-positive" : "not-certifiable") << ",";
      for (size_t i = 0; i < r.pairing.size(); ++i) {
        if (i) os << ";";
        os << btmp::rational_to_string(r.pairing[i].first) << "<"
           << btmp::rational_to_string(r.pairing[i].second);
      }
      if (r.witness) {
        os << "," << r.witness->index << "," << btmp::rational_to_string(r.witness->a) << ","
           << btmp::rational_to_string(r.witness->b);
      } else {
        os << ",,,";
      }
      os << "\n";
    }
  }
  return kExitOk;
}

int run_plot_data(const std::vector<unsigned>& Ms, int points, bool normalized,
                  const std::string& out) {
  if (points < 2) throw UsageError("--points must be at least 2");
  const double R = 256.0 / 27.0;
  const double eps = 1e-6;
  std::ofstream file;
  std::ostream& os = open_sink(out, file);
  os << "x,M,w\n";
  for (unsigned M : Ms) {
    for (int i = 0; i < points; ++i) {
      double x = eps * R + (1.0 - 2.0 * eps) * R * i / (points - 1);
      double w = normalized ? btmp::weight_tilde(M, x) : btmp::weight(M, x);
      os << btmp::format_double(x) << "," << M << "," << btmp::format_double(w) << "\n";
    }
  }
  return kExitOk;
}

int run_spec(unsigned M, const std::string& out) {
  Json doc;
  doc["M"] = M;
  doc["weight_spec"] = btmp::to_json(btmp::weight_spec(M));
  doc["ogf_spec"] = btmp::to_json(btmp::ogf_spec(M));
  doc["slater"] = btmp::to_json(btmp::slater_decompose(btmp::weight_spec(M)));
  Json reshuffle;
  reshuffle["L1"] = btmp::to_json(btmp::delta_list(3, 2 * static_cast<long>(M) + 1).values);
  reshuffle["L2"] = btmp::to_json(btmp::delta_list(4, 2 * static_cast<long>(M) - 2).values);
  reshuffle["moved"] = "0";
  reshuffle["from"] = "ogf n-bracket";
  reshuffle["to"] = "weight alpha tail";
  doc["reshuffle"] = reshuffle;
  std::ofstream file;
  open_sink(out, file) << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brown-Tutte moment problem toolkit"};
  app.require_subcommand(1);

  std::string m_text = "0";
  std::string format = "csv";
  std::string out;
  std::vector<std::string> z_texts;
  long count = 6;
  long n_max = 12;
  long points = 500;
  double x = 1.0;
  double tol = 1e-8;
  bool normalized = false;

  auto* seq = app.add_subcommand("seq", "exact A(M,n) values");
  seq->add_option("--M", m_text, "row index M");
  seq->add_option("--count", count, "number of values");

  auto* weight = app.add_subcommand("weight", "evaluate the weight function at a point");
  weight->add_option("--M", m_text, "row index M");
  weight->add_option("--x", x, "abscissa in (0,R)")->required();
  weight->add_flag("--normalized", normalized, "divide by A(M,0)");

  auto* verify = app.add_subcommand("verify", "run the numerical verification suite");
  verify->add_option("--M", m_text, "M value, range a..b, or comma list");
  verify->add_option("--n-max", n_max, "largest moment order checked");
  verify->add_option("--z", z_texts, "Stieltjes points, e.g. 2R or 1.5R or 20.5");
  verify->add_option("--tol", tol, "relative tolerance");
  verify->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", out, "output file (default stdout)");

  auto* positivity = app.add_subcommand("positivity", "Mellin-convolution positivity certificates");
  positivity->add_option("--M", m_text, "M value, range or list");
  positivity->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  positivity->add_option("--out", out, "output file (default stdout)");

  auto* plot = app.add_subcommand("plot-data", "weight curves as CSV");
  plot->add_option("--M", m_text, "M value, range or list");
  plot->add_option("--points", points, "grid points per curve");
  plot->add_flag("--normalized", normalized, "divide by A(M,0)");
  plot->add_option("--out", out, "output file (default stdout)");

  auto* spec = app.add_subcommand("spec", "Meijer-G parameter lists and Slater terms as JSON");
  spec->add_option("--M", m_text, "row index M");
  spec->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\nhint: run with --help for usage\n";
    return kExitUsage;
  }

  try {
    auto Ms = parse_m_list(m_text);
    if (seq->parsed()) {
      if (count < 0) throw UsageError("--count must be nonnegative");
      return run_seq(Ms.front(), static_cast<unsigned>(count));
    }
    if (weight->parsed()) return run_weight(Ms.front(), x, normalized);
    if (verify->parsed()) {
      if (n_max < 0) throw UsageError("--n-max must be nonnegative");
      std::vector<Rational> zs;
      for (const auto& t : z_texts) zs.push_back(parse_z(t));
      return run_verify(Ms, static_cast<unsigned>(n_max), zs, tol, format, out);
    }
    if (positivity->parsed()) return run_positivity(Ms, format, out);
    if (plot->parsed()) return run_plot_data(Ms, static_cast<int>(points), normalized, out);
    if (spec->parsed()) return run_spec(Ms.front(), out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\nhint: run with --help for usage\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
