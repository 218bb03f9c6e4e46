#include "fano/cli.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fano/invariants.hpp"
#include "fano/problem.hpp"
#include "fano/report_json.hpp"

namespace fano::cli {

namespace {

// Strict comma-separated nonnegative integers: no spaces, no empty tokens.
bool parse_degrees(const std::string& s, std::vector<int>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::size_t end = comma == std::string::npos ? s.size() : comma;
    if (end == pos) return false;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, value);
    if (ec != std::errc{} || ptr != s.data() + end || value < 0) return false;
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos > s.size()) return false;
  }
  return !out.empty();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree and genus of the family of k-planes on a general complete "
               "intersection in projective n-space, in exact arithmetic"};
  app.name("fano");

  int n = 0;
  int k = 0;
  std::string degrees_str;
  bool json = false;
  bool check_oracle = false;
  bool with_time = false;
  app.add_option("--n", n, "dimension of the ambient projective space")->required();
  app.add_option("--degrees", degrees_str,
                 "comma-separated hypersurface degrees, e.g. 2,2,3 (each >= 2)")
      ->required();
  app.add_option("--k", k, "dimension of the linear subspaces")->required();
  app.add_flag("--json", json, "emit a single JSON object instead of text");
  app.add_flag("--check-oracle", check_oracle,
               "cross-check the degree against the independent staircase formula");
  app.add_flag("--time", with_time, "include wall time in the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::vector<int> degrees;
  if (!parse_degrees(degrees_str, degrees)) {
    err << "invalid --degrees '" << degrees_str
        << "': expected comma-separated nonnegative integers\n\n"
        << app.help();
    return 2;
  }

  try {
    const FanoProblem problem(n, degrees, k);
    const InvariantsReport report = compute_report(problem, check_oracle);
    if (json)
      out << report_to_json(report, with_time).dump(2) << "\n";
    else
      out << render_text(report, with_time);
    return 0;
  } catch (const consistency_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fano::cli
