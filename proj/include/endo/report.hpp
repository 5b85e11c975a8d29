#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace endo {

/// Outcome of one verification sweep.
struct VerificationReport {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  long points_checked = 0;
  long failure_count = 0;
  std::vector<nlohmann::json> failures;  // first kMaxStoredFailures, each {input, lhs, rhs}
  nlohmann::json notes = nlohmann::json::object();
  bool incomplete = false;
  long elapsed_ms = 0;

  static constexpr std::size_t kMaxStoredFailures = 50;

  void check(bool ok, nlohmann::json input, nlohmann::json lhs, nlohmann::json rhs) {
    ++points_checked;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kMaxStoredFailures)
      failures.push_back({{"input", std::move(input)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}});
  }

  void count_pass() { ++points_checked; }

  bool pass() const { return failure_count == 0 && !incomplete && points_checked > 0; }
};

inline nlohmann::json to_json_value(const VerificationReport& r) {
  nlohmann::json j{{"suite", r.suite},
                   {"parameters", r.parameters},
                   {"points_checked", r.points_checked},
                   {"failure_count", r.failure_count},
                   {"failures", r.failures},
                   {"pass", r.pass()}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.incomplete) j["incomplete"] = true;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// CSV with one summary row per report followed by one row per stored failure.
inline std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "suite,kind,points_checked,failure_count,pass,incomplete,input,lhs,rhs,elapsed_ms\n";
  for (auto& r : reports) {
    os << detail::csv_field(r.suite) << ",summary," << r.points_checked << ',' << r.failure_count << ','
       << (r.pass() ? "true" : "false") << ',' << (r.incomplete ? "true" : "false") << ",,,," << r.elapsed_ms
       << '\n';
    for (auto& f : r.failures)
      os << detail::csv_field(r.suite) << ",failure,,,,," << detail::csv_field(f["input"].dump()) << ','
         << detail::csv_field(f["lhs"].dump()) << ',' << detail::csv_field(f["rhs"].dump()) << ",\n";
  }
  return os.str();
}

/// Wall-clock timer for elapsed_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace endo
