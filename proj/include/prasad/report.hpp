#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prasad/char_engine.hpp"

namespace prasad {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckRecord {
  std::string id;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string expected;
  std::string got;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }

  // Sorts records by id; ids are zero-padded so the order is stable.
  void canonicalize();
  void append(const Report& other);
  nlohmann::ordered_json to_json() const;  // schema_version 1
  std::string summary_line() const;
};

struct SuiteOptions {
  std::vector<int> primes;  // empty: suite default
  std::vector<int> ns;      // empty: suite default
};

const std::vector<std::string>& suite_names();

// Throws UsageError for unknown suites and out-of-range p or n.
Report run_suite(const std::string& name, const SuiteOptions& opts = {});

// Aligned rendering of a table, caption first.
std::string render_table(const TableData& t);

// Regenerated Tables 1-5 against the built-ins; `inject` = (table, row) to corrupt.
// The compared tables are stored in `compared` when given.
Report tables_report(std::optional<std::pair<int, int>> inject = std::nullopt,
                     std::vector<TableData>* compared = nullptr);

}  // namespace prasad
