// Checks docs/anchors.json against the headers and the test sources: every
// anchor needs an implementing symbol and a test that exists.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Sources {
  std::string headers;               // concatenated public headers
  std::set<std::string> unit_tests;  // TEST_CASE names
  std::set<std::string> criteria;    // acceptance criterion titles
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Sources scan(const fs::path& root) {
  Sources s;
  for (const auto& e : fs::directory_iterator(root / "include" / "twave")) {
    if (e.path().extension() == ".hpp" || e.path().extension() == ".h") s.headers += slurp(e.path()) + "\n";
  }
  const std::regex test_case(R"re(TEST_CASE\("((?:[^"\\]|\\.)*)"\))re");
  const std::regex criterion(R"re(\{\s*\d+\s*,\s*"([^"]+)"\s*,\s*[0-9.]+\s*,)re");
  for (const auto& e : fs::directory_iterator(root / "tests")) {
    if (e.path().extension() != ".cpp") continue;
    const std::string text = slurp(e.path());
    for (std::sregex_iterator it(text.begin(), text.end(), test_case), end; it != end; ++it) {
      s.unit_tests.insert((*it)[1]);
    }
    if (e.path().filename() == "acceptance.cpp") {
      for (std::sregex_iterator it(text.begin(), text.end(), criterion), end; it != end; ++it) {
        s.criteria.insert((*it)[1]);
      }
    }
  }
  return s;
}

bool symbol_declared(const std::string& qualified, const std::string& headers) {
  const auto pos = qualified.rfind("::");
  const std::string name = pos == std::string::npos ? qualified : qualified.substr(pos + 2);
  if (name.empty()) return false;
  const std::regex word("\\b" + name + "\\b");
  return std::regex_search(headers, word);
}

bool test_exists(const std::string& ref, const Sources& src) {
  if (ref.rfind("unit:", 0) == 0) return src.unit_tests.count(ref.substr(5)) > 0;
  if (ref.rfind("acceptance:", 0) == 0) return src.criteria.count(ref.substr(11)) > 0;
  return false;
}

struct Report {
  std::size_t anchors = 0;
  std::vector<std::string> gaps;
  bool pass() const { return gaps.empty(); }
};

Report coverage_audit(const json& table, const Sources& src) {
  Report r;
  std::set<std::string> excluded;
  for (const auto& id : table.value("out_of_scope", json::array())) excluded.insert(id.get<std::string>());
  std::set<std::string> seen;
  for (const auto& a : table.at("anchors")) {
    ++r.anchors;
    const std::string id = a.value("id", "");
    if (id.empty()) {
      r.gaps.push_back("anchor #" + std::to_string(r.anchors) + ": missing id");
      continue;
    }
    if (!seen.insert(id).second) r.gaps.push_back(id + ": duplicate id");
    if (excluded.count(id)) r.gaps.push_back(id + ": out of scope, must not appear in the table");
    if (a.value("formula", "").empty()) r.gaps.push_back(id + ": no formula");
    const std::string impl = a.value("implementation", "");
    if (impl.empty()) {
      r.gaps.push_back(id + ": no implementing operation");
    } else if (!symbol_declared(impl, src.headers)) {
      r.gaps.push_back(id + ": implementation " + impl + " not declared in include/twave");
    }
    const std::string test = a.value("test", "");
    if (test.empty()) {
      r.gaps.push_back(id + ": no test id");
    } else if (!test_exists(test, src)) {
      r.gaps.push_back(id + ": test \"" + test + "\" not found");
    }
  }
  return r;
}

void print(const Report& r) {
  for (const auto& g : r.gaps) std::printf("  gap: %s\n", g.c_str());
  std::printf("%zu anchors, %zu gaps: %s\n", r.anchors, r.gaps.size(), r.pass() ? "PASS" : "FAIL");
}

int self_test(const json& table, const Sources& src) {
  int failures = 0;
  auto expect = [&](const char* what, bool ok) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", what);
    if (!ok) ++failures;
  };

  const Report full = coverage_audit(table, src);
  expect("full anchor table passes", full.pass());

  json missing = table;
  missing["anchors"][0]["test"] = "unit:no such test case";
  const Report m = coverage_audit(missing, src);
  const std::string id0 = table["anchors"][0]["id"];
  expect("missing test id fails and names the anchor",
         !m.pass() && std::any_of(m.gaps.begin(), m.gaps.end(), [&](const std::string& g) {
           return g.rfind(id0 + ":", 0) == 0 && g.find("no such test case") != std::string::npos;
         }));

  json oos = table;
  const std::string banned = table["out_of_scope"].at(0);
  oos["anchors"].push_back({{"id", banned}, {"formula", "x"}, {"implementation", "twave::make_solution"},
                            {"test", table["anchors"][0]["test"]}});
  const Report o = coverage_audit(oos, src);
  expect("out-of-scope anchor fails", !o.pass() && o.gaps.size() == 1);

  json dup = table;
  dup["anchors"].push_back(table["anchors"][0]);
  expect("duplicate id fails", !coverage_audit(dup, src).pass());

  json ghost = table;
  ghost["anchors"][0]["implementation"] = "twave::not_a_real_operation";
  expect("undeclared implementation fails", !coverage_audit(ghost, src).pass());

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anchor coverage audit"};
  std::string root = ".";
  std::string table_path;
  bool selftest = false;
  app.add_option("--root", root, "repository root");
  app.add_option("--anchors", table_path, "anchor table (default <root>/docs/anchors.json)");
  app.add_flag("--self-test", selftest, "check the audit itself on mutated copies of the table");
  CLI11_PARSE(app, argc, argv);
  if (table_path.empty()) table_path = (fs::path(root) / "docs" / "anchors.json").string();

  json table;
  try {
    table = json::parse(slurp(table_path));
    const Sources src = scan(root);
    if (selftest) return self_test(table, src);
    const Report r = coverage_audit(table, src);
    print(r);
    return r.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "anchor_audit: %s\n", e.what());
    return 2;
  }
}
