// Command-line front end: counting, verification, enumeration, exports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 enumeration budget/bound exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schur/counting.hpp"
#include "schur/enumerate.hpp"
#include "schur/genfun.hpp"
#include "schur/sequences.hpp"
#include "schur/units.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

void print_checks(const std::vector<CheckLine>& lines, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["checks"] = nlohmann::json::array();
    bool all = true;
    for (const auto& line : lines) {
      j["checks"].push_back({{"name", line.name}, {"ok", line.ok}, {"detail", line.detail}});
      all = all && line.ok;
    }
    j["ok"] = all;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& line : lines)
    std::cout << (line.ok ? "ok   " : "FAIL ") << line.name
              << (line.detail.empty() ? "" : ": " + line.detail) << "\n";
}

std::string fixtures_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SCHUR_FIXTURES")) return env;
  return SCHURCOUNT_FIXTURES_DIR;
}

nlohmann::json load_fixture(const std::string& dir, const std::string& name) {
  const std::string path = dir + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

long long default_budget() {
  if (const char* env = std::getenv("SCHUR_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (...) {
      throw CLI::ValidationError("SCHUR_BUDGET", "not an integer");
    }
  }
  return 100'000'000;
}

// ---------------------------------------------------------------------------

int run_count(std::int64_t p, int n, bool two, bool poly, const std::string& format) {
  schur::BigInt count;
  if (two) {
    count = schur::omega_two(n);
  } else {
    count = schur::omega_odd_eval(schur::PrimeSpec::make(p, n));
  }
  if (format == "json") {
    nlohmann::json j;
    j["p"] = two ? 2 : p;
    j["n"] = n;
    j["count"] = count.str();
    if (poly) j["polynomial"] = to_string(schur::omega_odd(n));
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    if (two)
      std::cout << "n,count\n" << n << "," << count << "\n";
    else
      std::cout << "p,n,count\n" << p << "," << n << "," << count << "\n";
  } else {
    std::cout << count << "\n";
    if (poly) std::cout << to_string(schur::omega_odd(n)) << "\n";
  }
  return kExitOk;
}

int run_poly(int n, bool layers, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["n"] = n;
    j["polynomial"] = to_string(schur::omega_odd(n));
    if (layers) {
      nlohmann::json l = nlohmann::json::object();
      for (int k = 0; k <= n; ++k) l[std::to_string(k)] = to_string(schur::omega_layer_odd(n, k));
      j["layers"] = std::move(l);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(schur::omega_odd(n)) << "\n";
    if (layers)
      for (int k = 0; k <= n; ++k)
        std::cout << "Omega(" << n << "," << k << ") = "
                  << to_string(schur::omega_layer_odd(n, k)) << "\n";
  }
  return kExitOk;
}

int run_enumerate(std::int64_t modulus, bool brute, const std::string& dump_path,
                  long long budget, std::int64_t max_modulus, int jobs,
                  const std::string& format) {
  const auto pp = schur::factor_prime_power(modulus);
  if (!pp) throw CLI::ValidationError("--modulus", "not a prime power");

  schur::EnumerationResult result;
  if (brute) {
    result = schur::enumerate_bruteforce(static_cast<int>(modulus), budget, jobs);
  } else {
    schur::EnumerationOptions options;
    options.max_modulus = max_modulus;
    options.brute_budget = budget;
    result = schur::enumerate_constructive(pp->p, pp->k, options);
  }
  if (!dump_path.empty()) {
    std::ofstream out(dump_path);
    if (!out) throw CLI::ValidationError("--dump", "cannot open " + dump_path);
    out << schur::dump_json(result) << "\n";
  }
  if (format == "json") {
    nlohmann::json j;
    j["modulus"] = modulus;
    j["method"] = result.method == schur::EnumerationResult::Method::brute_force
                      ? "brute-force"
                      : "constructive";
    j["count"] = result.rings.size();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << result.rings.size() << "\n";
  }
  return kExitOk;
}

void verify_modulus(std::vector<CheckLine>& lines, std::int64_t modulus, bool brute,
                    long long budget, std::int64_t max_modulus) {
  const auto pp = schur::factor_prime_power(modulus);
  if (!pp) throw CLI::ValidationError("--modulus", "not a prime power");
  schur::EnumerationOptions options;
  options.max_modulus = max_modulus;
  options.brute_budget = budget;
  const auto report = schur::crosscheck(pp->p, pp->k, brute, options);
  const std::string prefix = "modulus " + std::to_string(modulus) + " ";
  for (const auto& line : report.lines)
    lines.push_back({prefix + line.name, line.ok, line.detail});
}

void verify_gf(std::vector<CheckLine>& lines, const std::string& which, int order) {
  const schur::GfReport report =
      which == "odd" ? schur::verify_gf_odd(order) : schur::verify_gf_two(order);
  CheckLine line;
  line.name = "generating function (" + which + ") order " + std::to_string(order);
  line.ok = report.ok;
  if (!report.ok)
    line.detail = "first mismatch at z^" + std::to_string(*report.first_mismatch_index);
  lines.push_back(std::move(line));
}

void verify_triangles(std::vector<CheckLine>& lines, int rows, const std::string& fixtures) {
  const auto cat = schur::catalan_triangle(rows);
  const auto sup = schur::super_catalan_triangle(rows);

  // Summation forms of the two recurrences, checked cell by cell.
  bool cat_ok = true, sup_ok = true;
  for (int k = 2; k <= rows && (cat_ok || sup_ok); ++k) {
    for (int j = 1; j < k; ++j) {
      schur::BigInt c_sum = 0;  // sum_{l=j}^{k} c_{(j-1)l} with the extended diagonal at l=j
      for (int l = j; l <= k; ++l)
        c_sum += cat.at(j - 1, std::max(l, j));  // c_{(j-1)j} extends to row j
      if (c_sum != cat.at(j, k)) cat_ok = false;
      schur::BigInt s_sum = sup.at(j - 1, k);  // s_{(j-1)k} + 2 sum_{l=j}^{k-1} s_{(j-1)l}
      for (int l = j; l <= k - 1; ++l) s_sum += 2 * sup.at(j - 1, std::max(l, j));
      if (s_sum != sup.at(j, k)) sup_ok = false;
    }
  }
  lines.push_back({"catalan triangle summation recurrence, " + std::to_string(rows) + " rows",
                   cat_ok, ""});
  lines.push_back({"super-catalan triangle summation recurrence, " + std::to_string(rows) + " rows",
                   sup_ok, ""});

  bool diag_ok = true;
  for (int k = 1; k <= rows; ++k) {
    if (cat.at(k - 1, k) != schur::catalan(k)) diag_ok = false;
    if (2 * sup.at(k - 1, k) != schur::schroder(k)) diag_ok = false;
  }
  lines.push_back({"triangle diagonals vs catalan/schroder", diag_ok, ""});

  try {
    const auto jc = load_fixture(fixtures, "catalan_triangle.json");
    const auto js = load_fixture(fixtures, "super_catalan_triangle.json");
    auto rows_match = [rows](const nlohmann::json& fixture, const schur::TriangularArray& t) {
      const auto& fr = fixture.at("rows");
      for (std::size_t i = 0; i < fr.size() && i < static_cast<std::size_t>(rows); ++i) {
        const auto& trow = t.row(static_cast<int>(i) + 1);
        if (fr[i].size() != trow.size()) return false;
        for (std::size_t j = 0; j < trow.size(); ++j)
          if (schur::BigInt(fr[i][j].get<long long>()) != trow[j]) return false;
      }
      return true;
    };
    lines.push_back({"catalan triangle vs printed figure", rows_match(jc, cat), ""});
    lines.push_back({"super-catalan triangle vs printed figure", rows_match(js, sup), ""});
  } catch (const std::exception& e) {
    lines.push_back({"triangle fixtures", false, e.what()});
  }
}

void verify_tables(std::vector<CheckLine>& lines, const std::string& fixtures) {
  const auto t3 = load_fixture(fixtures, "table3.json");
  int checked = 0;
  for (const auto& p : t3.at("primes")) {
    const std::int64_t prime = p.get<std::int64_t>();
    const auto& column = t3.at("counts").at(std::to_string(prime));
    for (std::size_t i = 0; i < column.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      const schur::BigInt expected(column[i].get<long long>());
      const schur::BigInt actual = schur::omega_odd_eval(schur::PrimeSpec::make(prime, n));
      std::ostringstream name;
      name << "table3 p=" << prime << " n=" << n;
      std::ostringstream detail;
      detail << "computed " << actual << ", table " << expected;
      lines.push_back({name.str(), actual == expected, detail.str()});
      ++checked;
    }
  }
  const auto t4 = load_fixture(fixtures, "table4.json");
  const auto& counts = t4.at("counts");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const schur::BigInt expected(counts[i].get<long long>());
    const schur::BigInt actual = schur::omega_two(n);
    std::ostringstream name;
    name << "table4 n=" << n;
    std::ostringstream detail;
    detail << "computed " << actual << ", table " << expected;
    lines.push_back({name.str(), actual == expected, detail.str()});
    ++checked;
  }
  lines.push_back({"table entries checked", checked == 80,
                   std::to_string(checked) + " of 80"});
}

int run_check_partition(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  std::vector<schur::GroupPartition> partitions;
  try {
    const auto j = nlohmann::json::parse(buffer.str());
    // Either a single partition object or an array of them (dump format).
    const auto parse_one = [](const nlohmann::json& obj) {
      return schur::partition_from_json(obj.dump());
    };
    if (j.is_array())
      for (const auto& entry : j) partitions.push_back(parse_one(entry));
    else
      partitions.push_back(parse_one(j));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool all_ok = true;
  for (const auto& partition : partitions) {
    const schur::SchurCheck check = schur::is_schur_ring(partition);
    if (check.ok) {
      std::cout << "ok modulus " << partition.modulus << " (" << partition.blocks.size()
                << " classes)\n";
    } else {
      all_ok = false;
      std::cout << "violated condition (" << check.condition << "): " << check.detail << "\n";
    }
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over cyclic groups of prime power order: counting, "
               "enumeration, and verification"};
  app.require_subcommand(1);

  std::string format = "text";

  // count
  auto* count = app.add_subcommand("count", "Number of Schur rings over Z_{p^n}");
  std::int64_t count_p = 0;
  int count_n = 0;
  bool count_two = false, count_poly = false;
  auto* popt = count->add_option("--p", count_p, "odd prime p");
  count->add_option("--n", count_n, "exponent n")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--two", count_two, "p = 2 case");
  count->add_flag("--poly", count_poly, "also print the Omega polynomial (odd p)");
  count->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  // poly
  auto* poly = app.add_subcommand("poly", "Omega polynomial in x = d(p-1)");
  int poly_n = 0;
  bool poly_layers = false;
  poly->add_option("--n", poly_n, "exponent n")->required()->check(CLI::NonNegativeNumber);
  poly->add_flag("--layers", poly_layers, "also print Omega(n,k) for k = 0..n");
  poly->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List Schur rings over Z_{p^n}");
  std::int64_t enum_modulus = 0;
  bool enum_brute = false;
  std::string enum_dump;
  long long budget = default_budget();
  std::int64_t max_modulus = 1024;
  int jobs = 1;
  enumerate->add_option("--modulus", enum_modulus, "prime power modulus")->required();
  enumerate->add_flag("--brute", enum_brute, "use the brute-force partition search");
  enumerate->add_option("--dump", enum_dump, "write rings + omega images as JSON");
  enumerate->add_option("--budget", budget, "brute-force node budget");
  enumerate->add_option("--max-modulus", max_modulus, "constructive modulus bound");
  enumerate->add_option("--jobs", jobs, "worker threads for brute force")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check recurrences, tables, and enumeration");
  std::int64_t verify_modulus = 0;
  bool verify_brute = false;
  std::string verify_gf_case;
  int verify_order = 30;
  int verify_rows = 0;
  bool verify_tables_flag = false;
  std::string fixtures_flag;
  auto* vmod = verify->add_option("--modulus", verify_modulus,
                                  "enumerate Z_M and compare against the formulas");
  verify->add_flag("--brute", verify_brute, "also compare against the brute-force oracle");
  auto* vgf = verify->add_option("--gf", verify_gf_case, "generating function identity")
                  ->check(CLI::IsMember({"odd", "two"}));
  verify->add_option("--order", verify_order, "series truncation order")
      ->check(CLI::PositiveNumber);
  auto* vtri = verify->add_option("--triangles", verify_rows, "triangle rows to verify")
                   ->check(CLI::PositiveNumber);
  auto* vtab = verify->add_flag("--tables", verify_tables_flag,
                                "verify the two published count tables");
  verify->add_option("--fixtures", fixtures_flag, "fixture directory override");
  verify->add_option("--budget", budget, "brute-force node budget");
  verify->add_option("--max-modulus", max_modulus, "constructive modulus bound");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // check-partition
  auto* check = app.add_subcommand("check-partition", "Wielandt axiom check on a partition file");
  std::string check_file;
  check->add_option("file", check_file, "JSON partition file")->required();

  try {
    app.parse(argc, argv);

    if (count->parsed()) {
      if (count_two == (popt->count() > 0))
        throw CLI::ValidationError("count", "exactly one of --p or --two is required");
      if (count_two && count_poly)
        throw CLI::ValidationError("--poly", "polynomials exist only in the odd-prime case");
      return run_count(count_p, count_n, count_two, count_poly, format);
    }
    if (poly->parsed()) return run_poly(poly_n, poly_layers, format);
    if (enumerate->parsed())
      return run_enumerate(enum_modulus, enum_brute, enum_dump, budget, max_modulus, jobs,
                           format);
    if (verify->parsed()) {
      if (vmod->count() == 0 && vgf->count() == 0 && vtri->count() == 0 && vtab->count() == 0)
        throw CLI::ValidationError("verify",
                                   "nothing to verify: pass --modulus, --gf, --triangles, or --tables");
      std::vector<CheckLine> lines;
      if (vmod->count() > 0) verify_modulus(lines, verify_modulus, verify_brute, budget, max_modulus);
      if (vgf->count() > 0) verify_gf(lines, verify_gf_case, verify_order);
      if (vtri->count() > 0) verify_triangles(lines, verify_rows, fixtures_dir(fixtures_flag));
      if (vtab->count() > 0) verify_tables(lines, fixtures_dir(fixtures_flag));
      print_checks(lines, format);
      const bool all_ok =
          std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok; });
      return all_ok ? kExitOk : kExitVerifyFail;
    }
    if (check->parsed()) return run_check_partition(check_file);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const schur::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
