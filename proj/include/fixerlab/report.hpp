#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixerlab/psl2.hpp"
#include "fixerlab/table1.hpp"

namespace fixerlab {

using Json = nlohmann::ordered_json;

struct ReportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One check. Evidence holds exact integers, booleans and strings only.
struct Verdict {
  std::string check;
  bool pass = false;
  Json evidence = Json::object();
};

// The body is a function of the inputs alone: no timing, no thread count,
// so it is byte-identical across runs. Decimals live in `display`.
struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<Verdict> verdicts;
  std::vector<std::string> notices;
  Json display = Json::array();

  bool ok() const;
  Json to_json() const;
  std::string dump_json() const;
  std::string dump_text() const;
};

enum class Scope { exhaustive, targeted };
Scope parse_scope(const std::string &s);
std::string scope_name(Scope s);

// "phi^2,delta" -> generators of O <= Out. Empty string: no filter.
std::vector<OuterElem> parse_outer(uint32_t q, const std::string &spec);
// O generated by `gens` equals the O of `spec`.
bool same_outer(uint32_t q, const std::vector<OuterElem> &gens, const GroupSpec &spec);

// Table 1 fixture: one entry per (G, H), in table1_cases order.
Json table1_fixture_entry(uint32_t q, const Table1Case &c);
std::optional<Json> load_fixture(const std::string &dir, const std::string &name);
std::string fixtures_dir(const std::string &override_dir = {});

// Exhaustive: lattice scan per q <= 31, compared with the fixture when given.
// Targeted: rho over the named maximal subgroups, q <= 128.
Report cmd_table_psl2(const std::vector<uint32_t> &qs, const std::string &outer, Scope scope,
                      const std::optional<Json> &fixture);
// The fixture entries the exhaustive command would compare against.
Json build_table1_fixture(const std::vector<uint32_t> &qs);

Report cmd_verify_gamma(const std::vector<uint32_t> &qs);
// rho0 per primitive (G, H) for the PSL2(q) list, plus the rho1 equality for
// A5 on the cosets of S3.
Report cmd_rho(const std::vector<uint32_t> &qs, Scope scope);
Report cmd_spiga(const std::vector<uint32_t> &qs, const std::string &kinds);
Report cmd_alt_scan(uint32_t n_lo, uint32_t n_hi, bool brute);
// Row specs "G:H:K"; empty means every shipped row.
Report cmd_sporadic(const std::vector<std::string> &rows);

}  // namespace fixerlab
