#pragma once

// Frozen reference tables for the 29 class number one moduli: basic indices
// of the unramified prime classes, the ramified primes, the unit group
// isomorphism types with published generator sets, the full character grid
// for n = 20, the leading nonzero series coefficients of every modulus, and
// the numerical zeta residues with regulators for phi(n) <= 12. verify_all()
// recomputes each table and reports one pass/fail per table; the CLI
// exposes it as `verify-paper`.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cyclozeta::reference {

using std::int64_t;

struct BasicIndexRow {
  int64_t n;
  std::vector<std::pair<int64_t, int64_t>> entries;  // (residue, ell)
};

struct RamifiedRow {
  int64_t n, p, pfree, phi_pfree, ell, m;
};

struct GaloisRow {
  int64_t n;
  int64_t phi;
  std::vector<int64_t> invariants;  // cyclic factor orders, non-increasing
  std::vector<int64_t> generators;  // published generating residues
};

// n = 20 character grid. Values are exact fourth roots of unity encoded as
// the exponent of i (0..3), or -1 for a zero entry.
struct CharacterRow {
  int64_t conductor;
  std::array<int, 20> values;  // columns k = 1..20
};

// Footer of the same grid: (ell, m) per column, 0 meaning blank.
struct CharacterFooter {
  std::array<int64_t, 20> ell;
  std::array<int64_t, 20> m;
};

struct SeriesRow {
  int64_t n;
  std::vector<std::pair<int64_t, int64_t>> terms;  // (k, a_n(k)), k >= 2
};

struct ResidueRow {
  int64_t n;
  double regulator;
  double alpha;
};

const std::vector<BasicIndexRow>& basic_index_rows();
const std::vector<RamifiedRow>& ramified_rows();
const std::vector<GaloisRow>& galois_rows();
const std::vector<CharacterRow>& character_rows_n20();
const CharacterFooter& character_footer_n20();
const std::vector<SeriesRow>& series_rows();
const std::vector<ResidueRow>& residue_rows();

struct CheckResult {
  std::string table;
  bool pass;
  std::string detail;  // empty when passing, first mismatch otherwise
};

CheckResult check_basic_index_table();
CheckResult check_ramified_table();
CheckResult check_galois_table();
CheckResult check_character_table_n20();
CheckResult check_series_table();
CheckResult check_residue_table();

// All six checks in the order above.
std::vector<CheckResult> verify_all();

}  // namespace cyclozeta::reference
