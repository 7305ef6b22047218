#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclozeta/reference_tables.hpp"

using namespace cyclozeta;

TEST_CASE("reference data covers all 29 moduli") {
  CHECK(reference::basic_index_rows().size() == 29);
  CHECK(reference::galois_rows().size() == 29);
  CHECK(reference::series_rows().size() == 29);
  CHECK(reference::ramified_rows().size() == 46);
  CHECK(reference::character_rows_n20().size() == 8);
  CHECK(reference::residue_rows().size() == 16);
  for (const auto& row : reference::series_rows()) {
    CHECK(row.terms.size() >= 15);
  }
}

TEST_CASE("every table check passes") {
  for (const auto& result : reference::verify_all()) {
    CAPTURE(result.table);
    CAPTURE(result.detail);
    CHECK(result.pass);
  }
}
