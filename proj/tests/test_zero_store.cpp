#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetareg/zero_table.hpp"

using namespace zetareg;
namespace fs = std::filesystem;

namespace {

std::string data_file(const char* rel) {
  return std::string(ZETAREG_DATA_DIR) + "/" + rel;
}

std::string write_temp(const char* name, const std::string& body) {
  const auto p = fs::temp_directory_path() / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << body;
  return p.string();
}

// the message of whatever std::exception `fn` throws ("" when it doesn't)
template <typename Fn>
std::string thrown_message(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("text loader handles comments, blanks and inline annotations") {
  const auto p = write_temp("zrt_basic.txt",
                            "# ordinates below\n"
                            "\n"
                            "14.134725142\t\n"
                            "21.022039639 # first above 20\n"
                            "   25.010857580\n");
  const ZeroTable t = load_zero_table(p);
  REQUIRE(t.size() == 3);
  CHECK(t.front() == 14.134725142);
  CHECK(t[1] == 21.022039639);
  CHECK(t.back() == 25.010857580);
  CHECK(t.decimal_digits() == 9);
  CHECK(t.source() == p);
}

TEST_CASE("CRLF input parses identically to LF input") {
  const auto lf = write_temp("zrt_lf.txt", "14.1347\n21.0220\n");
  const auto crlf = write_temp("zrt_crlf.txt", "14.1347\r\n21.0220\r\n");
  const ZeroTable a = load_zero_table(lf);
  const ZeroTable b = load_zero_table(crlf);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("loader sorts unsorted input and applies the limit afterwards") {
  const auto p = write_temp("zrt_unsorted.txt", "25.0\n14.2\n21.5\n");
  const ZeroTable all = load_zero_table(p);
  REQUIRE(all.size() == 3);
  CHECK(all.front() == 14.2);
  CHECK(all.back() == 25.0);

  const ZeroTable two = load_zero_table(p, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == 14.2);
  CHECK(two[1] == 21.5);
}

TEST_CASE("parse failures name the file and line") {
  const auto p = write_temp("zrt_bad.txt", "14.1\nbogus\n");
  const std::string msg = thrown_message([&] { load_zero_table(p); });
  CHECK(msg.find(":2:") != std::string::npos);
  CHECK(msg.find("bogus") != std::string::npos);
}

TEST_CASE("out-of-range and duplicate ordinates are rejected") {
  CHECK_THROWS_AS(load_zero_table(write_temp("zrt_neg.txt", "-3.0\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(load_zero_table(write_temp("zrt_zero.txt", "0\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(load_zero_table(write_temp("zrt_inf.txt", "inf\n")),
                  std::runtime_error);
  const std::string dup = thrown_message(
      [&] { load_zero_table(write_temp("zrt_dup.txt", "14.5\n14.5\n")); });
  CHECK(dup.find("duplicate") != std::string::npos);
}

TEST_CASE("a file with no ordinates is an error") {
  const auto p = write_temp("zrt_empty.txt", "# nothing here\n\n");
  const std::string msg = thrown_message([&] { load_zero_table(p); });
  CHECK(msg.find("no ordinates") != std::string::npos);
}

TEST_CASE("cache round-trip preserves every bit") {
  const ZeroTable text = load_zero_table(data_file("zeros_1k.txt"));
  const auto cache_path =
      (fs::temp_directory_path() / "zrt_roundtrip.zrt").string();
  write_zero_cache(text, cache_path);
  const ZeroTable back = load_zero_table(cache_path);

  REQUIRE(back.size() == text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // bit-level equality, not just ==
    double a = text[i], b = back[i];
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
  CHECK(back.decimal_digits() == 12);
  CHECK(back.source() == cache_path);

  const ZeroTable ten = load_zero_table(cache_path, 10);
  REQUIRE(ten.size() == 10);
  CHECK(ten.front() == text.front());
}

TEST_CASE("truncated cache payloads are detected") {
  const ZeroTable text = load_zero_table(data_file("zeros_1k.txt"), 5);
  const auto p = (fs::temp_directory_path() / "zrt_trunc.zrt").string();
  write_zero_cache(text, p);
  // keep the header and three of the five payload entries
  fs::resize_file(p, 4 + 8 + 3 * 8 + 4);
  const std::string msg = thrown_message([&] { load_zero_table(p); });
  CHECK(msg.find("truncated") != std::string::npos);
}

TEST_CASE("files without the cache magic fall back to the text parser") {
  const auto p = write_temp("zrt_nomagic.txt", "ZQT1garbage\n");
  const std::string msg = thrown_message([&] { load_zero_table(p); });
  CHECK(msg.find("unparsable") != std::string::npos);
}

TEST_CASE("prefix takes the first n ordinates") {
  const ZeroTable t = load_zero_table(data_file("zeros_1k.txt"));
  const ZeroTable p = t.prefix(100);
  REQUIRE(p.size() == 100);
  CHECK(p.front() == t.front());
  CHECK(p.back() == t[99]);
  CHECK(t.prefix(1 << 20).size() == t.size());
}

TEST_CASE("counting estimate matches known zero counts") {
  // 29 zeros lie below height 100
  CHECK(counting_estimate(100.0) == doctest::Approx(29.0).epsilon(1e-3));
  CHECK(counting_estimate(200.0) > counting_estimate(100.0));
  CHECK(counting_estimate(17.1) > 0.0);
  // defined only above 2 pi e where the leading term turns increasing
  CHECK_THROWS_AS(counting_estimate(17.0), std::domain_error);
  CHECK_THROWS_AS(counting_estimate(-5.0), std::domain_error);
}

TEST_CASE("bundled tables pass validation") {
  const ZeroTable small = load_zero_table(data_file("zeros_1k.txt"));
  const ValidationReport rs = validate(small);
  CHECK(rs.monotone_ok);
  CHECK(rs.first_zero_ok);
  CHECK(rs.duplicate_count == 0);
  CHECK(rs.max_counting_deviation <= 2.0);
  CHECK(rs.passed());

  const ZeroTable big = load_zero_table(data_file("zeros_100k.zrt"));
  REQUIRE(big.size() == 100000);
  const ValidationReport rb = validate(big);
  CHECK(rb.monotone_ok);
  CHECK(rb.first_zero_ok);
  CHECK(rb.duplicate_count == 0);
  CHECK(rb.max_counting_deviation <= 2.0);
}

TEST_CASE("validation flags disorder and near-duplicates") {
  Eigen::VectorXd unsorted(3);
  unsorted << 21.0, 14.134, 25.0;
  const ValidationReport bad = validate(ZeroTable(unsorted, "synthetic", 3));
  CHECK_FALSE(bad.monotone_ok);
  CHECK_FALSE(bad.passed());

  // two ordinates 1e-13 apart, below the print resolution of 12 digits
  Eigen::VectorXd close(4);
  close << 14.1347251417, 14.1347251417 + 1e-13, 21.0220396388, 25.0108575801;
  const ValidationReport dup = validate(ZeroTable(close, "synthetic", 12));
  CHECK(dup.duplicate_count == 1);
  CHECK_FALSE(dup.passed());
}
