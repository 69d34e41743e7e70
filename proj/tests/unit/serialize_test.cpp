#include "doctest.h"

#include "commprob/serialize.hpp"
#include "commprob/spectrum.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

using namespace commprob;

TEST_CASE("spectrum snapshots survive a json round trip") {
  const auto entries = corpus(16);
  const std::string text = spectrum_to_json(entries);
  const auto back = spectrum_from_json(text);
  REQUIRE(back.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(back[i].value == entries[i].value);
    CHECK(back[i].witness == entries[i].witness);
    CHECK(back[i].order == entries[i].order);
  }
}

TEST_CASE("spectrum json parses bare value arrays") {
  const auto back = spectrum_from_json(R"(["5/8", "1/2", "17/32"])");
  REQUIRE(back.size() == 3);
  CHECK(back[0].value == Rational(5, 8));
  CHECK(back[1].value == Rational(1, 2));
  CHECK(back[2].witness == "");
  CHECK(back[2].order == 0);
}

TEST_CASE("malformed spectrum json is rejected with invalid_argument") {
  CHECK_THROWS_AS(spectrum_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_from_json("[1.5]"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_from_json(R"([{"witness": "D4"}])"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_from_json(R"([{"value": 0.625}])"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_from_json(R"(["5/0"])"), std::invalid_argument);
}

TEST_CASE("spectrum csv stays exact and quotes per RFC 4180") {
  const std::vector<SpectrumEntry> entries = {{Rational(5, 8), "D4", 8},
                                              {Rational(1, 2), "weird,name", 6}};
  const std::string csv = spectrum_to_csv(entries);
  CHECK(csv == "value,witness,order\n5/8,D4,8\n1/2,\"weird,name\",6\n");
}

TEST_CASE("rationals round trip through json") {
  const std::vector<Rational> values = {Rational(0), Rational(5, 8), Rational(1, 3)};
  const auto back = rationals_from_json(rationals_to_json(values));
  CHECK(back == values);
  CHECK_THROWS_AS(rationals_from_json("deliberately broken"), std::invalid_argument);
}

TEST_CASE("csv_escape quotes only when needed") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("5/8") == "5/8");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
  CHECK(csv_escape("") == "");
}

TEST_CASE("text file io round trips and reports missing files") {
  const std::string path = "serialize_test_tmp.txt";
  const std::string payload = "first line\nsecond ≈ line\n";
  write_text_file(path, payload);
  CHECK(read_text_file(path) == payload);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("definitely/not/here.txt"), std::runtime_error);
}
