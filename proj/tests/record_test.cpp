#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>

#include "graphgen/cache.hpp"
#include "graphgen/errors.hpp"
#include "graphgen/record.hpp"
#include "support/temp_dir.hpp"

namespace graphgen {
namespace {

OutputRecord record_for(const GenRequest& req) {
  Engine e;
  return make_record(req, e.generate(req));
}

TEST(RecordTest, Fields) {
  const OutputRecord r = record_for(GenRequest{Family::connected, 2, 1, 1, std::nullopt});
  EXPECT_EQ(r.family, "connected");
  EXPECT_EQ(r.n, 2);
  ASSERT_FALSE(r.classes.empty());
  for (std::size_t c = 1; c < r.classes.size(); ++c) {
    EXPECT_LT(r.classes[c - 1].canonical_key, r.classes[c].canonical_key);
  }
  for (const ClassRecord& c : r.classes) {
    EXPECT_TRUE(std::is_sorted(c.edges.begin(), c.edges.end()));
    for (const auto& [u, v] : c.edges) {
      EXPECT_GE(u, 1);
      EXPECT_LE(u, v);
      EXPECT_LE(v, 2);
    }
    EXPECT_EQ(parse_rational(c.coefficient), inverse(Integer(c.symmetry_factor)));
    EXPECT_NE(c.coefficient.find('/'), std::string::npos);
  }
}

TEST(RecordTest, JsonRoundTrip) {
  for (Family f : {Family::connected, Family::simple, Family::loopless_alt}) {
    for (int s = 0; s <= 2; ++s) {
      GenRequest req{f, 3, 1, s, std::nullopt};
      const OutputRecord r = record_for(req);
      const nlohmann::json j = nlohmann::json::parse(render(r, OutputFormat::json));
      EXPECT_EQ(record_from_json(j), r);
      Engine e;
      EXPECT_EQ(record_to_sum(r), e.generate(req));
    }
  }
  GenRequest filtered{Family::loopless, 2, 2, 0, 2};
  const OutputRecord r = record_for(filtered);
  EXPECT_EQ(record_from_json(to_json(r)).min_degree, std::optional<int>(2));
}

TEST(RecordTest, FormatsCarryTheSameClasses) {
  const OutputRecord r = record_for(GenRequest{Family::connected, 3, 1, 1, std::nullopt});
  const std::string text = render(r, OutputFormat::text);
  const std::string dot = render(r, OutputFormat::dot);
  const std::regex text_re("coefficient=([0-9]+/[0-9]+) S=([0-9]+)");
  const std::regex dot_re("label=\"([0-9]+/[0-9]+) \\(S=([0-9]+)\\)\"");
  std::multiset<std::string> from_text;
  std::multiset<std::string> from_dot;
  std::multiset<std::string> from_json;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), text_re); it != std::sregex_iterator(); ++it) {
    from_text.insert((*it)[1].str() + "|" + (*it)[2].str());
  }
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), dot_re); it != std::sregex_iterator(); ++it) {
    from_dot.insert((*it)[1].str() + "|" + (*it)[2].str());
  }
  for (const ClassRecord& c : r.classes) from_json.insert(c.coefficient + "|" + std::to_string(c.symmetry_factor));
  EXPECT_EQ(from_text, from_json);
  EXPECT_EQ(from_dot, from_json);
  for (const ClassRecord& c : r.classes) {
    EXPECT_NE(text.find(c.canonical_key), std::string::npos);
  }
}

TEST(RecordTest, DotShowsLoopsParallelEdgesAndLegs) {
  OutputRecord r;
  r.n = 2;
  r.k = 2;
  r.s = 1;
  r.family = "connected";
  ClassRecord c;
  c.edges = {{1, 1}, {1, 2}, {1, 2}};
  c.legs[2] = {"x1"};
  c.coefficient = "1/4";
  c.symmetry_factor = 4;
  c.canonical_key = "00";
  r.classes.push_back(c);
  const std::string dot = render(r, OutputFormat::dot);
  EXPECT_NE(dot.find("c0_v1 -- c0_v1;"), std::string::npos);
  std::size_t edges = 0;
  for (auto at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  EXPECT_EQ(edges, 4u);
  EXPECT_NE(dot.find("c0_v2 -- c0_x1 [style=dashed]"), std::string::npos);
}

TEST(RecordTest, RejectsInconsistentRecords) {
  OutputRecord r = record_for(GenRequest{Family::connected, 2, 1, 0, std::nullopt});
  OutputRecord bad_key = r;
  bad_key.classes[0].canonical_key = bad_key.classes[1].canonical_key;
  EXPECT_THROW(record_to_sum(bad_key), std::runtime_error);
  OutputRecord bad_factor = r;
  bad_factor.classes[0].symmetry_factor = 7;
  EXPECT_THROW(record_to_sum(bad_factor), std::runtime_error);
  OutputRecord bad_edge = r;
  bad_edge.classes[0].edges[0] = {1, 9};
  EXPECT_THROW(record_to_sum(bad_edge), std::runtime_error);
}

TEST(CacheTest, StoreAndLoad) {
  testing::TempDir dir;
  DiskCache cache(dir.path() / "nested");
  const GenRequest req{Family::simple, 4, 1, 0, std::nullopt};
  EXPECT_EQ(cache.load(req), std::nullopt);
  EXPECT_TRUE(cache.entries().empty());
  const OutputRecord r = record_for(req);
  cache.store(req, r);
  EXPECT_EQ(cache.load(req), r);
  ASSERT_EQ(cache.entries().size(), 1u);
  EXPECT_EQ(cache.entries()[0].filename(), "simple_n4_k1_s0_dnone.json");
  EXPECT_NO_THROW(cache.check_all());
  EXPECT_EQ(cache.clear(), 1u);
  EXPECT_EQ(cache.load(req), std::nullopt);
}

TEST(CacheTest, RejectsCorruptionAndVersionMismatch) {
  testing::TempDir dir;
  DiskCache cache(dir.path());
  const GenRequest req{Family::connected, 2, 1, 0, std::nullopt};
  cache.store(req, record_for(req));
  const auto path = cache.path_for(req);

  std::ifstream in(path);
  nlohmann::json j = nlohmann::json::parse(in);
  in.close();

  j["header"]["format_version"] = "graphgen-cache-v0";
  std::ofstream(path) << j.dump();
  try {
    cache.load(req);
    FAIL() << "expected CacheError";
  } catch (const CacheError& e) {
    EXPECT_EQ(e.path(), path.string());
  }

  j["header"]["format_version"] = std::string(kCacheFormatVersion);
  j["header"]["n"] = 3;
  std::ofstream(path) << j.dump();
  EXPECT_THROW(cache.load(req), CacheError);

  j["header"]["n"] = 2;
  j["record"]["classes"][0]["coefficient"] = "one half";
  std::ofstream(path) << j.dump();
  EXPECT_THROW(cache.load(req), CacheError);

  std::ofstream(path) << "{ not json";
  EXPECT_THROW(cache.load(req), CacheError);
  EXPECT_THROW(cache.check_all(), CacheError);
}

TEST(CacheTest, DirectoryPrecedence) {
  EXPECT_EQ(resolve_cache_dir(std::string("flagged")), std::filesystem::path("flagged"));
  ::setenv("GRAPHGEN_CACHE_DIR", "from-env", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), std::filesystem::path("from-env"));
  EXPECT_EQ(resolve_cache_dir(std::string("flagged")), std::filesystem::path("flagged"));
  ::unsetenv("GRAPHGEN_CACHE_DIR");
  EXPECT_EQ(resolve_cache_dir(std::nullopt), std::filesystem::path(".graphgen-cache"));
}

}  // namespace
}  // namespace graphgen
