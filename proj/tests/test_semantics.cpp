#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "lexintel/error.hpp"
#include "lexintel/io.hpp"
#include "lexintel/semantics.hpp"
#include "test_support.hpp"
#include "two_blobs.hpp"

using namespace lexintel;
using testutil::TempDir;

namespace {

const LanguageId es("es"), it("it"), ro("ro");

using Row = std::pair<std::string, std::vector<float>>;

EmbeddingStore store(LanguageId lang, std::vector<Row> rows) {
  const std::size_t dim = rows.empty() ? 2 : rows.front().second.size();
  return EmbeddingStore::from_rows(lang, dim, rows);
}

ClusterSet centers(std::vector<std::vector<double>> c) {
  ClusterSet set;
  set.sizes.assign(c.size(), 1);
  set.centers = std::move(c);
  return set;
}

std::vector<std::vector<float>> copies(std::vector<float> v, std::size_t n) { return {n, v}; }

}  // namespace

TEST(EmbeddingStore, LoadsWord2VecText) {
  TempDir dir;
  const auto path = dir.write("v.vec", "2 4\nluna 0.1 0.2 0.3 0.4\nlună 1 0 0 0\n");
  const auto s = EmbeddingStore::load(path, ro);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_FLOAT_EQ(s.vector(1)[0], 1.0f);
  EXPECT_EQ(s.word(0), "luna");
}

TEST(EmbeddingStore, DimensionMismatch) {
  TempDir dir;
  try {
    EmbeddingStore::load(dir.write("v.vec", "2 4\nluna 0.1 0.2 0.3 0.4\nsoare 0.1 0.2 0.3\n"), ro);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(EmbeddingStore::load(dir.write("w.vec", "3 2\na 1 0\nb 0 1\n"), ro), Error);
  EXPECT_THROW(EmbeddingStore::load(dir.write("x.vec", "1 2\na 1 zz\n"), ro), ParseError);
  EXPECT_THROW(EmbeddingStore::load(dir / "absent.vec", ro), Error);
}

TEST(EmbeddingStore, DuplicateFirstWins) {
  TempDir dir;
  const auto s = EmbeddingStore::load(dir.write("v.vec", "3 2\nluna 1 0\nsoare 0 1\nluna 5 5\n"), ro);
  EXPECT_EQ(s.duplicates(), 1u);
  const auto r = s.resolve("luna");
  EXPECT_EQ(r.kind, Resolution::exact);
  EXPECT_FLOAT_EQ(r.vector[0], 1.0f);
}

TEST(EmbeddingStore, ResolveExact) {
  const auto s = store(es, {{"luna", {1, 2}}, {"sol", {3, 4}}});
  const auto r = s.resolve("sol");
  EXPECT_EQ(r.kind, Resolution::exact);
  EXPECT_EQ(r.word, "sol");
  EXPECT_FLOAT_EQ(r.vector[1], 4.0f);
}

TEST(EmbeddingStore, ResolveAccentStrippedKeyIsExact) {
  const auto s = store(ro, {{"pâine", {1, 0}}});
  const auto r = s.resolve("paine");
  EXPECT_EQ(r.kind, Resolution::exact);
  EXPECT_EQ(r.word, "pâine");
}

TEST(EmbeddingStore, ResolveStemFallback) {
  const auto s = store(it, {{"preparato", {1, 0}}, {"pregare", {0, 1}}});
  const auto r = s.resolve("preparare");
  EXPECT_EQ(r.kind, Resolution::fallback);
  EXPECT_EQ(r.word, "preparato");
}

TEST(EmbeddingStore, ResolveStemFallbackPrefersCloserForm) {
  const auto s = store(es, {{"lunares", {0, 1}}, {"lunas", {1, 0}}});
  const auto r = s.resolve("luna");
  ASSERT_EQ(r.kind, Resolution::fallback);
  EXPECT_EQ(r.word, "lunas");
}

TEST(EmbeddingStore, ResolvePrefixFallbackWithinThreeEdits) {
  const auto s = store(es, {{"ojotes", {1, 0}}, {"ojalateria", {0, 1}}, {"ojotazos", {1, 1}}});
  const auto r = s.resolve("ojo");
  ASSERT_EQ(r.kind, Resolution::fallback);
  EXPECT_EQ(r.word, "ojotes");
}

TEST(EmbeddingStore, ResolveMissing) {
  const auto s = store(es, {{"luna", {1, 0}}, {"sol", {0, 1}}});
  EXPECT_EQ(s.resolve("xilofono").kind, Resolution::missing);
  EXPECT_TRUE(s.resolve("xilofono").vector.empty());
  EXPECT_EQ(s.resolve("lu").kind, Resolution::missing);
}

TEST(Cosine, Examples) {
  const std::vector<double> v{0.3, -1.2, 2.0};
  EXPECT_NEAR(cosine_similarity(std::span<const double>(v), std::span<const double>(v)), 1.0, 1e-15);
  const std::vector<double> x{1, 0}, y{0, 1}, xy{1, 1};
  EXPECT_NEAR(cosine_similarity(std::span<const double>(x), std::span<const double>(y)), 0.0, 1e-15);
  EXPECT_NEAR(cosine_similarity(std::span<const double>(x), std::span<const double>(xy)), 0.7071067811865475, 1e-12);
}

TEST(Cosine, SymmetryScaleAndClamp) {
  std::mt19937 rng(2);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    std::vector<double> u(5), v(5), w(5);
    for (std::size_t k = 0; k < 5; ++k) {
      u[k] = g(rng);
      v[k] = g(rng);
      w[k] = 3.5 * u[k];
    }
    const std::span<const double> su(u), sv(v), sw(w);
    EXPECT_NEAR(raw_cosine(su, sv), raw_cosine(sv, su), 1e-15);
    EXPECT_NEAR(raw_cosine(sw, sv), raw_cosine(su, sv), 1e-12);
    const double c = cosine_similarity(su, sv);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(c, 1.0);
  }
  const std::vector<double> a{1, 0}, b{-1, 0}, zero{0, 0}, three{1, 2, 3};
  EXPECT_EQ(cosine_similarity(std::span<const double>(a), std::span<const double>(b)), 0.0);
  EXPECT_THROW(raw_cosine(std::span<const double>(a), std::span<const double>(zero)), Error);
  EXPECT_THROW(raw_cosine(std::span<const double>(a), std::span<const double>(three)), Error);
}

TEST(AffinityPropagation, SinglePoint) {
  const auto set = cluster_vectors(copies({0.5f, -2.0f}, 1));
  ASSERT_EQ(set.centers.size(), 1u);
  EXPECT_DOUBLE_EQ(set.centers[0][0], 0.5);
  EXPECT_DOUBLE_EQ(set.centers[0][1], -2.0);
}

TEST(AffinityPropagation, TwoGroupsOfCopies) {
  auto vectors = copies({1.0f, 0.0f, 0.0f}, 10);
  const auto q = copies({0.0f, 5.0f, 5.0f}, 10);
  vectors.insert(vectors.end(), q.begin(), q.end());
  const auto set = cluster_vectors(vectors);
  ASSERT_EQ(set.centers.size(), 2u);
  EXPECT_FALSE(set.fallback);
  std::set<std::vector<double>> got(set.centers.begin(), set.centers.end());
  EXPECT_TRUE(got.count({1.0, 0.0, 0.0}));
  EXPECT_TRUE(got.count({0.0, 5.0, 5.0}));
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(set.labels[i], set.labels[0]);
    EXPECT_EQ(set.labels[10 + i], set.labels[10]);
  }
  EXPECT_NE(set.labels[0], set.labels[10]);
}

TEST(AffinityPropagation, IdenticalVectors) {
  const auto set = cluster_vectors(copies({0.25f, 0.75f}, 7));
  ASSERT_EQ(set.centers.size(), 1u);
  EXPECT_DOUBLE_EQ(set.centers[0][0], 0.25);
  EXPECT_DOUBLE_EQ(set.centers[0][1], 0.75);
  EXPECT_EQ(set.sizes[0], 7u);
}

TEST(AffinityPropagation, TwoBlobsMatchReference) {
  namespace tb = testutil::two_blobs;
  std::vector<double> flat;
  for (const auto& p : tb::kPoints) flat.insert(flat.end(), p.begin(), p.end());
  const auto r = affinity_propagation(flat, 3);
  ASSERT_TRUE(r.converged);
  ASSERT_EQ(r.exemplars.size(), 2u);
  EXPECT_EQ(r.exemplars[0], tb::kExemplars[0]);
  EXPECT_EQ(r.exemplars[1], tb::kExemplars[1]);
  for (std::size_t i = 0; i < 20; ++i) EXPECT_EQ(r.labels[i], i < 10 ? 0u : 1u);
}

TEST(AffinityPropagation, Deterministic) {
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  std::vector<double> flat(60 * 4);
  for (auto& v : flat) v = g(rng);
  const auto a = affinity_propagation(flat, 4);
  const auto b = affinity_propagation(flat, 4);
  EXPECT_EQ(a.exemplars, b.exemplars);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(AffinityPropagation, RejectsEmptyInput) {
  const std::vector<std::vector<float>> none;
  EXPECT_THROW(cluster_vectors(none), Error);
}

TEST(ContextualSimilarity, Examples) {
  EXPECT_DOUBLE_EQ(contextual_similarity(centers({{0.3, 0.4}}), centers({{0.3, 0.4}})), 1.0);
  EXPECT_DOUBLE_EQ(contextual_similarity(centers({{1, 0}}), centers({{0, 1}})), 0.0);
  EXPECT_DOUBLE_EQ(contextual_similarity(centers({{1, 0}, {0, 1}}), centers({{1, 0}})), 0.5);
}

TEST(ContextualSimilarity, ClampsNegativeMean) {
  EXPECT_DOUBLE_EQ(contextual_similarity(centers({{1, 0}}), centers({{-1, 0}})), 0.0);
  // Raw cosines 1 and -1 average to 0 before clamping.
  EXPECT_DOUBLE_EQ(contextual_similarity(centers({{1, 0}, {-1, 0}}), centers({{1, 0}})), 0.0);
}

TEST(ContextualStore, LoadAndTruncate) {
  TempDir dir;
  std::string text;
  for (int i = 5; i >= 0; --i) {
    text += R"({"lang":"ro","word":"lună","sent_id":)" + std::to_string(i) + R"(,"token_index":0,"vector":[1,)" +
            std::to_string(i) + "]}\n";
  }
  text += R"({"lang":"es","word":"luna","sent_id":0,"token_index":3,"vector":[0.5,0.5]})"
          "\n";
  const auto path = dir.write("ctx.jsonl", text);
  const auto store = ContextualStore::load(path, 4);
  EXPECT_EQ(store.dim(), 2u);
  EXPECT_EQ(store.words(), 2u);
  EXPECT_EQ(store.records(), 5u);
  EXPECT_EQ(store.truncated(), 2u);
  const auto* occ = store.find(ro, "luna");
  ASSERT_NE(occ, nullptr);
  ASSERT_EQ(occ->entries.size(), 4u);
  EXPECT_EQ(occ->entries.front().sent_id, 0u);
  EXPECT_EQ(occ->entries.back().sent_id, 3u);
  EXPECT_EQ(store.find(es, "sol"), nullptr);
}

TEST(ContextualStore, Errors) {
  TempDir dir;
  const auto mismatch = dir.write("a.jsonl",
                                  R"({"lang":"es","word":"a","sent_id":0,"token_index":0,"vector":[1,2]})"
                                  "\n"
                                  R"({"lang":"es","word":"b","sent_id":0,"token_index":1,"vector":[1,2,3]})"
                                  "\n");
  try {
    ContextualStore::load(mismatch);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ContextualStore::load(dir.write("b.jsonl", "{not json}\n")), ParseError);
  EXPECT_THROW(ContextualStore::load(dir.write("c.jsonl", R"({"lang":"es","word":"a","sent_id":0})"
                                                          "\n")),
               ParseError);
}

// The contextual exporter is a separate component; its contract is checked
// against a frozen request/response pair so these tests run without it.
TEST(ExporterContract, FrozenSampleRoundTrip) {
  const auto dir = testutil::fixtures() / "exporter";
  std::vector<nlohmann::json> requests, records;
  {
    LineReader reader(dir / "requests.jsonl");
    std::string line;
    while (reader.next(line)) requests.push_back(nlohmann::json::parse(line));
  }
  {
    LineReader reader(dir / "vectors.jsonl");
    std::string line;
    while (reader.next(line)) records.push_back(nlohmann::json::parse(line));
  }
  ASSERT_EQ(records.size(), requests.size());
  const std::size_t dim = records.front()["vector"].size();
  for (std::size_t i = 0; i < records.size(); ++i) {
    EXPECT_EQ(records[i]["vector"].size(), dim);
    for (const char* key : {"lang", "word", "sent_id", "token_index"}) EXPECT_EQ(records[i][key], requests[i][key]);
  }

  const auto store = ContextualStore::load(dir / "vectors.jsonl");
  EXPECT_EQ(store.dim(), dim);
  EXPECT_EQ(store.records(), records.size());
  const auto* casa = store.find(es, "casa");
  ASSERT_NE(casa, nullptr);
  EXPECT_EQ(casa->entries.size(), 3u);
  EXPECT_FALSE(cluster_occurrences(*casa).centers.empty());
}

TEST(NearestNeighbor, PicksHighestCosine) {
  const auto src = store(es, {{"pariente", {1.0f, 0.2f}}});
  const auto dst = store(ro, {{"ruda", {0.9f, 0.25f}}, {"parinte", {0.2f, 1.0f}}, {"om", {-1.0f, 0.0f}}});
  const std::vector<std::string> candidates{"parinte", "ruda", "om", "absent"};
  const auto n = nearest_semantic_neighbor(src, "pariente", dst, candidates);
  EXPECT_EQ(n.word, "ruda");
  EXPECT_GT(n.score, 0.99);
}

TEST(NearestNeighbor, OwnTranslationAndTies) {
  const auto src = store(es, {{"luna", {1.0f, 1.0f}}});
  const auto dst = store(ro, {{"luna", {2.0f, 2.0f}}, {"astru", {3.0f, 3.0f}}});
  const std::vector<std::string> own{"luna"};
  EXPECT_EQ(nearest_semantic_neighbor(src, "luna", dst, own).word, "luna");
  const std::vector<std::string> both{"luna", "astru"};
  EXPECT_EQ(nearest_semantic_neighbor(src, "luna", dst, both).word, "astru");
  const std::vector<std::string> none{"absent"};
  EXPECT_THROW(nearest_semantic_neighbor(src, "luna", dst, none), Error);
  EXPECT_THROW(nearest_semantic_neighbor(src, "xyzzy", dst, own), Error);
}
