#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include <unistd.h>

#include "pealab/corpus.hpp"
#include "pealab/pmv.hpp"
#include "pealab/riesz.hpp"
#include "pealab/textio.hpp"

using namespace pealab;

TEST(Corpus, AtLeastTwelveValidFixtures) {
  const auto ts = corpus::tables();
  EXPECT_GE(ts.size(), 12u);
  std::set<std::string> names;
  for (const auto& t : ts) {
    EXPECT_TRUE(validate_axioms(t).passed()) << t.name();
    names.insert(t.name());
  }
  EXPECT_EQ(names.size(), ts.size());
}

TEST(Corpus, CoversBothSidesOfRdp2) {
  int with = 0, without = 0;
  for (const auto& t : corpus::tables()) (has_rdp2(t).holds ? with : without)++;
  EXPECT_GT(with, 0);
  EXPECT_GT(without, 0);
}

TEST(Corpus, PmvImagesValid) {
  for (const auto& p : corpus::pmv_images()) EXPECT_TRUE(validate_pmv(p).passed()) << p.name();
}

TEST(Corpus, GroupsHaveStrongUnits) {
  for (const auto& g : corpus::groups()) EXPECT_NO_THROW(check_strong_unit(g.group, g.unit)) << g.group.label();
}

TEST(Corpus, Sizes) {
  EXPECT_EQ(corpus::chain(4).size(), 5u);
  EXPECT_EQ(corpus::boolean(3).size(), 8u);
  EXPECT_EQ(corpus::mo(3).size(), 8u);
  EXPECT_EQ(corpus::horizontal_sum().size(), 5u);
}

TEST(Corpus, WriteCreatesFiles) {
  const auto dir = std::filesystem::temp_directory_path() / ("pealab-corpus-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  corpus::write(dir.string());
  std::size_t n = 0;
  for (const auto& f : corpus::files()) {
    EXPECT_TRUE(std::filesystem::exists(dir / f.name)) << f.name;
    EXPECT_EQ(read_file((dir / f.name).string()), f.content);
    ++n;
  }
  EXPECT_GE(n, 12u);
  std::filesystem::remove_all(dir);
}
