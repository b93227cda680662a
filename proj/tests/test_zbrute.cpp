#include "chevkit/zbrute.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace chevkit;

namespace {

// z-classes straight from the definition: x ~ y when Z(x) and Z(y) are
// conjugate, checked by conjugating whole centralizers by every element.
size_t naive_z_count(const MatrixGroup& g) {
  const size_t n = g.order();
  std::vector<uint32_t> inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = g.find(g.inverse(g.element(i)));
  auto conj = [&](size_t h, size_t x) { return g.find(g.mul(g.mul(g.element(h), g.element(x)), g.element(inv[h]))); };
  std::vector<std::set<uint32_t>> cent(n);
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y)
      if (g.commute(g.element(x), g.element(y))) cent[x].insert(uint32_t(y));
  std::vector<std::set<uint32_t>> reps;
  std::vector<bool> seen(n, false);
  for (size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    for (size_t h = 0; h < n; ++h) seen[conj(h, x)] = true;
    bool placed = false;
    for (const auto& r : reps) {
      if (r.size() != cent[x].size()) continue;
      for (size_t h = 0; h < n && !placed; ++h) {
        std::set<uint32_t> moved;
        for (uint32_t y : cent[x]) moved.insert(conj(h, y));
        placed = moved == r;
      }
      if (placed) break;
    }
    if (!placed) reps.push_back(cent[x]);
  }
  return reps.size();
}

size_t naive_class_count(const MatrixGroup& g) {
  std::vector<bool> seen(g.order(), false);
  size_t count = 0;
  for (size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (size_t h = 0; h < g.order(); ++h)
      seen[g.find(g.mul(g.mul(g.element(h), g.element(x)), g.inverse(g.element(h))))] = true;
  }
  return count;
}

}  // namespace

TEST(ClassicalOrder, Formulas) {
  EXPECT_EQ(classical_order(GroupKind::gl(2), 3), 48);
  EXPECT_EQ(classical_order(GroupKind::gl(3), 2), 168);
  EXPECT_EQ(classical_order(GroupKind::sl(2), 5), 120);
  EXPECT_EQ(classical_order(GroupKind::unitary(2), 2), 18);
  EXPECT_EQ(classical_order(GroupKind::unitary(3), 3), 24192);
  EXPECT_EQ(classical_order(GroupKind::unitary(3), 4), 312000);
  EXPECT_EQ(classical_order(GroupKind::sp(2), 2), 720);
}

TEST(BuildGroup, OrdersMatchFormulas) {
  for (const auto& [kind, q] : std::vector<std::pair<GroupKind, uint32_t>>{{GroupKind::gl(2), 3},
                                                                           {GroupKind::gl(3), 2},
                                                                           {GroupKind::sl(2), 5},
                                                                           {GroupKind::unitary(2), 3},
                                                                           {GroupKind::unitary(3), 2},
                                                                           {GroupKind::sp(2), 2}}) {
    const auto g = build_group(kind, q);
    EXPECT_EQ(BigInt(g.order()), classical_order(kind, q)) << kind.name() << " q=" << q;
  }
}

TEST(BuildGroup, CapIsEnforced) {
  BruteOptions opt;
  opt.cap = 1000;
  EXPECT_THROW(build_group(GroupKind::gl(3), 3, opt), ResourceCap);
  opt.cap = uint64_t(1) << 62;
  EXPECT_THROW(build_group(GroupKind::gl(6), 2, opt), std::invalid_argument);
}

TEST(Classes, AgreeWithNaiveOrbits) {
  for (const auto& [kind, q] : std::vector<std::pair<GroupKind, uint32_t>>{
           {GroupKind::gl(2), 2}, {GroupKind::gl(2), 3}, {GroupKind::unitary(2), 2}, {GroupKind::unitary(2), 3},
           {GroupKind::gl(3), 2}, {GroupKind::sl(2), 5}}) {
    const auto g = build_group(kind, q);
    const auto cp = conjugacy_classes(g);
    EXPECT_EQ(cp.classes.size(), naive_class_count(g)) << kind.name() << " q=" << q;
    uint64_t total = 0;
    for (const auto& c : cp.classes) {
      total += c.size;
      EXPECT_EQ(c.size * c.centralizer_order, g.order());
      EXPECT_EQ(centralizer(g, c.rep).size(), c.centralizer_order);
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(ZClasses, AgreeWithNaiveDefinition) {
  for (const auto& [kind, q] : std::vector<std::pair<GroupKind, uint32_t>>{
           {GroupKind::gl(2), 2}, {GroupKind::gl(2), 3}, {GroupKind::unitary(2), 2}, {GroupKind::unitary(2), 3},
           {GroupKind::gl(3), 2}, {GroupKind::sl(2), 5}, {GroupKind::sl(2), 7}}) {
    const auto g = build_group(kind, q);
    EXPECT_EQ(z_classes(g).z_count(), naive_z_count(g)) << kind.name() << " q=" << q;
  }
}

TEST(ZClasses, SmallGeneralLinearAndUnitary) {
  const std::vector<size_t> expect{3, 4, 4, 4};
  for (uint32_t q = 2; q <= 5; ++q) {
    EXPECT_EQ(z_classes(build_group(GroupKind::gl(2), q)).z_count(), expect[q - 2]) << "GL(2," << q << ")";
    EXPECT_EQ(z_classes(build_group(GroupKind::unitary(2), q)).z_count(), expect[q - 2]) << "U(2," << q << ")";
  }
  EXPECT_EQ(z_classes(build_group(GroupKind::gl(3), 2)).z_count(), 5u);
  EXPECT_EQ(z_classes(build_group(GroupKind::unitary(3), 2)).z_count(), 7u);
  EXPECT_EQ(z_classes(build_group(GroupKind::gl(3), 3)).z_count(), 7u);
  EXPECT_EQ(z_classes(build_group(GroupKind::unitary(3), 3)).z_count(), 8u);
}

TEST(ZClasses, ParallelMatchesSerial) {
  const auto g = build_group(GroupKind::gl(3), 3);
  const auto serial = z_classes(g, 1), parallel = z_classes(g, 4);
  ASSERT_EQ(serial.z_count(), parallel.z_count());
  for (size_t k = 0; k < serial.clusters.size(); ++k) {
    EXPECT_EQ(serial.clusters[k].classes, parallel.clusters[k].classes);
    EXPECT_EQ(serial.clusters[k].centralizer_order, parallel.clusters[k].centralizer_order);
  }
}

TEST(ZClasses, ClustersPartitionClasses) {
  const auto g = build_group(GroupKind::unitary(3), 2);
  const auto r = z_classes(g);
  std::vector<size_t> all;
  for (const auto& c : r.clusters) {
    for (size_t k : c.classes) {
      all.push_back(k);
      EXPECT_EQ(r.classes[k].centralizer_order, c.centralizer_order);
    }
  }
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), r.class_count());
  for (size_t k = 0; k < all.size(); ++k) EXPECT_EQ(all[k], k);
}
