// Shared helpers for the unit tests.

#ifndef SEMICHAIN_TESTS_TEST_MAIN_HPP_
#define SEMICHAIN_TESTS_TEST_MAIN_HPP_

#include <cstddef>  // for size_t
#include <random>   // for mt19937
#include <vector>   // for vector

#include "catch_amalgamated.hpp"

#include "semichain/cayley-table.hpp"
#include "semichain/element-set.hpp"
#include "semichain/families.hpp"
#include "semichain/greens.hpp"

#define SEMICHAIN_TEST_CASE(classname, nr, msg, tags) \
  TEST_CASE(classname " " nr ": " msg, tags)

namespace semichain {
  namespace test {

    inline CayleyTable make(char const* spec) {
      return build_family(parse_family(spec));
    }

    inline CayleyTable from_rows(std::vector<std::vector<size_t>> const& rows) {
      std::vector<CayleyTable::value_type> flat;
      for (auto const& r : rows) {
        for (auto x : r) {
          flat.push_back(static_cast<CayleyTable::value_type>(x));
        }
      }
      return validate_table(rows.size(), std::move(flat));
    }

    // The quaternion group: element 4s + u is (-1)^s times 1, i, j, k for
    // u = 0, 1, 2, 3.
    inline CayleyTable quaternion_group() {
      // unit products u * v = sign * w
      int const sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
      int const unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      std::vector<std::vector<size_t>> rows(8, std::vector<size_t>(8));
      for (size_t a = 0; a < 8; ++a) {
        for (size_t b = 0; b < 8; ++b) {
          size_t const u = a % 4, v = b % 4;
          size_t const s = (a / 4 + b / 4 + sign[u][v]) % 2;
          rows[a][b]     = 4 * s + unit[u][v];
        }
      }
      return from_rows(rows);
    }

    // The subsemigroup of T_n generated by some random maps, reindexed.
    inline CayleyTable random_subsemigroup(CayleyTable const& Tn,
                                           size_t             generators,
                                           std::mt19937&      rng) {
      std::uniform_int_distribution<size_t> pick(0, Tn.size() - 1);
      ElementSet                            seed(Tn.size());
      for (size_t i = 0; i < generators; ++i) {
        seed.insert(pick(rng));
      }
      return subtable(Tn, closure(Tn, seed));
    }

  }  // namespace test
}  // namespace semichain

#endif  // SEMICHAIN_TESTS_TEST_MAIN_HPP_
