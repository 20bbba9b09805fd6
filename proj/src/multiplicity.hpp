/*
 * Copyright 2026 the spindiff authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SPINDIFF_MULTIPLICITY_HPP
#define SPINDIFF_MULTIPLICITY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "half_int.hpp"

namespace spindiff {

/// Exact degeneracies nu(j,N;S) of total spin j for N coupled spin-S particles.
///
/// Admissible j run from j_min (0 or 1/2, fixed by the parity of 2NS) up to
/// NS in unit steps. Counts are arbitrary-precision integers: (2S+1)^N
/// overflows 64 bits around N ~ 40 already for S = 1/2.
class DegeneracyTable {
public:
  DegeneracyTable(HalfInt spin, long n_particles, std::vector<mpz_class> counts);

  HalfInt spin() const { return spin_; }
  long n_particles() const { return n_; }

  HalfInt j_min() const { return HalfInt(two_j_min_); }
  HalfInt j_max() const { return HalfInt(spin_.twice() * n_); }

  /// Stored count for total spin j; zero off the admissible grid
  /// (out of range or wrong parity).
  const mpz_class& nu(HalfInt j) const;

  /// Sum_j (2j+1) nu(j,N;S).  Equals (2S+1)^N for a consistent table.
  mpz_class dimension_sum() const;

  /// (2S+1)^N, the dimension of the N-fold product space.
  mpz_class hilbert_dimension() const;

  bool sum_rule_holds() const { return dimension_sum() == hilbert_dimension(); }

  std::size_t size() const { return counts_.size(); }
  HalfInt j_at(std::size_t i) const { return HalfInt(two_j_min_ + 2 * static_cast<long>(i)); }
  const mpz_class& count_at(std::size_t i) const { return counts_[i]; }

  /// CSV export, header "two_j,count", one row per admissible j.
  std::string to_csv() const;

private:
  HalfInt spin_;
  long n_;
  long two_j_min_;
  std::vector<mpz_class> counts_;  // indexed by (2j - 2j_min)/2

  static const mpz_class zero_;
};

/// Builds nu(j,N;S) by dynamic programming on the coupling recurrence
/// nu(j,N+1;S) = sum_{j'=|j-S|}^{j+S} nu(j',N;S), starting from the single
/// particle (nu(S,1;S) = 1). Each step is evaluated with a running
/// prefix-sum array, so the whole build costs O(N^2 S) bigint additions.
///
/// Throws std::invalid_argument for N < 1 or 2S < 1.
DegeneracyTable degeneracy_table(HalfInt spin, long n_particles);

/// One recurrence step: the table for N+1 particles from the table for N.
DegeneracyTable coupling_step(const DegeneracyTable& table);

/// Session cache of tables keyed by (2S, N). Tables are immutable, so the
/// shared_ptr values may be used concurrently; the cache itself is locked.
class TableCache {
public:
  std::shared_ptr<const DegeneracyTable> get(HalfInt spin, long n_particles);

private:
  std::mutex mutex_;
  std::map<std::pair<long, long>, std::shared_ptr<const DegeneracyTable>> cache_;
};

}  // namespace spindiff

#endif
