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

#include "multiplicity.hpp"

#include <sstream>
#include <stdexcept>

namespace spindiff {

const mpz_class DegeneracyTable::zero_ = 0;

DegeneracyTable::DegeneracyTable(HalfInt spin, long n_particles, std::vector<mpz_class> counts)
    : spin_(spin), n_(n_particles), counts_(std::move(counts)) {
  // 2j has the parity of 2NS; j_min is 0 or 1/2 accordingly.
  two_j_min_ = (spin_.twice() * n_) % 2;
}

const mpz_class& DegeneracyTable::nu(HalfInt j) const {
  long two_j = j.twice();
  if (two_j < two_j_min_ || two_j > spin_.twice() * n_) return zero_;
  if ((two_j - two_j_min_) % 2 != 0) return zero_;  // parity mismatch
  return counts_[static_cast<std::size_t>((two_j - two_j_min_) / 2)];
}

mpz_class DegeneracyTable::dimension_sum() const {
  mpz_class sum = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    long two_j = two_j_min_ + 2 * static_cast<long>(i);
    sum += (two_j + 1) * counts_[i];
  }
  return sum;
}

mpz_class DegeneracyTable::hilbert_dimension() const {
  mpz_class dim;
  mpz_ui_pow_ui(dim.get_mpz_t(), static_cast<unsigned long>(spin_.twice() + 1),
                static_cast<unsigned long>(n_));
  return dim;
}

std::string DegeneracyTable::to_csv() const {
  std::ostringstream out;
  out << "two_j,count\n";
  for (std::size_t i = 0; i < counts_.size(); ++i)
    out << (two_j_min_ + 2 * static_cast<long>(i)) << "," << counts_[i].get_str() << "\n";
  return out.str();
}

namespace {

// Window sum over j' in [|j-S|, min(j+S, NS)] via prefix sums of the N-table.
std::vector<mpz_class> advance_counts(const std::vector<mpz_class>& counts, long two_j_min,
                                      long two_s, long n) {
  long two_j_max = two_s * n;
  long next_two_j_min = (two_s * (n + 1)) % 2;
  long next_two_j_max = two_s * (n + 1);
  std::size_t next_size = static_cast<std::size_t>((next_two_j_max - next_two_j_min) / 2 + 1);

  // prefix[k] = sum of the first k stored counts
  std::vector<mpz_class> prefix(counts.size() + 1);
  prefix[0] = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) prefix[i + 1] = prefix[i] + counts[i];

  auto index_of = [&](long two_j) { return (two_j - two_j_min) / 2; };

  std::vector<mpz_class> next(next_size);
  for (std::size_t i = 0; i < next_size; ++i) {
    long two_j = next_two_j_min + 2 * static_cast<long>(i);
    // window folds at zero: lower limit is |j - S|
    long lo = std::labs(two_j - two_s);
    long hi = std::min(two_j + two_s, two_j_max);
    if (lo > two_j_max) continue;
    next[i] = prefix[index_of(hi) + 1] - prefix[index_of(lo)];
  }
  return next;
}

}  // namespace

DegeneracyTable degeneracy_table(HalfInt spin, long n_particles) {
  if (spin.twice() < 1) throw std::invalid_argument("spin must satisfy 2S >= 1");
  if (n_particles < 1) throw std::invalid_argument("particle number must be >= 1");

  // N = 1: the single spin-S multiplet
  std::vector<mpz_class> counts(1, mpz_class(1));
  long two_j_min = spin.twice();
  for (long n = 1; n < n_particles; ++n) {
    counts = advance_counts(counts, two_j_min, spin.twice(), n);
    two_j_min = (spin.twice() * (n + 1)) % 2;
  }
  return DegeneracyTable(spin, n_particles, std::move(counts));
}

DegeneracyTable coupling_step(const DegeneracyTable& table) {
  std::vector<mpz_class> counts(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) counts[i] = table.count_at(i);
  auto next = advance_counts(counts, table.j_min().twice(), table.spin().twice(),
                             table.n_particles());
  return DegeneracyTable(table.spin(), table.n_particles() + 1, std::move(next));
}

std::shared_ptr<const DegeneracyTable> TableCache::get(HalfInt spin, long n_particles) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(spin.twice(), n_particles);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  // Extend from the largest cached table of the same spin if one exists.
  std::shared_ptr<const DegeneracyTable> base;
  for (auto rit = cache_.rbegin(); rit != cache_.rend(); ++rit) {
    if (rit->first.first == spin.twice() && rit->first.second < n_particles) {
      base = rit->second;
      break;
    }
  }
  std::shared_ptr<const DegeneracyTable> result;
  if (base) {
    DegeneracyTable t = *base;
    while (t.n_particles() < n_particles) t = coupling_step(t);
    result = std::make_shared<const DegeneracyTable>(std::move(t));
  } else {
    result = std::make_shared<const DegeneracyTable>(degeneracy_table(spin, n_particles));
  }
  cache_.emplace(key, result);
  return result;
}

}  // namespace spindiff
