#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace intdist {

// Count vector indexed by multiplicity i. Used for line intersection
// counts (u_i), polynomial intersection counts (v_i) and multiplicity
// rows (M_i). Only nonzero entries are significant.
class Distribution {
 public:
  Distribution() = default;
  explicit Distribution(std::int64_t total_mass) : total_mass_(total_mass) {}

  void add(std::size_t i, std::int64_t n = 1);

  std::int64_t operator[](std::size_t i) const { return i < counts_.size() ? counts_[i] : 0; }

  std::int64_t total_mass() const { return total_mass_; }
  void set_total_mass(std::int64_t m) { total_mass_ = m; }

  // Largest index with a nonzero count, or -1 when empty.
  std::int64_t max_index() const;

  std::int64_t sum() const;
  // sum of i * n_i
  std::int64_t first_moment() const;
  // sum of i (i - 1) * n_i
  std::int64_t second_factorial_moment() const;

  bool has_negative() const;
  bool conserves_mass() const { return sum() == total_mass_; }

  std::vector<std::pair<std::size_t, std::int64_t>> nonzero() const;

  // Entries as "(i:n)" pairs, nonzero only, e.g. "0:10 1:6 2:15".
  std::string to_string() const;

  Distribution& operator+=(const Distribution& other);

  friend bool operator==(const Distribution& a, const Distribution& b);

 private:
  void trim();

  std::vector<std::int64_t> counts_;
  std::int64_t total_mass_ = 0;
};

}  // namespace intdist
