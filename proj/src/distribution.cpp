#include "intdist/distribution.hpp"

#include <sstream>

namespace intdist {

void Distribution::add(std::size_t i, std::int64_t n) {
  if (n == 0) return;
  if (i >= counts_.size()) counts_.resize(i + 1, 0);
  counts_[i] += n;
  trim();
}

void Distribution::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

std::int64_t Distribution::max_index() const { return static_cast<std::int64_t>(counts_.size()) - 1; }

std::int64_t Distribution::sum() const {
  std::int64_t s = 0;
  for (auto n : counts_) s += n;
  return s;
}

std::int64_t Distribution::first_moment() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += static_cast<std::int64_t>(i) * counts_[i];
  return s;
}

std::int64_t Distribution::second_factorial_moment() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    s += k * (k - 1) * counts_[i];
  }
  return s;
}

bool Distribution::has_negative() const {
  for (auto n : counts_) {
    if (n < 0) return true;
  }
  return false;
}

std::vector<std::pair<std::size_t, std::int64_t>> Distribution::nonzero() const {
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) out.emplace_back(i, counts_[i]);
  }
  return out;
}

std::string Distribution::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto [i, n] : nonzero()) {
    if (!first) os << ' ';
    os << i << ':' << n;
    first = false;
  }
  return os.str();
}

Distribution& Distribution::operator+=(const Distribution& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
  total_mass_ += other.total_mass_;
  trim();
  return *this;
}

bool operator==(const Distribution& a, const Distribution& b) {
  return a.total_mass_ == b.total_mass_ && a.counts_ == b.counts_;
}

}  // namespace intdist
