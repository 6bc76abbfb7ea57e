#include "incflow/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace incflow {

Rational rational_add_unit_fraction(Rational r, long long denom) {
  if (denom <= 0) throw std::invalid_argument("denominator must be positive");
  // r + 1/denom
  long long g = std::gcd(r.den, denom);
  long long scale = denom / g;
  Rational out{r.num * scale + r.den / g, r.den * scale};
  long long h = std::gcd(out.num < 0 ? -out.num : out.num, out.den);
  if (h > 1) {
    out.num /= h;
    out.den /= h;
  }
  return out;
}

void CumulativeIndex::insert(int id, double w) {
  if (exact_rational_)
    throw std::logic_error("rational mode requires unit-fraction inserts");
  if (!(w > 0.0)) throw std::invalid_argument("weight must be positive");
  ids_.push_back(id);
  prefix_.push_back(total_);
  total_ += w;
}

void CumulativeIndex::insert_unit_fraction(int id, long long denom) {
  if (denom <= 0) throw std::invalid_argument("denominator must be positive");
  ids_.push_back(id);
  if (exact_rational_) {
    prefix_exact_.push_back(total_exact_);
    total_exact_ = rational_add_unit_fraction(total_exact_, denom);
    prefix_.push_back(static_cast<double>(prefix_exact_.back().num) /
                      static_cast<double>(prefix_exact_.back().den));
    total_ = static_cast<double>(total_exact_.num) /
             static_cast<double>(total_exact_.den);
  } else {
    prefix_.push_back(total_);
    total_ += 1.0 / static_cast<double>(denom);
  }
}

int CumulativeIndex::search(double z) const {
  if (ids_.empty()) throw std::logic_error("search on empty table");
  // largest i with prefix[i] <= z; z below prefix[0] = 0 cannot occur for
  // z >= 0 but clamp anyway
  auto it = std::upper_bound(prefix_.begin(), prefix_.end(), z);
  size_t i = it == prefix_.begin() ? 0 : static_cast<size_t>(it - prefix_.begin()) - 1;
  return ids_[i];
}

double CumulativeIndex::weight(int i) const {
  const size_t k = static_cast<size_t>(i);
  const double next = k + 1 < prefix_.size() ? prefix_[k + 1] : total_;
  return next - prefix_[k];
}

Rational CumulativeIndex::prefix_rational(int i) const {
  if (!exact_rational_) throw std::logic_error("not in exact-rational mode");
  return prefix_exact_[static_cast<size_t>(i)];
}

Rational CumulativeIndex::total_rational() const {
  if (!exact_rational_) throw std::logic_error("not in exact-rational mode");
  return total_exact_;
}

int WeightedSampler::insert(VertexId u, VertexId v) {
  const int index = packing_.insert(u, v);
  table_.insert_unit_fraction(packing_.edge_count() - 1, index);
  return index;
}

EdgeId WeightedSampler::sample(std::mt19937_64& rng) const {
  return table_.sample(rng);
}

}  // namespace incflow
