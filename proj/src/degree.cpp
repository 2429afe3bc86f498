#include "kgraph/degree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kgraph/error.hpp"

namespace kgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::BadSplit: return "BadSplit";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::BadDirection: return "BadDirection";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::OutsideTruncation: return "OutsideTruncation";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::ForeignId: return "ForeignId";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NotHereditary: return "NotHereditary";
    case ErrorCode::BadMarking: return "BadMarking";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::HeightExceeded: return "HeightExceeded";
    case ErrorCode::OutOfBox: return "OutOfBox";
    case ErrorCode::NoEmbedding: return "NoEmbedding";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {
void require_same_rank(const Degree& a, const Degree& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::RankMismatch,
                "degrees " + a.to_string() + " and " + b.to_string() + " have different ranks");
  }
}
}  // namespace

Degree Degree::unit(std::size_t rank, std::size_t i) {
  if (i == 0 || i > rank) {
    throw Error(ErrorCode::OutOfRange, "unit direction " + std::to_string(i) +
                                           " outside 1.." + std::to_string(rank));
  }
  Degree e(rank);
  e.coords_[i - 1] = 1;
  return e;
}

std::size_t Degree::total() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::size_t{0});
}

bool Degree::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](value_type c) { return c == 0; });
}

bool Degree::leq(const Degree& other) const {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

Degree Degree::join(const Degree& other) const {
  require_same_rank(*this, other);
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = std::max(coords_[i], other.coords_[i]);
  }
  return out;
}

Degree Degree::operator+(const Degree& other) const {
  require_same_rank(*this, other);
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] + other.coords_[i];
  return out;
}

Degree Degree::operator-(const Degree& other) const {
  if (!other.leq(*this)) {
    throw Error(ErrorCode::BadSplit, other.to_string() + " is not below " + to_string());
  }
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] - other.coords_[i];
  return out;
}

Degree Degree::concat(const Degree& other) const {
  std::vector<value_type> c = coords_;
  c.insert(c.end(), other.coords_.begin(), other.coords_.end());
  return Degree(std::move(c));
}

std::vector<std::size_t> Degree::unit_support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 1) out.push_back(i + 1);
  }
  return out;
}

std::string Degree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::vector<Degree> degrees_below(const Degree& bound) {
  std::vector<Degree> out;
  Degree p(bound.rank());
  while (true) {
    out.push_back(p);
    std::size_t i = bound.rank();
    // odometer increment, last coordinate fastest
    while (i > 0) {
      --i;
      if (p[i] < bound[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < bound.rank(); ++j) p[j] = 0;
        break;
      }
      if (i == 0) return out;
    }
    if (bound.rank() == 0) return out;
  }
}

}  // namespace kgraph
