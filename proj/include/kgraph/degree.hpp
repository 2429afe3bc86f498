#ifndef KGRAPH_DEGREE_HPP
#define KGRAPH_DEGREE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kgraph {

/// An element of N^k. The rank is the vector length; N^0 has exactly one
/// element, the empty vector.
class Degree {
 public:
  using value_type = std::uint32_t;

  Degree() = default;
  explicit Degree(std::size_t rank) : coords_(rank, 0) {}
  explicit Degree(std::vector<value_type> coords) : coords_(std::move(coords)) {}
  Degree(std::initializer_list<value_type> coords) : coords_(coords) {}

  static Degree zero(std::size_t rank) { return Degree(rank); }
  static Degree ones(std::size_t rank) { return Degree(std::vector<value_type>(rank, 1)); }
  /// e_i with i in 1..rank.
  static Degree unit(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<value_type>& coords() const noexcept { return coords_; }

  /// |m| = sum of coordinates.
  std::size_t total() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise order.
  bool leq(const Degree& other) const;
  Degree join(const Degree& other) const;

  Degree operator+(const Degree& other) const;
  /// Requires other <= *this.
  Degree operator-(const Degree& other) const;
  /// Concatenation N^a x N^b -> N^(a+b).
  Degree concat(const Degree& other) const;

  /// Indices i (1-based) with coordinate equal to 1, ascending.
  std::vector<std::size_t> unit_support() const;

  std::string to_string() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  std::vector<value_type> coords_;
};

/// Every p with 0 <= p <= bound, in lexicographic order of coordinates.
std::vector<Degree> degrees_below(const Degree& bound);

}  // namespace kgraph

#endif  // KGRAPH_DEGREE_HPP
