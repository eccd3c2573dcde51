#pragma once

// Visible (coprime) lattice points in the positive quadrant and octant,
// enumerated along diagonals a+b = d (or a+b+c = d).

#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>

namespace vpv {

using lattice_int = std::uint32_t;

constexpr std::uint64_t binary_gcd(std::uint64_t u, std::uint64_t v) {
  if (u == 0) return v;
  if (v == 0) return u;
  int shift = std::countr_zero(u | v);
  u >>= std::countr_zero(u);
  do {
    v >>= std::countr_zero(v);
    if (u > v) {
      std::uint64_t t = u;
      u = v;
      v = t;
    }
    v -= u;
  } while (v != 0);
  return u << shift;
}

struct visible_point2 {
  lattice_int a;
  lattice_int b;
  friend bool operator==(const visible_point2&, const visible_point2&) = default;
};

struct visible_point3 {
  lattice_int a;
  lattice_int b;
  lattice_int c;
  friend bool operator==(const visible_point3&, const visible_point3&) = default;
};

template <class Point>
struct decomposition {
  lattice_int multiplier;
  Point visible;
};

inline decomposition<visible_point2> decompose(lattice_int m, lattice_int n) {
  if (m == 0 || n == 0) throw std::invalid_argument("decompose: coordinates must be positive");
  auto g = static_cast<lattice_int>(binary_gcd(m, n));
  return {g, {m / g, n / g}};
}

inline decomposition<visible_point3> decompose(lattice_int m, lattice_int n, lattice_int p) {
  if (m == 0 || n == 0 || p == 0)
    throw std::invalid_argument("decompose: coordinates must be positive");
  auto g = static_cast<lattice_int>(binary_gcd(binary_gcd(m, n), p));
  return {g, {m / g, n / g, p / g}};
}

// Coprime pairs with first_diag <= a+b <= last_diag, ordered by a+b then a.
class visible_points_2d {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = visible_point2;
    using difference_type = std::ptrdiff_t;
    using pointer = const visible_point2*;
    using reference = const visible_point2&;

    iterator() = default;
    iterator(lattice_int d, lattice_int last) : d_(d), a_(0), last_(last), done_(false) {
      advance();
    }

    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      advance();
      return t;
    }
    friend bool operator==(const iterator& x, const iterator& y) {
      return x.done_ == y.done_ && (x.done_ || x.cur_ == y.cur_);
    }

   private:
    void advance() {
      while (d_ <= last_) {
        if (++a_ >= d_) {
          ++d_;
          a_ = 0;
          continue;
        }
        // gcd(a, d-a) == gcd(a, d)
        if (binary_gcd(a_, d_) == 1) {
          cur_ = {a_, d_ - a_};
          return;
        }
      }
      done_ = true;
    }

    lattice_int d_ = 0;
    lattice_int a_ = 0;
    lattice_int last_ = 0;
    visible_point2 cur_{0, 0};
    bool done_ = true;
  };

  explicit visible_points_2d(lattice_int degree_cap) : visible_points_2d(2, degree_cap) {}
  visible_points_2d(lattice_int first_diag, lattice_int last_diag)
      : first_(first_diag < 2 ? 2 : first_diag), last_(last_diag) {}

  iterator begin() const { return iterator(first_, last_); }
  iterator end() const { return iterator(); }

 private:
  lattice_int first_;
  lattice_int last_;
};

// Coprime triples with first_diag <= a+b+c <= last_diag, ordered by
// a+b+c, then a, then b.
class visible_points_3d {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = visible_point3;
    using difference_type = std::ptrdiff_t;
    using pointer = const visible_point3*;
    using reference = const visible_point3&;

    iterator() = default;
    iterator(lattice_int d, lattice_int last)
        : d_(d), a_(1), b_(0), last_(last), done_(false) {
      advance();
    }

    reference operator*() const { return cur_; }
    pointer operator->() const { return &cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      advance();
      return t;
    }
    friend bool operator==(const iterator& x, const iterator& y) {
      return x.done_ == y.done_ && (x.done_ || x.cur_ == y.cur_);
    }

   private:
    void advance() {
      while (d_ <= last_) {
        // b ranges over [1, d-a-1]; a over [1, d-2]
        if (++b_ + a_ >= d_) {
          ++a_;
          b_ = 0;
          if (a_ + 2 > d_) {
            ++d_;
            a_ = 1;
          }
          continue;
        }
        lattice_int c = d_ - a_ - b_;
        if (binary_gcd(binary_gcd(a_, b_), c) == 1) {
          cur_ = {a_, b_, c};
          return;
        }
      }
      done_ = true;
    }

    lattice_int d_ = 0;
    lattice_int a_ = 1;
    lattice_int b_ = 0;
    lattice_int last_ = 0;
    visible_point3 cur_{0, 0, 0};
    bool done_ = true;
  };

  explicit visible_points_3d(lattice_int degree_cap) : visible_points_3d(3, degree_cap) {}
  visible_points_3d(lattice_int first_diag, lattice_int last_diag)
      : first_(first_diag < 3 ? 3 : first_diag), last_(last_diag) {}

  iterator begin() const { return iterator(first_, last_); }
  iterator end() const { return iterator(); }

 private:
  lattice_int first_;
  lattice_int last_;
};

}  // namespace vpv
