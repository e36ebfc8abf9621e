#ifndef MVCOORD_MATRIX_HPP_
#define MVCOORD_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace mvcoord {

  using Integer   = std::int64_t;
  using IntVector = std::vector<Integer>;

  // Dense row-major integer matrix. Used for Bratteli multiplicities and for
  // positive homomorphisms between simplicial groups.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, Integer fill = 0);
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<IntVector> const& rows);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Integer operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }
    Integer& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }

    IntVector row(std::size_t i) const;
    std::vector<IntVector> to_rows() const;

    bool is_nonnegative() const;
    bool has_zero_row() const;
    bool has_zero_column() const;

    IntVector operator*(IntVector const& v) const;
    IntMatrix operator*(IntMatrix const& other) const;

    bool operator==(IntMatrix const&) const = default;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    IntVector   _data;
  };

  std::ostream& operator<<(std::ostream& os, IntMatrix const& m);
  std::ostream& operator<<(std::ostream& os, IntVector const& v);

}  // namespace mvcoord

#endif  // MVCOORD_MATRIX_HPP_
