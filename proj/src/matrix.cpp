#include "mvcoord/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mvcoord {

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, Integer fill)
      : _rows(rows), _cols(cols), _data(rows * cols, fill) {}

  IntMatrix::IntMatrix(
      std::initializer_list<std::initializer_list<Integer>> rows) {
    std::vector<IntVector> r;
    for (auto const& row : rows) {
      r.emplace_back(row);
    }
    *this = from_rows(r);
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix IntMatrix::from_rows(std::vector<IntVector> const& rows) {
    if (rows.empty()) {
      return IntMatrix();
    }
    std::size_t const cols = rows.front().size();
    IntMatrix         m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw std::invalid_argument("matrix rows have unequal lengths");
      }
      std::copy(rows[i].begin(), rows[i].end(), m._data.begin() + i * cols);
    }
    return m;
  }

  IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(_data.begin() + i * _cols,
                     _data.begin() + (i + 1) * _cols);
  }

  std::vector<IntVector> IntMatrix::to_rows() const {
    std::vector<IntVector> out;
    out.reserve(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      out.push_back(row(i));
    }
    return out;
  }

  bool IntMatrix::is_nonnegative() const {
    return std::all_of(
        _data.begin(), _data.end(), [](Integer x) { return x >= 0; });
  }

  bool IntMatrix::has_zero_row() const {
    for (std::size_t i = 0; i < _rows; ++i) {
      bool zero = true;
      for (std::size_t j = 0; j < _cols && zero; ++j) {
        zero = (*this)(i, j) == 0;
      }
      if (zero) {
        return true;
      }
    }
    return false;
  }

  bool IntMatrix::has_zero_column() const {
    for (std::size_t j = 0; j < _cols; ++j) {
      bool zero = true;
      for (std::size_t i = 0; i < _rows && zero; ++i) {
        zero = (*this)(i, j) == 0;
      }
      if (zero) {
        return true;
      }
    }
    return false;
  }

  IntVector IntMatrix::operator*(IntVector const& v) const {
    if (v.size() != _cols) {
      throw std::invalid_argument("matrix-vector shape mismatch");
    }
    IntVector out(_rows, 0);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
    if (other._rows != _cols) {
      throw std::invalid_argument("matrix product shape mismatch");
    }
    IntMatrix out(_rows, other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        Integer const a = (*this)(i, k);
        if (a == 0) {
          continue;
        }
        for (std::size_t j = 0; j < other._cols; ++j) {
          out(i, j) += a * other(k, j);
        }
      }
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i == 0 ? "" : ",") << m.row(i);
    }
    return os << ']';
  }

  std::ostream& operator<<(std::ostream& os, IntVector const& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i == 0 ? "" : ",") << v[i];
    }
    return os << ']';
  }

}  // namespace mvcoord
