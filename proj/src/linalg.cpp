#include "sl2loc/linalg.hpp"

namespace sl2loc::linalg {

long rref(Matrix& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = Rational(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return static_cast<long>(r);
}

long rank(Matrix m) { return rref(m); }

std::vector<Row> kernel_basis(const Matrix& m, size_t ncols) {
  Matrix a = m;
  for (auto& row : a) row.resize(ncols, Rational(0));
  if (a.empty()) a.push_back(Row(ncols, Rational(0)));
  rref(a);

  std::vector<long> pivot_of_col(ncols, -1);
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < a.size(); ++c) {
    if (!a[r][c].is_zero()) {
      pivot_of_col[c] = static_cast<long>(r);
      ++r;
    }
  }

  std::vector<Row> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (pivot_of_col[free_col] != -1) continue;
    Row v(ncols, Rational(0));
    v[free_col] = Rational(1);
    for (size_t c = 0; c < ncols; ++c) {
      long pr = pivot_of_col[c];
      if (pr != -1) v[c] = -a[static_cast<size_t>(pr)][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

void axpy(SparseRow& dst, const Rational& f, const SparseRow& src) {
  for (const auto& [c, v] : src) {
    auto it = dst.find(c);
    Rational nv = (it == dst.end() ? Rational(0) : it->second) + f * v;
    if (nv.is_zero()) {
      if (it != dst.end()) dst.erase(it);
    } else {
      dst[c] = nv;
    }
  }
}

}  // namespace

std::vector<SparseRow> sparse_kernel_basis(const std::vector<SparseRow>& rows,
                                           size_t ncols) {
  // forward elimination into echelon rows with leading 1, keyed by pivot
  std::map<size_t, SparseRow> echelon;
  for (SparseRow row : rows) {
    while (!row.empty()) {
      size_t p = row.begin()->first;
      auto it = echelon.find(p);
      if (it == echelon.end()) {
        Rational inv = Rational(1) / row.begin()->second;
        SparseRow norm;
        for (const auto& [c, v] : row) norm[c] = v * inv;
        echelon[p] = std::move(norm);
        break;
      }
      Rational f = -row.begin()->second;
      axpy(row, f, it->second);
    }
  }

  std::vector<SparseRow> basis;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (echelon.count(free_col)) continue;
    // back-substitute v[free_col] = 1 through pivots in decreasing order
    SparseRow v;
    v[free_col] = Rational(1);
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
      const auto& [p, row] = *it;
      Rational acc(0);
      for (const auto& [c, coeff] : row) {
        if (c == p) continue;
        auto jt = v.find(c);
        if (jt != v.end()) acc += coeff * jt->second;
      }
      if (!acc.is_zero()) v[p] = -acc;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

long sparse_rank(const std::vector<SparseRow>& rows) {
  std::map<size_t, SparseRow> echelon;
  for (SparseRow row : rows) {
    while (!row.empty()) {
      size_t p = row.begin()->first;
      auto it = echelon.find(p);
      if (it == echelon.end()) {
        echelon[p] = row;
        break;
      }
      Rational f = -(row.begin()->second / it->second.begin()->second);
      axpy(row, f, it->second);
    }
  }
  return static_cast<long>(echelon.size());
}

bool SparseSpan::insert(Vec v) {
  while (!v.empty()) {
    long p = v.begin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      Rational inv = Rational(1) / v.begin()->second;
      Vec norm;
      for (const auto& [c, val] : v) norm[c] = val * inv;
      rows_[p] = std::move(norm);
      return true;
    }
    Rational f = -v.begin()->second;
    for (const auto& [c, val] : it->second) {
      auto jt = v.find(c);
      Rational nv = (jt == v.end() ? Rational(0) : jt->second) + f * val;
      if (nv.is_zero()) {
        if (jt != v.end()) v.erase(jt);
      } else {
        v[c] = nv;
      }
    }
  }
  return false;
}

std::vector<SparseSpan::Vec> SparseSpan::reduced_basis() const {
  // eliminate pivot columns from the rows above them
  std::map<long, Vec> rows = rows_;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    for (auto jt = rows.begin(); jt->first != it->first; ++jt) {
      auto entry = jt->second.find(it->first);
      if (entry == jt->second.end()) continue;
      Rational f = -entry->second;
      for (const auto& [c, val] : it->second) {
        auto kt = jt->second.find(c);
        Rational nv = (kt == jt->second.end() ? Rational(0) : kt->second) + f * val;
        if (nv.is_zero()) {
          if (kt != jt->second.end()) jt->second.erase(kt);
        } else {
          jt->second[c] = nv;
        }
      }
    }
  }
  std::vector<Vec> out;
  for (auto& [p, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace sl2loc::linalg
