/*
   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "froblie/linalg.hpp"

#include <algorithm>

namespace froblie {

Vec zero_vec(const FieldPtr& field, int n) { return Vec(static_cast<size_t>(n), field->zero()); }

Vec unit_vec(const FieldPtr& field, int n, int i) {
    Vec v = zero_vec(field, n);
    v[i] = field->one();
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec out = a;
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec out = a;
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec scale(const Vec& a, const Scalar& c) {
    Vec out = a;
    for (auto& x : out) x *= c;
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    if (a.empty()) throw DimensionMismatch("dot of empty vectors");
    Scalar s = a[0].field()->zero();
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Mat::Mat(const FieldPtr& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, field->zero()) {}

Mat Mat::identity(const FieldPtr& field, int n) {
    Mat m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Mat Mat::from_rows(const FieldPtr& field, const std::vector<Vec>& rows, int cols) {
    Mat m(field, static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols) throw DimensionMismatch("row length mismatch");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

Vec Mat::row(int i) const {
    Vec v;
    v.reserve(cols_);
    for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Vec Mat::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector size mismatch");
    Vec out = zero_vec(field_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (x[j].is_zero() || at(i, j).is_zero()) continue;
            out[i] += at(i, j) * x[j];
        }
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Mat out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) += aik * o.at(k, j);
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += o.a_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= o.a_[i];
    return out;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat out = *this;
    for (auto& x : out.a_) x *= c;
    return out;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Mat Mat::pow(unsigned e) const {
    if (rows_ != cols_) throw DimensionMismatch("pow of non-square matrix");
    Mat acc = identity(field_, rows_);
    Mat base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Mat Mat::transpose() const {
    Mat out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    Mat work = *this;
    Mat inv = identity(field_, rows_);
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar d = work.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            work.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            Scalar f = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Vec> nullspace(const Mat& m) {
    const FieldPtr& field = m.field();
    int rows = m.rows(), cols = m.cols();
    // reduced echelon of m
    std::vector<Vec> work;
    work.reserve(rows);
    for (int i = 0; i < rows; ++i) work.push_back(m.row(i));
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!work[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(work[rank], work[pr]);
        Scalar d = work[rank][col].inverse();
        for (int j = col; j < cols; ++j) work[rank][j] *= d;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || work[r][col].is_zero()) continue;
            Scalar f = work[r][col];
            for (int j = col; j < cols; ++j) work[r][j] -= f * work[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(field, cols);
        v[free] = field->one();
        for (int r = 0; r < rank; ++r) v[pivots[r]] = -work[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

void Subspace::insert(Vec v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (!c.is_zero()) v = sub(v, scale(rows_[r], c));
    }
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return;
    v = scale(v, v[p].inverse());
    // back-eliminate to keep reduced form
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = rows_[r][p];
        if (!c.is_zero()) rows_[r] = sub(rows_[r], scale(v, c));
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
}

Subspace Subspace::zero(const FieldPtr& field, int ambient) {
    Subspace s;
    s.field_ = field;
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::full(const FieldPtr& field, int ambient) {
    Subspace s = zero(field, ambient);
    for (int i = 0; i < ambient; ++i) s.insert(unit_vec(field, ambient, i));
    return s;
}

Subspace Subspace::span(const FieldPtr& field, int ambient, const std::vector<Vec>& vectors) {
    Subspace s = zero(field, ambient);
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != ambient) throw DimensionMismatch("span vector has wrong length");
        s.insert(v);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("reduce: wrong ambient");
    Vec out = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = out[pivots_[r]];
        if (!c.is_zero()) out = sub(out, scale(rows_[r], c));
    }
    return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const Vec& v : other.rows_)
        if (!contains(v)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || rows_.size() != o.rows_.size()) return false;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (pivots_[i] != o.pivots_[i]) return false;
        for (int j = 0; j < ambient_; ++j)
            if (rows_[i][j] != o.rows_[i][j]) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("sum: ambient mismatch");
    Subspace s = *this;
    for (const Vec& v : o.rows_) s.insert(v);
    return s;
}

Subspace Subspace::meet(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw DimensionMismatch("meet: ambient mismatch");
    if (dim() == 0 || o.dim() == 0) return zero(field_, ambient_);
    std::vector<Vec> constraints = annihilator();
    std::vector<Vec> other = o.annihilator();
    constraints.insert(constraints.end(), other.begin(), other.end());
    if (constraints.empty()) return full(field_, ambient_);
    Mat m = Mat::from_rows(field_, constraints, ambient_);
    return span(field_, ambient_, nullspace(m));
}

Subspace Subspace::image(const Mat& g) const {
    std::vector<Vec> mapped;
    mapped.reserve(rows_.size());
    for (const Vec& v : rows_) mapped.push_back(g.apply(v));
    return span(field_, g.rows(), mapped);
}

std::vector<Vec> Subspace::annihilator() const {
    if (rows_.empty()) {
        std::vector<Vec> all;
        for (int i = 0; i < ambient_; ++i) all.push_back(unit_vec(field_, ambient_, i));
        return all;
    }
    Mat m = Mat::from_rows(field_, rows_, ambient_);
    return nullspace(m);
}

SpanBuilder::SpanBuilder(const FieldPtr& field, int ambient, bool track)
    : field_(field), ambient_(ambient), track_(track) {}

bool SpanBuilder::add(const Vec& v, int gen_id) {
    if (static_cast<int>(v.size()) != ambient_) throw DimensionMismatch("SpanBuilder: wrong ambient");
    Vec w = v;
    std::map<int, Scalar> h;
    if (track_) h[gen_id] = field_->one();
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = w[pivot_col_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // copy before w mutates
        w = sub(w, scale(rows_[r], f));
        if (track_)
            for (const auto& [g, hc] : hist_[r]) {
                auto it = h.find(g);
                if (it == h.end()) h.emplace(g, -(f * hc));
                else {
                    it->second -= f * hc;
                    if (it->second.is_zero()) h.erase(it);
                }
            }
    }
    int p = -1;
    for (int j = 0; j < ambient_; ++j)
        if (!w[j].is_zero()) {
            p = j;
            break;
        }
    if (p < 0) return false;
    Scalar d = w[p].inverse();
    w = scale(w, d);
    if (track_)
        for (auto& [g, hc] : h) hc *= d;
    rows_.push_back(std::move(w));
    pivot_col_.push_back(p);
    hist_.push_back(std::move(h));
    return true;
}

bool SpanBuilder::contains(const Vec& v) const {
    Vec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = w[pivot_col_[r]];
        if (!c.is_zero()) w = sub(w, scale(rows_[r], c));
    }
    return is_zero_vec(w);
}

std::optional<std::map<int, Scalar>> SpanBuilder::express(const Vec& v) const {
    Vec w = v;
    std::map<int, Scalar> coeffs;
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar c = w[pivot_col_[r]];
        if (c.is_zero()) continue;
        w = sub(w, scale(rows_[r], c));
        for (const auto& [g, hc] : hist_[r]) {
            auto it = coeffs.find(g);
            if (it == coeffs.end()) coeffs.emplace(g, c * hc);
            else {
                it->second += c * hc;
                if (it->second.is_zero()) coeffs.erase(it);
            }
        }
    }
    if (!is_zero_vec(w)) return std::nullopt;
    return coeffs;
}

Subspace SpanBuilder::to_subspace() const {
    return Subspace::span(field_, ambient_, rows_);
}

}  // namespace froblie
