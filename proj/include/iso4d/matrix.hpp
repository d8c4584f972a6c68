#pragma once
#include <vector>

#include "ratexpr.hpp"

namespace iso4d {

// Dense rectangular matrix of rational expressions.
class MatrixExpr {
public:
    MatrixExpr() : rows_(0), cols_(0) {}
    MatrixExpr(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols)) {}
    MatrixExpr(int rows, int cols, std::vector<RationalExpr> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(rows * cols))
            throw iso4d_error("MatrixExpr: entry count mismatch");
    }

    static MatrixExpr identity(int n) {
        MatrixExpr m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = RationalExpr(1);
        return m;
    }
    static MatrixExpr diagonal(std::vector<RationalExpr> d) {
        int n = static_cast<int>(d.size());
        MatrixExpr m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = std::move(d[static_cast<size_t>(i)]);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RationalExpr& at(int i, int j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
    const RationalExpr& at(int i, int j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

    friend MatrixExpr operator+(const MatrixExpr& a, const MatrixExpr& b) {
        check_same(a, b);
        MatrixExpr r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend MatrixExpr operator-(const MatrixExpr& a, const MatrixExpr& b) {
        check_same(a, b);
        MatrixExpr r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend MatrixExpr operator-(const MatrixExpr& a) {
        MatrixExpr r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = -a.e_[k];
        return r;
    }
    friend MatrixExpr operator*(const MatrixExpr& a, const MatrixExpr& b) {
        if (a.cols_ != b.rows_) throw iso4d_error("MatrixExpr: dimension mismatch in product");
        MatrixExpr r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }
    friend MatrixExpr operator*(const RationalExpr& c, const MatrixExpr& a) {
        MatrixExpr r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
        return r;
    }
    friend MatrixExpr operator*(const MatrixExpr& a, const RationalExpr& c) { return c * a; }
    friend MatrixExpr operator/(const MatrixExpr& a, const RationalExpr& c) {
        return (RationalExpr(1) / c) * a;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    RationalExpr trace() const {
        RationalExpr t;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
        return t;
    }

    MatrixExpr derivative(Symbol s) const {
        MatrixExpr r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].derivative(s);
        return r;
    }
    MatrixExpr substitute(const std::map<Symbol, RationalExpr>& map) const {
        MatrixExpr r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k].substitute(map);
        return r;
    }

    // Gauss-Jordan inverse over the rational-function field.
    MatrixExpr inverse() const {
        if (rows_ != cols_) throw iso4d_error("MatrixExpr: inverse of non-square matrix");
        int n = rows_;
        MatrixExpr a(*this), inv = identity(n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!a.at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw iso4d_error("MatrixExpr: singular matrix");
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(col, j), a.at(piv, j));
                std::swap(inv.at(col, j), inv.at(piv, j));
            }
            RationalExpr p = a.at(col, col);
            for (int j = 0; j < n; ++j) {
                a.at(col, j) /= p;
                inv.at(col, j) /= p;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || a.at(i, col).is_zero()) continue;
                RationalExpr f = a.at(i, col);
                for (int j = 0; j < n; ++j) {
                    a.at(i, j) -= f * a.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

private:
    int rows_, cols_;
    std::vector<RationalExpr> e_;
    static void check_same(const MatrixExpr& a, const MatrixExpr& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw iso4d_error("MatrixExpr: dimension mismatch");
    }
};

inline MatrixExpr commutator(const MatrixExpr& a, const MatrixExpr& b) {
    return a * b - b * a;
}

}  // namespace iso4d
