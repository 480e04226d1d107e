#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lambdak/bigint.hpp"

namespace lambdak {

using Vec = std::vector<BigInt>;

// Dense integer matrix, just big enough for the rank <= 3 module models here.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, BigInt(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const {
        return a_[r * cols_ + c];
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("shape mismatch");
        Mat out(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const BigInt& v = x.at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    out.at(i, j) += v * y.at(k, j);
            }
        return out;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("shape mismatch");
        Mat out = x;
        for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += y.a_[i];
        return out;
    }

    friend Mat operator*(const Mat& x, const BigInt& c) {
        Mat out = x;
        for (auto& v : out.a_) v *= c;
        return out;
    }
    friend Mat operator*(const BigInt& c, const Mat& x) { return x * c; }

    Vec apply(const Vec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("shape mismatch");
        Vec out(rows_, BigInt(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += at(i, j) * v[j];
        return out;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

inline Vec scaled(const Vec& v, const BigInt& c) {
    Vec out = v;
    for (auto& x : out) x *= c;
    return out;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
    Vec out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

}  // namespace lambdak
