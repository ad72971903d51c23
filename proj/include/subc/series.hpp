#pragma once

#include "subc/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace subc {

// Power series in one local parameter truncated at order N: coefficients
// c0..cN are known exactly, everything above is unknown. Vanishing-order
// queries return nullopt ("order >= N+1") instead of guessing when every
// stored coefficient is zero.
template <typename Scalar>
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, Scalar(0)) {}
    explicit TruncatedSeries(int truncation_order)
        : coeffs_(static_cast<std::size_t>(truncation_order) + 1, Scalar(0)) {
        if (truncation_order < 0)
            throw std::invalid_argument("TruncatedSeries: negative truncation order");
    }
    TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
    }

    static TruncatedSeries constant(Scalar c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    // The series "t" itself.
    static TruncatedSeries parameter(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s.coeffs_[1] = Scalar(1);
        return s;
    }

    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Scalar& operator[](int k) const { return coeffs_.at(k); }
    Scalar& operator[](int k) { return coeffs_.at(k); }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    // Least k with c_k != 0, or nullopt when the series vanishes to the
    // truncation order.
    std::optional<int> vanishing_order() const {
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (!coeffs_[k].is_zero()) return static_cast<int>(k);
        return std::nullopt;
    }

    bool is_zero_to_truncation() const { return !vanishing_order().has_value(); }

    TruncatedSeries truncated(int order) const {
        if (order >= truncation_order()) return *this;
        std::vector<Scalar> c(coeffs_.begin(), coeffs_.begin() + order + 1);
        return TruncatedSeries(std::move(c));
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.truncation_order(), b.truncation_order());
        TruncatedSeries r(n);
        for (int k = 0; k <= n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    // Product truncated at min of the operand orders.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.truncation_order(), b.truncation_order());
        TruncatedSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; j + i <= n; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries& operator*=(const Scalar& c) {
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) { return a *= c; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Scalar> coeffs_;
};

using SeriesQ = TruncatedSeries<Rational>;

}  // namespace subc
