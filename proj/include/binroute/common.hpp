#ifndef BINROUTE_COMMON_HPP
#define BINROUTE_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace binroute {

// Monetary comparisons are done at 1e-6 US$, waste volumes at 1e-9 m3.
inline constexpr double kCostTol = 1e-6;
inline constexpr double kWasteTol = 1e-9;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a visit mask leaves a point without any visit, so no cyclic
// steady state exists.
class UnvisitedPointError : public Error {
public:
    explicit UnvisitedPointError(int point)
        : Error("point " + std::to_string(point) + " is never visited"), point_(point) {}
    int point() const { return point_; }

private:
    int point_;
};

// Raised by repair when even daily visits cannot keep a point's accumulation
// within the largest catalog capacity.
class UnservablePointError : public Error {
public:
    explicit UnservablePointError(int point)
        : Error("point " + std::to_string(point) +
                " cannot be served by any catalog combination"),
          point_(point) {}
    int point() const { return point_; }

private:
    int point_;
};

// Row-major dense matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<double>& data() const { return data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

class BoolMat {
public:
    BoolMat() = default;
    BoolMat(int rows, int cols, bool fill = false)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill ? 1 : 0) {}

    uint8_t& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    uint8_t operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool operator==(const BoolMat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> data_;
};

// Banker's rounding at two decimals, the convention used for displayed
// percentages and costs. Internal comparisons never round.
inline double round_half_even(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double scaled = value * scale;
    const double floor_val = std::floor(scaled);
    const double diff = scaled - floor_val;
    double result;
    if (diff > 0.5) {
        result = floor_val + 1.0;
    } else if (diff < 0.5) {
        result = floor_val;
    } else {
        result = (std::fmod(floor_val, 2.0) == 0.0) ? floor_val : floor_val + 1.0;
    }
    return result / scale;
}

}  // namespace binroute

#endif
