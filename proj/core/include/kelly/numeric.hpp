#pragma once

#include <cmath>
#include <string>

namespace kelly {

// Neumaier compensated summation.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Rounds to the given number of significant decimal digits.
double round_significant(double x, int digits = 12);

// printf("%.*g") without the locale surprises of iostreams.
std::string format_significant(double x, int digits = 12);

}  // namespace kelly
