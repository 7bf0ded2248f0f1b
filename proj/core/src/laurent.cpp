#include "pertcoul/laurent.hpp"

#include "pertcoul/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pertcoul {

std::size_t LaurentForm::slot(int power) {
    if (power < min_power || power > max_power) {
        throw DomainError("Laurent power " + std::to_string(power) + " outside [-2, 2]");
    }
    return static_cast<std::size_t>(power - min_power);
}

LaurentForm::LaurentForm(std::initializer_list<std::pair<int, double>> terms) {
    for (const auto& [p, v] : terms) {
        c_[slot(p)] += v;
    }
}

double LaurentForm::operator[](int power) const {
    if (power < min_power || power > max_power) {
        return 0.0;
    }
    return c_[slot(power)];
}

void LaurentForm::set(int power, double value) { c_[slot(power)] = value; }

double LaurentForm::operator()(double r) const {
    double sum = 0.0;
    for (int p = min_power; p <= max_power; ++p) {
        const double cp = c_[slot(p)];
        if (cp != 0.0) {
            sum += cp * std::pow(r, p);
        }
    }
    return sum;
}

LaurentForm LaurentForm::operator+(const LaurentForm& rhs) const {
    LaurentForm out;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + rhs.c_[i];
    return out;
}

LaurentForm LaurentForm::operator-(const LaurentForm& rhs) const {
    LaurentForm out;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - rhs.c_[i];
    return out;
}

LaurentForm LaurentForm::operator-() const { return *this * -1.0; }

LaurentForm LaurentForm::operator*(double s) const {
    LaurentForm out;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

LaurentForm LaurentForm::operator*(const LaurentForm& rhs) const {
    std::array<double, 9> wide{};  // powers -4..4
    for (int p = min_power; p <= max_power; ++p) {
        for (int q = min_power; q <= max_power; ++q) {
            wide[static_cast<std::size_t>(p + q + 4)] += (*this)[p] * rhs[q];
        }
    }
    LaurentForm out;
    for (int k = -4; k <= 4; ++k) {
        const double v = wide[static_cast<std::size_t>(k + 4)];
        if (k < min_power || k > max_power) {
            if (v != 0.0) {
                throw DomainError("Laurent product produces power " + std::to_string(k));
            }
            continue;
        }
        out.c_[slot(k)] = v;
    }
    return out;
}

LaurentForm LaurentForm::derivative() const {
    if ((*this)[min_power] != 0.0) {
        throw DomainError("derivative of r^-2 term leaves the Laurent range");
    }
    LaurentForm out;
    for (int p = min_power + 1; p <= max_power; ++p) {
        if (p != 0) out.c_[slot(p - 1)] = p * (*this)[p];
    }
    return out;
}

LaurentForm LaurentForm::without_constant() const {
    LaurentForm out = *this;
    out.c_[slot(0)] = 0.0;
    return out;
}

double LaurentForm::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

bool LaurentForm::powers_within(int lo, int hi) const {
    for (int p = min_power; p <= max_power; ++p) {
        if ((p < lo || p > hi) && (*this)[p] != 0.0) return false;
    }
    return true;
}

} // namespace pertcoul
