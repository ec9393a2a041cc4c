#include "uvb/linalg.hpp"

#include <algorithm>

namespace uvb {

unsigned exact_rank(IntMatrix m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    unsigned rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Int a = m[row][col], b = m[i][col];
            Int g = boost::multiprecision::gcd(a, b);
            Int fa = b / g, fb = a / g;
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] * fb - m[row][j] * fa;
        }
        ++row;
        ++rank;
    }
    return rank;
}

IntMatrix row_relations(const IntMatrix& m) {
    // augment with an identity to track the combination applied to each row
    size_t rows = m.size();
    if (rows == 0) return {};
    size_t cols = m[0].size();
    IntMatrix aug(rows, std::vector<Int>(cols + rows, 0));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols + i] = 1;
    }
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && aug[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(aug[row], aug[piv]);
        for (size_t i = row + 1; i < rows; ++i) {
            if (aug[i][col] == 0) continue;
            Int a = aug[row][col], b = aug[i][col];
            Int g = boost::multiprecision::gcd(a, b);
            Int fa = b / g, fb = a / g;
            for (size_t j = 0; j < cols + rows; ++j)
                aug[i][j] = aug[i][j] * fb - aug[row][j] * fa;
        }
        ++row;
    }
    IntMatrix ker;
    for (size_t i = row; i < rows; ++i) {
        std::vector<Int> rel(aug[i].begin() + cols, aug[i].end());
        Int g = 0;
        for (auto& x : rel) g = boost::multiprecision::gcd(g, x);
        if (g == 0) continue;
        for (auto& x : rel) x /= g;
        // sign convention: leading entry positive
        for (auto& x : rel) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : rel) y = -y;
                break;
            }
        }
        ker.push_back(std::move(rel));
    }
    // echelonize by leading index so pivot deletion is deterministic
    auto lead = [](const std::vector<Int>& v) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    };
    std::sort(ker.begin(), ker.end(),
              [&](auto& a, auto& b) { return lead(a) < lead(b); });
    for (size_t i = 0; i < ker.size(); ++i) {
        size_t li = lead(ker[i]);
        for (size_t j = 0; j < ker.size(); ++j) {
            if (j == i || ker[j][li] == 0) continue;
            if (ker[j][li] % ker[i][li] == 0) {
                Int f = ker[j][li] / ker[i][li];
                for (size_t t = 0; t < ker[j].size(); ++t)
                    ker[j][t] -= f * ker[i][t];
            }
        }
    }
    return ker;
}

}  // namespace uvb
