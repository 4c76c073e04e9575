#ifndef BRCALC_COMPOSITIONS_HPP
#define BRCALC_COMPOSITIONS_HPP

#include <vector>

namespace brcalc {

/// All u in N^r with |u| = n, in lexicographic order.
inline std::vector<std::vector<int>> compositions_of(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> u(static_cast<size_t>(r), 0);
    u[0] = n;
    while (true) {
        out.push_back(u);
        int j = r - 2;
        while (j >= 0 && u[static_cast<size_t>(j)] == 0) --j;
        if (j < 0) break;
        --u[static_cast<size_t>(j)];
        int tail = u[static_cast<size_t>(r - 1)] + 1;
        u[static_cast<size_t>(r - 1)] = 0;
        u[static_cast<size_t>(j + 1)] = tail;
        for (int k = j + 2; k < r; ++k) u[static_cast<size_t>(k)] = 0;
    }
    return out;
}

/// All v in [0..box]^r, lexicographic.
inline std::vector<std::vector<int>> compositions_up_to(int r, int box) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<size_t>(r), 0);
    while (true) {
        out.push_back(v);
        int j = r - 1;
        while (j >= 0 && v[static_cast<size_t>(j)] == box) v[static_cast<size_t>(j--)] = 0;
        if (j < 0) break;
        ++v[static_cast<size_t>(j)];
    }
    return out;
}

} // namespace brcalc

#endif
