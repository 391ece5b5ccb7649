#include "eulerbt/accel.hpp"

#include <stdexcept>
#include <string>

#include "eulerbt/errors.hpp"

namespace eulerbt {

std::vector<Rat> forward_differences(const std::vector<Rat>& c, int m) {
    if (m < 0) throw std::invalid_argument("forward_differences: m must be non-negative");
    if (static_cast<int>(c.size()) < m + 1)
        throw InsufficientTerms("forward_differences: need " + std::to_string(m + 1) +
                                " terms, got " + std::to_string(c.size()));
    std::vector<Rat> row(c.begin(), c.begin() + m + 1);
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    out.push_back(row[0]);
    for (int j = 1; j <= m; ++j) {
        for (int i = 0; i <= m - j; ++i) row[i] = row[i + 1] - row[i];
        out.push_back(row[0]);
    }
    return out;
}

AccelTable euler_accelerate(const std::vector<Rat>& c, int m) {
    AccelTable table;
    table.diffs = forward_differences(c, m);
    table.c.assign(c.begin(), c.begin() + m + 1);
    table.plain_partials.reserve(static_cast<std::size_t>(m) + 1);
    table.accel_partials.reserve(static_cast<std::size_t>(m) + 1);
    Rat plain(0), accel(0);
    for (int j = 0; j <= m; ++j) {
        Rat term = table.c[j];
        if (j % 2 != 0) term = -term;
        plain += term;
        table.plain_partials.push_back(plain);

        Rat dterm = table.diffs[j] / Rat(pow(BigInt(2), static_cast<unsigned>(j) + 1));
        if (j % 2 != 0) dterm = -dterm;
        accel += dterm;
        table.accel_partials.push_back(accel);
    }
    return table;
}

}  // namespace eulerbt
