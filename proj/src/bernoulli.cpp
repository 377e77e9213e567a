#include "modcount/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace modcount {

namespace {
std::mutex table_mutex;
std::vector<Rational> table; // table[m] = B_m
} // namespace

Rational bernoulli(int m) {
    if (m < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(table_mutex);
    if (table.empty()) table.push_back(Rational(1));
    while (static_cast<int>(table.size()) <= m) {
        int k = static_cast<int>(table.size());
        Rational acc(0);
        for (int j = 0; j < k; ++j) acc += Rational(binomial(k + 1, j)) * table[j];
        table.push_back(-acc / Rational(k + 1));
    }
    return table[m];
}

Rational zeta_neg(int g) {
    if (g < 1) throw std::invalid_argument("zeta_neg: g must be >= 1");
    return -bernoulli(2 * g) / Rational(2 * g);
}

} // namespace modcount
