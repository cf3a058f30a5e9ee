// Column sums of the sin^2(pi z / 2) matrix: the Bernoulli closed form next
// to the coefficients of 1/(1 - h).

#include <iostream>

#include <sonnenschein.hpp>

int main() {
    using namespace sonnenschein;

    constexpr std::size_t cols = 13;
    const auto closed = sec2_column_sums_by_column(cols);
    const auto series = column_sums_via_series(sin2_series(cols - 1));
    for (std::size_t k = 0; k < cols; ++k)
        std::cout << "column " << k << ": " << closed[k] << (closed[k] == series[k] ? "  (matches 1/(1-h))" : "  MISMATCH")
                  << '\n';
}
