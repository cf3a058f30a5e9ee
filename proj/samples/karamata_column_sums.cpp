// Builds the Karamata matrix K[1/2, 1/3], reads its column sums off 1/(1 - f)
// and checks them against 2000-row partial sums.

#include <iostream>

#include <sonnenschein.hpp>

int main() {
    using namespace sonnenschein;

    const KaramataParams p(ComplexRational(Rational(1) / 2), ComplexRational(Rational(1) / 3));
    const auto f = karamata_series(p, 7);

    const auto exact = build_matrix(f, 5, p.describe());
    std::cout << "first rows of K[1/2, 1/3]:\n";
    for (std::size_t n = 0; n < exact.rows(); ++n) {
        for (std::size_t k = 0; k < exact.cols(); ++k) std::cout << "  " << exact(n, k).real();
        std::cout << '\n';
    }

    const auto sums = column_sums_via_series(f);
    std::cout << "column sums:";
    for (const auto& s : sums) std::cout << ' ' << s.real();
    std::cout << '\n';

    const auto report = verify_column_sums(build_matrix(to_numeric(f), 2000), sums, 1e-9);
    std::cout << "partial sums over 2000 rows agree to " << report.max_deviation() << '\n';
    return report.all_converged() ? 0 : 1;
}
