#include "qseries.hpp"

#include <cassert>
#include <stdexcept>

namespace palin {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

CoeffSeries gaussian_poly(std::uint64_t m, std::uint64_t r) {
    if (r > m) throw std::domain_error("gaussian_poly: r > m");
    const std::uint64_t a = m - r;
    const std::uint64_t b = r;
    const std::uint64_t deg = a * b;
    // Build [a+i, i]_q for i = 1..b by multiplying with (1 - q^{a+i}) and
    // dividing exactly by (1 - q^i); intermediate degree peaks at deg + b.
    std::vector<mpz_class> c(deg + b + 1);
    c[0] = 1;
    std::uint64_t cur = 0;
    for (std::uint64_t i = 1; i <= b; ++i) {
        const std::uint64_t s = a + i;
        for (std::uint64_t j = cur + s; j >= s; --j) c[j] -= c[j - s];
        cur += s;
        for (std::uint64_t j = i; j <= cur; ++j) c[j] += c[j - i];
        for (std::uint64_t j = cur - i + 1; j <= cur; ++j) {
            assert(c[j] == 0);
            c[j] = 0;
        }
        cur -= i;
    }
    c.resize(deg + 1);
    return CoeffSeries{std::move(c)};
}

mpz_class t_value(std::uint64_t n, std::uint64_t k) {
    // A(i, v, s) = sequences of length i, entries in [-k, v], nondecreasing,
    // summing to s; answer A(n, k, 0). Sums stay in [-i*k, i*k], stored with
    // offset n*k.
    const std::size_t vals = static_cast<std::size_t>(2 * k + 1);
    const std::size_t sums = static_cast<std::size_t>(2 * n * k + 1);
    const std::int64_t off = static_cast<std::int64_t>(n * k);
    std::vector<std::vector<mpz_class>> cur(vals, std::vector<mpz_class>(sums));
    for (std::size_t v = 0; v < vals; ++v) cur[v][static_cast<std::size_t>(off)] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::vector<std::vector<mpz_class>> nxt(vals, std::vector<mpz_class>(sums));
        for (std::size_t v = 0; v < vals; ++v) {
            const std::int64_t value = static_cast<std::int64_t>(v) - static_cast<std::int64_t>(k);
            for (std::size_t s = 0; s < sums; ++s) {
                // last entry < value, or last entry == value
                mpz_class total = (v > 0) ? nxt[v - 1][s] : mpz_class(0);
                const std::int64_t prev = static_cast<std::int64_t>(s) - value;
                if (prev >= 0 && prev < static_cast<std::int64_t>(sums))
                    total += cur[v][static_cast<std::size_t>(prev)];
                nxt[v][s] = total;
            }
        }
        cur = std::move(nxt);
    }
    return cur[vals - 1][static_cast<std::size_t>(off)];
}

mpz_class middle_coeff(std::uint64_t rows, std::uint64_t cols) {
    const std::uint64_t area = rows * cols;
    if (area % 2 != 0) return 0;
    return gaussian_poly(rows + cols, cols).at(area / 2);
}

CoeffSeries pp_series(std::uint64_t max_degree) {
    std::vector<mpz_class> c(max_degree + 1);
    for (std::uint64_t k = 0; 2 * k + 1 <= max_degree; ++k)
        for (std::uint64_t l = 0;; ++l) {
            const std::uint64_t e = 2 * k * l + 2 * k + 2 * l + 1;
            if (e > max_degree) break;
            c[e] += binomial(k + l, k);
        }
    for (std::uint64_t k = 0; 2 * k + 2 <= max_degree; ++k)
        for (std::uint64_t l = 0;; ++l) {
            const std::uint64_t e = 2 * k * l + 2 * k + 3 * l + 2;
            if (e > max_degree) break;
            c[e] += 2 * binomial(k + l, k);
        }
    return CoeffSeries{std::move(c)};
}

CoeffSeries r_series(std::uint64_t max_degree) {
    std::vector<mpz_class> c(max_degree + 1);
    for (std::uint64_t k = 0; 2 * k + 1 <= max_degree; ++k)
        for (std::uint64_t l = 0;; ++l) {
            const std::uint64_t e = 2 * k * l + 2 * k + 2 * l + 1;
            if (e > max_degree) break;
            c[e] += t_value(2 * l, k);
        }
    for (std::uint64_t k = 0; 2 * k + 2 <= max_degree; ++k)
        for (std::uint64_t l = 0;; ++l) {
            const std::uint64_t e = 2 * k * l + 2 * k + 3 * l + 2;
            if (e > max_degree) break;
            c[e] += 2 * middle_coeff(2 * k + 1, 2 * l);
        }
    return CoeffSeries{std::move(c)};
}

}  // namespace palin
