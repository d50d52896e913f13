#ifndef WKTAU_TESTS_SUPPORT_HPP
#define WKTAU_TESTS_SUPPORT_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include <wktau/exact.hpp>
#include <wktau/partition.hpp>
#include <wktau/series.hpp>

namespace wktau::test {

inline Rational q(long n, long d = 1) { return Rational(n, d); }
inline ExactScalar real(long n, long d = 1) { return ExactScalar(Rational(n, d)); }
/// (n/d) * s
inline ExactScalar imag(long n, long d = 1) { return ExactScalar(Rational(0), Rational(n, d)); }

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eedULL);
    return gen;
}

inline Rational random_rational(long span = 50) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rational(num(rng()), den(rng()));
}

inline ExactScalar random_scalar(long span = 50) { return ExactScalar(random_rational(span), random_rational(span)); }

struct GoldenRow {
    Partition mu;
    ExactScalar value;
};

inline std::vector<GoldenRow> load_golden(int degree) {
    const std::string path = std::string(WKTAU_TEST_DATA_DIR) + "/schur_degree" + std::to_string(degree) + ".txt";
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
    std::vector<GoldenRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string parts_text, re, im;
        std::getline(fields, parts_text, '\t');
        std::getline(fields, re, '\t');
        std::getline(fields, im, '\t');
        std::istringstream parts_stream(parts_text);
        std::vector<int> parts;
        for (int p; parts_stream >> p;) {
            parts.push_back(p);
        }
        rows.push_back({Partition(parts), ExactScalar(Rational::parse(re), Rational::parse(im))});
    }
    return rows;
}

/// Series with the given terms, e.g. make_series(Family::T, 9, {{{{1, 3}}, imag(-1, 24)}}).
inline FormalSeries make_series(Family f, int bound, const std::vector<std::pair<Monomial, ExactScalar>>& terms) {
    FormalSeries s(f, bound);
    for (const auto& [m, c] : terms) {
        s.add_term(m, c);
    }
    return s;
}

}  // namespace wktau::test

#endif  // WKTAU_TESTS_SUPPORT_HPP
