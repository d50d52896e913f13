#include <wktau/partition.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace wktau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw UsageError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw UsageError("partition parts must be weakly decreasing");
        }
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::string str;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) {
            str.push_back(c);
        }
    }
    if (str.size() < 2 || str.front() != '[' || str.back() != ']') {
        throw UsageError("partition literal must look like [3,2]");
    }
    std::vector<int> parts;
    std::string body = str.substr(1, str.size() - 2);
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
                throw UsageError("malformed partition literal '" + str + "'");
            }
            parts.push_back(std::stoi(item));
        }
    }
    return Partition(std::move(parts));
}

int Partition::diagonal_size() const {
    int k = 0;
    while (static_cast<std::size_t>(k) < parts_.size() && parts_[k] > k) {
        ++k;
    }
    return k;
}

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> columns(static_cast<std::size_t>(parts_.front()), 0);
    for (int row : parts_) {
        for (int j = 0; j < row; ++j) {
            ++columns[static_cast<std::size_t>(j)];
        }
    }
    return Partition(std::move(columns));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Partition& mu) { return os << mu.to_string(); }

namespace {

std::string join(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

bool strictly_decreasing_nonnegative(const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || (i > 0 && values[i] >= values[i - 1])) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string FrobeniusCoords::to_string() const { return "(" + join(arms) + "|" + join(legs) + ")"; }

FrobeniusCoords to_frobenius(const Partition& mu) {
    const Partition mu_t = mu.conjugate();
    const int k = mu.diagonal_size();
    FrobeniusCoords fc;
    for (int i = 0; i < k; ++i) {
        fc.arms.push_back(mu.part(static_cast<std::size_t>(i)) - i - 1);
        fc.legs.push_back(mu_t.part(static_cast<std::size_t>(i)) - i - 1);
    }
    return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc) {
    if (fc.arms.size() != fc.legs.size()) {
        throw UsageError("Frobenius arms and legs must have equal length");
    }
    if (!strictly_decreasing_nonnegative(fc.arms) || !strictly_decreasing_nonnegative(fc.legs)) {
        throw UsageError("Frobenius coordinates must be strictly decreasing and nonnegative");
    }
    const int k = static_cast<int>(fc.rank());
    if (k == 0) {
        return {};
    }
    // Rows 1..k come from the arms. Row i > k has length #{j : legs_j + j >= i}
    // (0-based j, 1-based row i), i.e. the number of diagonal hooks whose leg
    // reaches below it.
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
        parts.push_back(fc.arms[static_cast<std::size_t>(i)] + i + 1);
    }
    const int rows = fc.legs.front() + 1;
    for (int row = k; row < rows; ++row) {
        int len = 0;
        for (int j = 0; j < k; ++j) {
            if (fc.legs[static_cast<std::size_t>(j)] + j >= row) {
                ++len;
            }
        }
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) {
        throw UsageError("cannot enumerate partitions of a negative number");
    }
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Classic successor in reverse lexicographic order.
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        int remainder = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++remainder;
        }
        if (a.empty()) {
            break;
        }
        const int k = --a.back();
        ++remainder;
        while (remainder > k) {
            a.push_back(k);
            remainder -= k;
        }
        if (remainder > 0) {
            a.push_back(remainder);
        }
    }
    return out;
}

Rational z_order(const Partition& nu) {
    std::map<int, long> multiplicities;
    for (int part : nu.parts()) {
        ++multiplicities[part];
    }
    Rational z(1);
    for (const auto& [k, m] : multiplicities) {
        z *= pow(Rational(k), static_cast<unsigned>(m)) * factorial(m);
    }
    return z;
}

}  // namespace wktau
