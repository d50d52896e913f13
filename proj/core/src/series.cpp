#include <wktau/series.hpp>

#include <algorithm>

namespace wktau {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::p:
            return "p";
        case Family::T:
            return "T";
        case Family::t:
            return "t";
        case Family::u:
            return "u";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "p") {
        return Family::p;
    }
    if (name == "T") {
        return Family::T;
    }
    if (name == "t") {
        return Family::t;
    }
    if (name == "u") {
        return Family::u;
    }
    throw UsageError("unknown variable family '" + std::string(name) + "'");
}

int variable_degree(Family family, int index) {
    switch (family) {
        case Family::p:
        case Family::T:
            if (index < 1) {
                throw UsageError("p/T variables are indexed from 1");
            }
            return index;
        case Family::t:
        case Family::u:
            if (index < 0) {
                throw UsageError("t/u variables are indexed from 0");
            }
            return 2 * index + 1;
    }
    return 0;
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [index, exp] : factors) {
        if (exp < 0) {
            throw UsageError("negative exponent in monomial");
        }
        if (exp == 0) {
            continue;
        }
        if (!factors_.empty() && factors_.back().first == index) {
            factors_.back().second += exp;
        } else {
            factors_.emplace_back(index, exp);
        }
    }
}

Monomial Monomial::from_indices(const std::vector<int>& indices) {
    std::vector<Factor> factors;
    factors.reserve(indices.size());
    for (int i : indices) {
        factors.emplace_back(i, 1);
    }
    return Monomial(std::move(factors));
}

int Monomial::exponent(int index) const {
    const auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{index, 0});
    return (it != factors_.end() && it->first == index) ? it->second : 0;
}

int Monomial::total_exponent() const {
    int n = 0;
    for (const auto& f : factors_) {
        n += f.second;
    }
    return n;
}

int Monomial::degree(Family family) const {
    int d = 0;
    for (const auto& [index, exp] : factors_) {
        d += variable_degree(family, index) * exp;
    }
    return d;
}

std::optional<Monomial> Monomial::shifted(int index, int delta) const {
    Monomial out = *this;
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), Factor{index, 0});
    if (it != out.factors_.end() && it->first == index) {
        it->second += delta;
        if (it->second < 0) {
            return std::nullopt;
        }
        if (it->second == 0) {
            out.factors_.erase(it);
        }
        return out;
    }
    if (delta < 0) {
        return std::nullopt;
    }
    if (delta > 0) {
        out.factors_.insert(it, Factor{index, delta});
    }
    return out;
}

std::string Monomial::to_string(Family family) const {
    if (factors_.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& [index, exp] : factors_) {
        if (!out.empty()) {
            out += '*';
        }
        out += family_name(family);
        out += std::to_string(index);
        if (exp != 1) {
            out += '^' + std::to_string(exp);
        }
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

FormalSeries::FormalSeries(Family family, int degree_bound) : family_(family), degree_bound_(degree_bound) {
    if (degree_bound < 0) {
        throw UsageError("degree bound must be nonnegative");
    }
}

FormalSeries FormalSeries::constant(Family family, int degree_bound, const ExactScalar& value) {
    FormalSeries out(family, degree_bound);
    out.add_term(Monomial(), value);
    return out;
}

ExactScalar FormalSeries::coefficient(const Monomial& m) const {
    if (m.degree(family_) > degree_bound_) {
        throw DegreeError("monomial " + m.to_string(family_) + " has degree " + std::to_string(m.degree(family_)) +
                          " above the truncation bound " + std::to_string(degree_bound_) + "; increase D");
    }
    const auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void FormalSeries::add_term(const Monomial& m, const ExactScalar& value) {
    if (value.is_zero() || m.degree(family_) > degree_bound_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

FormalSeries FormalSeries::homogeneous_part(int d) const {
    FormalSeries out(family_, degree_bound_);
    for (const auto& [m, c] : terms_) {
        if (m.degree(family_) == d) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

bool FormalSeries::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& term) { return term.first.degree(family_) == d; });
}

FormalSeries FormalSeries::truncated(int degree_bound) const {
    FormalSeries out(family_, std::min(degree_bound, degree_bound_));
    for (const auto& [m, c] : terms_) {
        if (m.degree(family_) <= out.degree_bound_) {
            out.terms_.emplace(m, c);
        }
    }
    return out;
}

FormalSeries FormalSeries::with_bound(int degree_bound) const {
    if (degree_bound < degree_bound_) {
        return truncated(degree_bound);
    }
    FormalSeries out = *this;
    out.degree_bound_ = degree_bound;
    return out;
}

std::vector<std::pair<Monomial, ExactScalar>> FormalSeries::sorted_terms() const {
    std::vector<std::pair<Monomial, ExactScalar>> out(terms_.begin(), terms_.end());
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return a.first.degree(family_) < b.first.degree(family_);
    });
    return out;
}

void FormalSeries::require_compatible(const FormalSeries& other) const {
    if (family_ != other.family_) {
        throw UsageError("cannot combine series in different variable families");
    }
}

FormalSeries FormalSeries::operator-() const {
    FormalSeries out = *this;
    for (auto& term : out.terms_) {
        term.second = -term.second;
    }
    return out;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
    require_compatible(other);
    if (other.degree_bound_ < degree_bound_) {
        *this = truncated(other.degree_bound_);
    }
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other) {
    require_compatible(other);
    if (other.degree_bound_ < degree_bound_) {
        *this = truncated(other.degree_bound_);
    }
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

FormalSeries& FormalSeries::operator*=(const ExactScalar& factor) {
    if (factor.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= factor;
    }
    return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    a.require_compatible(b);
    FormalSeries out(a.family_, std::min(a.degree_bound_, b.degree_bound_));
    // Degrees are cached so the inner loop can prune before building products.
    std::vector<std::pair<int, const FormalSeries::TermMap::value_type*>> rhs;
    rhs.reserve(b.terms_.size());
    for (const auto& term : b.terms_) {
        rhs.emplace_back(term.first.degree(b.family_), &term);
    }
    for (const auto& [ma, ca] : a.terms_) {
        const int da = ma.degree(a.family_);
        for (const auto& [db, term] : rhs) {
            if (da + db <= out.degree_bound_) {
                out.add_term(ma * term->first, ca * term->second);
            }
        }
    }
    return out;
}

}  // namespace wktau
