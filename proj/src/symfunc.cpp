#include "equisyz/symfunc.hpp"

#include <algorithm>
#include <limits>
#include <mutex>

#include "equisyz/error.hpp"

namespace equisyz {

SchurSeries::SchurSeries(int degree) : degree_(degree) {
    if (degree < 0)
        throw InputError("truncation degree must be nonnegative");
}

SchurSeries::SchurSeries(int degree, Terms terms) : SchurSeries(degree) {
    for (auto& [lambda, c] : terms)
        if (c != 0 && lambda.size() <= degree_)
            terms_.emplace(lambda, std::move(c));
}

SchurSeries SchurSeries::one(int degree) { return term(Partition{}, 1, degree); }

SchurSeries SchurSeries::term(const Partition& lambda, const Integer& c, int degree) {
    SchurSeries out(degree);
    if (c != 0 && lambda.size() <= degree)
        out.terms_.emplace(lambda, c);
    return out;
}

Integer SchurSeries::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Integer(0) : it->second;
}

int SchurSeries::lowest_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.begin()->first.size();
}

int SchurSeries::highest_degree() const noexcept {
    return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

SchurSeries SchurSeries::truncate_to(int k) const {
    if (k < 0 || k > degree_)
        throw InputError("truncate_to: degree out of range");
    SchurSeries out(k);
    for (const auto& [lambda, c] : terms_) {
        if (lambda.size() > k)
            break;
        out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    }
    return out;
}

SchurSeries SchurSeries::graded_part(int d) const {
    if (d < 0 || d > degree_)
        throw InputError("graded_part: degree out of range");
    SchurSeries out(degree_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.size() == d)
            out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    return out;
}

void SchurSeries::add_scaled(const SchurSeries& other, const Integer& c) {
    if (other.degree_ < degree_)
        *this = truncate_to(other.degree_);
    for (const auto& [lambda, v] : other.terms_) {
        if (lambda.size() > degree_)
            break;
        auto [it, inserted] = terms_.try_emplace(lambda, 0);
        it->second += c * v;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SchurSeries& SchurSeries::operator+=(const SchurSeries& other) {
    add_scaled(other, 1);
    return *this;
}

SchurSeries& SchurSeries::operator-=(const SchurSeries& other) {
    add_scaled(other, -1);
    return *this;
}

SchurSeries& SchurSeries::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, v] : terms_)
        v *= c;
    return *this;
}

std::string SchurSeries::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [lambda, c] : terms_) {
        const bool negative = c < 0;
        const Integer mag = abs(c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (lambda.empty()) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str();
        out += "s" + lambda.to_string();
    }
    return out;
}

namespace {

std::mutex product_mutex;
std::map<std::pair<Partition, Partition>, SchurSeries::Terms> product_cache;

} // namespace

const SchurSeries::Terms& schur_product(const Partition& mu, const Partition& nu) {
    auto key = mu <= nu ? std::make_pair(mu, nu) : std::make_pair(nu, mu);
    {
        std::lock_guard lock(product_mutex);
        if (auto it = product_cache.find(key); it != product_cache.end())
            return it->second;
    }
    SchurSeries::Terms expansion;
    for (const auto& lambda : partitions_of(mu.size() + nu.size())) {
        if (!lambda.contains(mu) || !lambda.contains(nu))
            continue;
        Integer c = lr_coefficient(lambda, mu, nu);
        if (c != 0)
            expansion.emplace(lambda, std::move(c));
    }
    std::lock_guard lock(product_mutex);
    return product_cache.try_emplace(std::move(key), std::move(expansion)).first->second;
}

SchurSeries operator*(const SchurSeries& a, const SchurSeries& b) {
    const int degree = std::min(a.degree(), b.degree());
    SchurSeries::Terms acc;
    for (const auto& [mu, x] : a.terms()) {
        if (mu.size() > degree)
            break;
        for (const auto& [nu, y] : b.terms()) {
            if (mu.size() + nu.size() > degree)
                break;
            const Integer xy = x * y;
            for (const auto& [lambda, c] : schur_product(mu, nu))
                acc[lambda] += xy * c;
        }
    }
    return SchurSeries(degree, std::move(acc));
}

SchurSeries sigma(int degree) {
    SchurSeries::Terms terms;
    for (int i = 0; i <= degree; ++i)
        terms.emplace(i == 0 ? Partition{} : Partition{i}, 1);
    return SchurSeries(degree, std::move(terms));
}

SchurSeries add(const SchurSeries& f, const SchurSeries& g) { return f + g; }
SchurSeries negate(const SchurSeries& f) { return -f; }
SchurSeries multiply(const SchurSeries& f, const SchurSeries& g) { return f * g; }

SchurSeries power(const SchurSeries& f, int k) {
    if (k < 0)
        throw InputError("power: negative exponent, use invert");
    SchurSeries result = SchurSeries::one(f.degree());
    SchurSeries base = f;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

SchurSeries invert(const SchurSeries& f) {
    const Integer f0 = f.coefficient(Partition{});
    if (f0 != 1 && f0 != -1)
        throw NotInvertible("series is not invertible: constant term " + f0.get_str());
    const int degree = f.degree();
    std::vector<SchurSeries> fparts;
    std::vector<SchurSeries> gparts;
    for (int d = 0; d <= degree; ++d)
        fparts.push_back(f.graded_part(d));

    SchurSeries g = SchurSeries::term(Partition{}, f0, degree);
    gparts.push_back(g);
    for (int d = 1; d <= degree; ++d) {
        SchurSeries acc(degree);
        for (int e = 1; e <= d; ++e)
            if (!fparts[e].is_zero() && !gparts[d - e].is_zero())
                acc += fparts[e] * gparts[d - e];
        acc *= -f0;
        g += acc;
        gparts.push_back(std::move(acc));
    }
    return g;
}

SchurSeries omega(const SchurSeries& f) {
    SchurSeries::Terms terms;
    for (const auto& [lambda, c] : f.terms())
        terms.emplace(conjugate(lambda), c);
    return SchurSeries(f.degree(), std::move(terms));
}

Integer evaluate_dimension(const SchurSeries& f, int n, int d) {
    if (d < 0 || d > f.degree())
        throw InputError("evaluate_dimension: degree out of range");
    Integer total = 0;
    for (const auto& [lambda, c] : f.terms())
        if (lambda.size() == d)
            total += c * weyl_dimension(lambda, n);
    return total;
}

std::vector<std::vector<int>> compositions(int d, int n) {
    std::vector<std::vector<int>> out;
    if (n <= 0)
        return out;
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            current[pos] = left;
            out.push_back(current);
            return;
        }
        for (int x = left; x >= 0; --x) {
            current[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, d);
    return out;
}

WeightTable weight_multiplicities(const SchurSeries& f, int n, int d) {
    WeightTable out;
    std::map<Partition, Integer> dominant;
    for (const auto& mu : partitions_of(d, n)) {
        Integer total = 0;
        for (const auto& [lambda, c] : f.terms())
            if (lambda.size() == d && static_cast<int>(lambda.length()) <= n)
                total += c * kostka_number(lambda, mu.parts());
        dominant.emplace(mu, std::move(total));
    }
    for (auto& w : compositions(d, n)) {
        const Integer& value = dominant.at(Partition::from_weight(w));
        if (value != 0)
            out.emplace(std::move(w), value);
    }
    return out;
}

SchurSeries from_weight_multiplicities(const WeightTable& weights, int d, int n) {
    for (const auto& [w, m] : weights) {
        int total = 0;
        for (int x : w) {
            if (x < 0)
                throw ValidationError("weight with a negative entry is not polynomial");
            total += x;
        }
        if (static_cast<int>(w.size()) != n || total != d)
            throw InputError("weight vector does not match degree/rank");
    }
    auto lookup = [&](const std::vector<int>& w) {
        auto it = weights.find(w);
        return it == weights.end() ? Integer(0) : it->second;
    };

    std::map<Partition, Integer> residual;
    for (const auto& lambda : partitions_of(d, n)) {
        std::vector<int> padded = lambda.parts();
        padded.resize(static_cast<std::size_t>(n), 0);
        residual.emplace(lambda, lookup(padded));
    }
    for (const auto& w : compositions(d, n)) {
        const Partition sorted = Partition::from_weight(w);
        if (lookup(w) != residual.at(sorted))
            throw ValidationError("weight multiplicities are not symmetric at weight " +
                                  sorted.to_string());
    }

    // partitions_of lists partitions lexicographically decreasing, a linear
    // extension of dominance, so each residual is final when visited.
    SchurSeries::Terms result;
    for (const auto& lambda : partitions_of(d, n)) {
        const Integer m = residual.at(lambda);
        if (m < 0)
            throw ValidationError("not a polynomial character: negative residual at " +
                                  lambda.to_string());
        if (m == 0)
            continue;
        for (auto& [mu, r] : residual)
            if (lambda.dominates(mu))
                r -= m * kostka_number(lambda, mu.parts());
        result.emplace(lambda, m);
    }
    return SchurSeries(d, std::move(result));
}

nlohmann::json integer_to_json(const Integer& value) {
    if (value.fits_slong_p())
        return static_cast<long long>(value.get_si());
    return value.get_str();
}

nlohmann::json to_json(const SchurSeries& f) {
    auto out = nlohmann::json::array();
    for (const auto& [lambda, c] : f.terms())
        out.push_back({lambda.parts(), integer_to_json(c)});
    return out;
}

} // namespace equisyz
