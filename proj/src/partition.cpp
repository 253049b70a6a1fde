#include "equisyz/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "equisyz/error.hpp"

namespace equisyz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InputError("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must be weakly decreasing: " + to_string());
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::from_weight(std::span<const int> weight) {
    std::vector<int> parts;
    for (int w : weight) {
        if (w < 0)
            throw InputError("weight entries must be nonnegative");
        if (w > 0)
            parts.push_back(w);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length())
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

bool Partition::dominates(const Partition& other) const noexcept {
    int a = 0;
    int b = 0;
    const std::size_t len = std::max(length(), other.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += (*this)[i];
        b += other[i];
        if (a < b)
            return false;
    }
    return a == b;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0)
        return c;
    // Larger sequence first within a degree.
    return b.parts_ <=> a.parts_;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts())
        h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    const int first = lambda[0];
    out.reserve(static_cast<std::size_t>(first));
    for (int j = 1; j <= first; ++j) {
        int count = 0;
        for (int part : lambda.parts())
            if (part >= j)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (parts_left == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, current, out);
        current.pop_back();
    }
}

// Fills the skew shape outer/inner row by row, each row right to left, which
// is the order of the reverse reading word.
class LrEnumerator {
public:
    LrEnumerator(const Partition& outer, const Partition& inner, const Partition& content)
        : outer_(outer), inner_(inner), content_(content.parts()),
          used_(content.length() + 1, 0), rows_(outer.length()) {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            rows_[r].assign(static_cast<std::size_t>(outer[r]), 0);
    }

    long count() { return fill(0, outer_[0] - 1); }

private:
    long fill(std::size_t row, int col) {
        if (row == rows_.size())
            return 1;
        if (col < inner_[row])
            return row + 1 == rows_.size() ? 1 : fill(row + 1, outer_[row + 1] - 1);

        const int k = static_cast<int>(content_.size());
        int upper = k;
        if (col + 1 < outer_[row])
            upper = std::min(upper, rows_[row][col + 1]);
        int lower = 1;
        if (row > 0 && col >= inner_[row - 1])
            lower = rows_[row - 1][col] + 1;

        long total = 0;
        for (int v = lower; v <= upper; ++v) {
            if (used_[v] >= content_[v - 1])
                continue;
            if (v > 1 && used_[v] + 1 > used_[v - 1])
                continue;
            ++used_[v];
            rows_[row][col] = v;
            total += fill(row, col - 1);
            --used_[v];
        }
        rows_[row][col] = 0;
        return total;
    }

    const Partition& outer_;
    const Partition& inner_;
    const std::vector<int>& content_;
    std::vector<int> used_;
    std::vector<std::vector<int>> rows_;
};

using LrKey = std::tuple<Partition, Partition, Partition>;

std::mutex lr_mutex;
std::map<LrKey, long> lr_cache;

long kostka_rec(const Partition& shape, std::span<const int> weight,
                     std::map<std::pair<Partition, std::size_t>, long>& memo) {
    if (weight.empty())
        return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, weight.size());
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int strip = weight.back();
    const auto rest = weight.first(weight.size() - 1);
    long total = 0;
    // Remove a horizontal strip of size `strip`: the inner row i lies between
    // shape[i+1] and shape[i].
    std::vector<int> inner(shape.length(), 0);
    auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == shape.length()) {
            if (left != 0)
                return;
            std::vector<int> parts;
            for (int x : inner)
                if (x > 0)
                    parts.push_back(x);
            total += kostka_rec(Partition(std::move(parts)), rest, memo);
            return;
        }
        const int hi = shape[i];
        const int lo = shape[i + 1];
        for (int x = hi; x >= lo; --x) {
            if (hi - x > left)
                break;
            inner[i] = x;
            self(self, i + 1, left - (hi - x));
        }
    };
    recurse(recurse, 0, strip);
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

std::vector<Partition> partitions_of(int d, std::optional<int> max_parts) {
    std::vector<Partition> out;
    if (d < 0)
        throw InputError("partitions_of: negative degree");
    std::vector<int> current;
    partitions_rec(d, d, max_parts.value_or(d), current, out);
    return out;
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu))
        return 0;
    if (nu.empty())
        return lambda == mu ? 1 : 0;

    LrKey key{lambda, mu, nu};
    {
        std::lock_guard lock(lr_mutex);
        if (auto it = lr_cache.find(key); it != lr_cache.end())
            return it->second;
    }
    const long value = LrEnumerator(lambda, mu, nu).count();
    std::lock_guard lock(lr_mutex);
    lr_cache.emplace(std::move(key), value);
    return value;
}

Integer kostka_number(const Partition& lambda, std::span<const int> weight) {
    int total = 0;
    for (int w : weight) {
        if (w < 0)
            throw InputError("kostka_number: negative content entry");
        total += w;
    }
    if (total != lambda.size())
        throw InputError("kostka_number: content does not sum to |lambda|");
    std::vector<int> nonzero;
    for (int w : weight)
        if (w > 0)
            nonzero.push_back(w);
    std::map<std::pair<Partition, std::size_t>, long> memo;
    return kostka_rec(lambda, nonzero, memo);
}

Integer weyl_dimension(const Partition& lambda, int n) {
    if (n < 1)
        throw InputError("weyl_dimension: n must be positive");
    if (static_cast<int>(lambda.length()) > n)
        return 0;
    const Partition transposed = conjugate(lambda);
    Integer num = 1;
    Integer den = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = transposed[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            num *= n + j - static_cast<int>(i);
            den *= arm + leg + 1;
        }
    }
    return num / den;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        return false;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        if (lambda[i + 1] > mu[i])
            return false;
    return true;
}

} // namespace equisyz
