#include "equisyz/arrangement.hpp"

#include <bit>
#include <map>

#include "equisyz/error.hpp"

namespace equisyz {

int popcount(SubsetMask mask) { return std::popcount(mask); }

Arrangement::Arrangement(std::size_t ambient_dim, std::vector<Subspace> subspaces)
    : ambient_(ambient_dim), subspaces_(std::move(subspaces)) {
    if (ambient_dim == 0)
        throw InputError("ambient dimension must be positive");
    for (std::size_t i = 0; i < subspaces_.size(); ++i)
        if (subspaces_[i].ambient_dim() != ambient_)
            throw InputError("subspace " + std::to_string(i + 1) + " lives in K^" +
                             std::to_string(subspaces_[i].ambient_dim()) + ", expected K^" +
                             std::to_string(ambient_));
}

Polymatroid::Polymatroid(std::size_t ground_size, std::vector<int> ranks)
    : ground_(ground_size), ranks_(std::move(ranks)) {
    if (ranks_.size() != (std::size_t{1} << ground_))
        throw InputError("polymatroid rank table has the wrong size");
}

Polymatroid polymatroid_of(const Arrangement& arr, int max_subspaces) {
    const std::size_t t = arr.size();
    if (static_cast<int>(t) > max_subspaces || t > 30)
        throw CapExceeded("arrangement has " + std::to_string(t) + " subspaces; the cap is " +
                          std::to_string(max_subspaces));
    const std::size_t m = arr.ambient_dim();
    const std::size_t count = std::size_t{1} << t;
    std::vector<Subspace> meet(count, full_space(m));
    std::vector<int> ranks(count, 0);
    for (std::size_t mask = 1; mask < count; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t rest = mask & (mask - 1);
        meet[mask] = rest == 0 ? arr[low] : intersect(meet[rest], arr[low]);
        ranks[mask] = static_cast<int>(m - meet[mask].dim());
    }
    return Polymatroid(t, std::move(ranks));
}

ProductSeriesSolver::ProductSeriesSolver(Polymatroid pm, std::size_t ambient_dim, int degree)
    : pm_(std::move(pm)), ambient_(ambient_dim), degree_(degree) {
    if (degree_ < static_cast<int>(pm_.ground_size()))
        throw InputError("truncation below generation degree: D=" + std::to_string(degree_) +
                         " < t=" + std::to_string(pm_.ground_size()));
    const std::size_t count = std::size_t{1} << pm_.ground_size();
    p_.resize(count);
    h_.resize(count);
}

const SchurSeries& ProductSeriesSolver::sigma_power(int k) {
    if (k < 0)
        throw InputError("negative power of sigma");
    if (sigma_powers_.size() <= static_cast<std::size_t>(k))
        sigma_powers_.resize(static_cast<std::size_t>(k) + 1);
    auto& slot = sigma_powers_[static_cast<std::size_t>(k)];
    if (!slot)
        slot = k == 0 ? SchurSeries::one(degree_) : sigma_power(k - 1) * sigma(degree_);
    return *slot;
}

const SchurSeries& ProductSeriesSolver::p_polynomial(SubsetMask subset) {
    auto& slot = p_.at(subset);
    if (slot)
        return *slot;
    if (subset == 0) {
        slot = SchurSeries::one(degree_);
        return *slot;
    }
    const int size = popcount(subset);
    const int rank = pm_.rank(subset);
    // Group the proper subsets by rank so sigma^k is multiplied once per k.
    std::map<int, SchurSeries> by_gap;
    for (SubsetMask c = (subset - 1) & subset;; c = (c - 1) & subset) {
        const SchurSeries& pc = p_polynomial(c);
        const int sign = ((size - popcount(c)) % 2 == 0) ? 1 : -1;
        auto [it, inserted] = by_gap.try_emplace(rank - pm_.rank(c), degree_);
        if (sign > 0)
            it->second += pc;
        else
            it->second -= pc;
        if (c == 0)
            break;
    }
    SchurSeries rhs(degree_);
    for (const auto& [gap, acc] : by_gap)
        rhs -= sigma_power(gap) * acc;
    // keep the truncation degree; only terms of degree <= |B| - 1 survive
    SchurSeries::Terms low;
    for (const auto& [lambda, c] : rhs.terms())
        if (lambda.size() <= size - 1)
            low.emplace(lambda, c);
    slot = SchurSeries(degree_, std::move(low));
    return *slot;
}

const SchurSeries& ProductSeriesSolver::hilbert_series(SubsetMask subset) {
    auto& slot = h_.at(subset);
    if (slot)
        return *slot;
    const int m = static_cast<int>(ambient_);
    if (subset == 0) {
        slot = sigma_power(m);
        return *slot;
    }
    SchurSeries acc = sigma_power(m - pm_.rank(subset)) * p_polynomial(subset);
    for (SubsetMask c = (subset - 1) & subset;; c = (c - 1) & subset) {
        if (popcount(c) % 2 == 0)
            acc -= hilbert_series(c);
        else
            acc += hilbert_series(c);
        if (c == 0)
            break;
    }
    if (popcount(subset) % 2 != 0)
        acc *= -1;
    slot = std::move(acc);
    return *slot;
}

SchurSeries p_polynomial(const Polymatroid& pm, SubsetMask subset, int degree) {
    ProductSeriesSolver solver(pm, 0, degree);
    return solver.p_polynomial(subset);
}

SchurSeries hilbert_product(const Arrangement& arr, int degree) {
    ProductSeriesSolver solver(polymatroid_of(arr), arr.ambient_dim(), degree);
    return solver.hilbert_series(solver.polymatroid().full_set());
}

LinesCheck check_lines_leading_terms(const Arrangement& arr, int degree) {
    const std::size_t t = arr.size();
    for (std::size_t i = 0; i < t; ++i) {
        if (arr[i].dim() != 1)
            throw InputError("subspace " + std::to_string(i + 1) + " is not a line");
        for (std::size_t j = 0; j < i; ++j)
            if (arr[i] == arr[j])
                throw InputError("lines " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                 " coincide");
    }
    LinesCheck out;
    out.hilbert = hilbert_product(arr, degree);
    const int m = static_cast<int>(arr.ambient_dim());
    const SchurSeries leading =
        power(sigma(degree), m) - sigma(degree) * Integer(static_cast<unsigned long>(t));
    const SchurSeries diff = out.hilbert - leading;

    for (int d = static_cast<int>(t); d <= degree; ++d) {
        if (!diff.graded_part(d).is_zero()) {
            out.first_disagreement = d;
            break;
        }
    }
    out.agrees = out.first_disagreement < 0;
    out.agreement_from = diff.highest_degree() < degree ? diff.highest_degree() + 1 : -1;
    return out;
}

} // namespace equisyz
