#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace equisyz {

using Integer = mpz_class;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0.
///
/// Partitions are totally ordered graded reverse-lexicographically: first by
/// size, then within one size the lexicographically larger sequence comes
/// first, so partitions of 3 sort as (3) < (2,1) < (1,1,1). Every container
/// keyed on Partition in this library iterates in that order.
class Partition {
public:
    Partition() = default;
    /// Throws InputError unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts, drops zeros. Throws InputError on negative entries.
    static Partition from_weight(std::span<const int> weight);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Part i (0-based), or 0 past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// True iff every part of `inner` fits inside this diagram.
    bool contains(const Partition& inner) const noexcept;
    /// Dominance order on partitions of the same size.
    bool dominates(const Partition& other) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// All partitions of d, optionally limited to at most max_parts parts, in the
/// canonical order (lexicographically decreasing within the degree).
std::vector<Partition> partitions_of(int d, std::optional<int> max_parts = std::nullopt);

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}. Counts LR skew tableaux
/// of shape lambda/mu and content nu. Results are memoized; safe to call
/// concurrently.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Number of semistandard tableaux of shape lambda and content `weight`
/// (a composition; zero entries allowed).
Integer kostka_number(const Partition& lambda, std::span<const int> weight);

/// dim S_lambda(K^n) by the hook-content formula.
Integer weyl_dimension(const Partition& lambda, int n);

/// True iff lambda/mu is a horizontal strip (no two boxes in one column).
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace equisyz
