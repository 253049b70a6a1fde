#include "equisyz/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "equisyz/error.hpp"

namespace equisyz {

OracleCaps OracleCaps::parse(const std::string& text) {
    OracleCaps caps;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || value <= 0)
            throw InputError("EQUISYZ_CAPS: bad value \"" + s + "\"");
        return value;
    };
    if (text.find('=') == std::string::npos) {
        const int all = to_int(text);
        caps.max_m = caps.max_n = caps.max_d = caps.max_t = all;
        return caps;
    }
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("EQUISYZ_CAPS: expected key=value, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        const int value = to_int(item.substr(eq + 1));
        if (key == "m")
            caps.max_m = value;
        else if (key == "n")
            caps.max_n = value;
        else if (key == "d")
            caps.max_d = value;
        else if (key == "t")
            caps.max_t = value;
        else
            throw InputError("EQUISYZ_CAPS: unknown key \"" + key + "\"");
    }
    return caps;
}

OracleCaps OracleCaps::from_env() {
    const char* raw = std::getenv("EQUISYZ_CAPS");
    return raw && *raw ? parse(raw) : OracleCaps{};
}

void OracleCaps::check(int m, int n, int d_max, int t) const {
    auto fail = [](const std::string& what, int value, int cap) {
        throw CapExceeded(what + "=" + std::to_string(value) + " exceeds the oracle cap " +
                          std::to_string(cap) + " (raise it with EQUISYZ_CAPS)");
    };
    if (m > max_m)
        fail("m (dim W)", m, max_m);
    if (n > max_n)
        fail("n (dim V)", n, max_n);
    if (d_max > max_d)
        fail("d_max", d_max, max_d);
    if (t > max_t)
        fail("t (subspaces)", t, max_t);
}

const WeightTable& GradedCharacter::at(int d) const {
    auto it = degrees.find(d);
    if (it == degrees.end())
        throw InputError("degree " + std::to_string(d) + " was not computed");
    return it->second;
}

Integer GradedCharacter::total_dimension(int d) const {
    Integer total = 0;
    for (const auto& [w, mult] : at(d))
        total += mult;
    return total;
}

Integer monomial_space_dimension(int m, int n, int d, bool exterior) {
    Integer out;
    const unsigned long vars = static_cast<unsigned long>(m * n);
    if (exterior)
        mpz_bin_uiui(out.get_mpz_t(), vars, static_cast<unsigned long>(d));
    else
        mpz_bin_uiui(out.get_mpz_t(), vars + static_cast<unsigned long>(d) - 1,
                     static_cast<unsigned long>(d));
    return d == 0 ? Integer(1) : out;
}

CoordinateIdealBasis coordinate_ideal_basis(const Arrangement& arr, int n) {
    if (n < 1)
        throw InputError("dim V must be positive");
    CoordinateIdealBasis out;
    out.m = static_cast<int>(arr.ambient_dim());
    out.n = n;
    const std::size_t vars = arr.ambient_dim() * static_cast<std::size_t>(n);
    for (const auto& y : arr.subspaces()) {
        std::vector<LinearForm> forms;
        const auto ann = annihilator(y).basis();
        for (std::size_t r = 0; r < ann.rows(); ++r)
            for (int i = 0; i < n; ++i) {
                LinearForm f{RationalVector(vars), i};
                for (int j = 0; j < out.m; ++j)
                    f.coeffs[static_cast<std::size_t>(j * n + i)] = ann(r, static_cast<std::size_t>(j));
                forms.push_back(std::move(f));
            }
        out.generators.push_back(std::move(forms));
    }
    return out;
}

namespace {

using Weight = std::vector<int>;

// Commutative monomials as exponent vectors.
struct SymmetricAlgebra {
    using Key = std::vector<std::uint8_t>;

    int vars;
    int n;

    Key unit() const { return Key(static_cast<std::size_t>(vars), 0); }
    Key variable(int v) const {
        Key k = unit();
        k[static_cast<std::size_t>(v)] = 1;
        return k;
    }
    std::optional<std::pair<Key, int>> multiply(const Key& a, const Key& b) const {
        Key out = a;
        for (std::size_t v = 0; v < out.size(); ++v)
            out[v] = static_cast<std::uint8_t>(out[v] + b[v]);
        return std::make_pair(std::move(out), 1);
    }
    Weight weight(const Key& k) const {
        Weight w(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < vars; ++v)
            w[static_cast<std::size_t>(v % n)] += k[static_cast<std::size_t>(v)];
        return w;
    }
    std::vector<Key> monomials(int d) const {
        std::vector<Key> out;
        Key current = unit();
        auto rec = [&](auto&& self, int v, int left) -> void {
            if (v == vars - 1) {
                current[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(left);
                out.push_back(current);
                return;
            }
            for (int e = left; e >= 0; --e) {
                current[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e);
                self(self, v + 1, left - e);
            }
        };
        if (vars == 0)
            return d == 0 ? std::vector<Key>{Key{}} : std::vector<Key>{};
        rec(rec, 0, d);
        return out;
    }
};

// Square-free monomials as bitmasks over the ordered variables.
struct ExteriorAlgebra {
    using Key = std::uint64_t;

    int vars;
    int n;

    Key unit() const { return 0; }
    Key variable(int v) const { return Key{1} << v; }
    std::optional<std::pair<Key, int>> multiply(Key a, Key b) const {
        if (a & b)
            return std::nullopt;
        // Sign of sorting a-then-b: one transposition per pair (x in a, y in b)
        // with x > y.
        int swaps = 0;
        for (Key rest = b; rest; rest &= rest - 1) {
            const int y = std::countr_zero(rest);
            swaps += std::popcount(a >> (y + 1));
        }
        return std::make_pair(a | b, swaps % 2 == 0 ? 1 : -1);
    }
    Weight weight(Key k) const {
        Weight w(static_cast<std::size_t>(n), 0);
        for (; k; k &= k - 1)
            ++w[static_cast<std::size_t>(std::countr_zero(k) % n)];
        return w;
    }
    std::vector<Key> monomials(int d) const {
        std::vector<Key> out;
        auto rec = [&](auto&& self, int start, int left, Key acc) -> void {
            if (left == 0) {
                out.push_back(acc);
                return;
            }
            for (int v = start; v <= vars - left; ++v)
                self(self, v + 1, left - 1, acc | (Key{1} << v));
        };
        rec(rec, 0, d, 0);
        return out;
    }
};

template <class Algebra>
using Poly = std::map<typename Algebra::Key, Rational>;

template <class Algebra>
Poly<Algebra> times(const Algebra& alg, const Poly<Algebra>& a, const Poly<Algebra>& b) {
    Poly<Algebra> out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            auto prod = alg.multiply(ka, kb);
            if (!prod)
                continue;
            auto& slot = out[prod->first];
            if (prod->second > 0)
                slot += ca * cb;
            else
                slot -= ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

template <class Algebra>
Poly<Algebra> as_poly(const Algebra& alg, const LinearForm& f) {
    Poly<Algebra> out;
    for (std::size_t v = 0; v < f.coeffs.size(); ++v)
        if (f.coeffs[v] != 0)
            out.emplace(alg.variable(static_cast<int>(v)), f.coeffs[v]);
    return out;
}

// Degree-d monomials split by V-weight, with a column index inside each
// weight space.
template <class Algebra>
struct WeightBuckets {
    std::map<Weight, std::map<typename Algebra::Key, std::size_t>> index;

    WeightBuckets(const Algebra& alg, int d) {
        for (auto& w : compositions(d, alg.n))
            index.try_emplace(std::move(w));
        for (auto& k : alg.monomials(d)) {
            auto& bucket = index.at(alg.weight(k));
            bucket.emplace(std::move(k), bucket.size());
        }
    }

    RationalVector vectorize(const Weight& w, const Poly<Algebra>& p) const {
        const auto& bucket = index.at(w);
        RationalVector out(bucket.size());
        for (const auto& [k, c] : p)
            out[bucket.at(k)] = c;
        return out;
    }
};

Weight add_weights(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

template <class Algebra>
WeightTable product_degree(const Algebra& alg, const CoordinateIdealBasis& basis, int d) {
    const int t = static_cast<int>(basis.generators.size());
    WeightTable table;
    if (d < t)
        return table;
    const WeightBuckets<Algebra> buckets(alg, d);
    std::map<Weight, IncrementalRank> ranks;
    for (const auto& [w, bucket] : buckets.index)
        ranks.emplace(w, IncrementalRank(bucket.size()));
    std::size_t open = 0;
    for (const auto& [w, r] : ranks)
        open += r.full() ? 0 : 1;

    std::vector<std::vector<std::pair<Poly<Algebra>, Weight>>> factors;
    for (const auto& forms : basis.generators) {
        std::vector<std::pair<Poly<Algebra>, Weight>> list;
        for (const auto& f : forms) {
            Weight w(static_cast<std::size_t>(alg.n), 0);
            w[static_cast<std::size_t>(f.weight_index)] = 1;
            list.emplace_back(as_poly(alg, f), std::move(w));
        }
        factors.push_back(std::move(list));
    }
    std::vector<std::pair<typename Algebra::Key, Weight>> tails;
    for (auto& k : alg.monomials(d - t)) {
        Weight w = alg.weight(k);
        tails.emplace_back(std::move(k), std::move(w));
    }

    auto rec = [&](auto&& self, std::size_t k, const Poly<Algebra>& acc, const Weight& accw) -> void {
        if (open == 0 || acc.empty())
            return;
        if (k == factors.size()) {
            for (const auto& [tail, tailw] : tails) {
                const Weight w = add_weights(accw, tailw);
                auto& rank = ranks.at(w);
                if (rank.full())
                    continue;
                const Poly<Algebra> row = times(alg, acc, Poly<Algebra>{{tail, Rational(1)}});
                if (row.empty())
                    continue;
                rank.add(buckets.vectorize(w, row));
                if (rank.full() && --open == 0)
                    return;
            }
            return;
        }
        for (const auto& [form, fw] : factors[k]) {
            self(self, k + 1, times(alg, acc, form), add_weights(accw, fw));
            if (open == 0)
                return;
        }
    };
    rec(rec, 0, Poly<Algebra>{{alg.unit(), Rational(1)}}, Weight(static_cast<std::size_t>(alg.n), 0));

    for (const auto& [w, r] : ranks)
        if (r.rank() > 0)
            table.emplace(w, Integer(static_cast<unsigned long>(r.rank())));
    return table;
}

void check_common(const Arrangement& arr, int n, int d_max, const OracleCaps& caps) {
    if (n < 1)
        throw InputError("dim V must be positive");
    if (d_max < 0)
        throw InputError("d_max must be nonnegative");
    caps.check(static_cast<int>(arr.ambient_dim()), n, d_max, static_cast<int>(arr.size()));
}

} // namespace

GradedCharacter product_ideal_character(const Arrangement& arr, int n, int d_max,
                                        const OracleCaps& caps) {
    check_common(arr, n, d_max, caps);
    const SymmetricAlgebra alg{static_cast<int>(arr.ambient_dim()) * n, n};
    const auto basis = coordinate_ideal_basis(arr, n);
    GradedCharacter out;
    out.n = n;
    for (int d = 0; d <= d_max; ++d)
        out.degrees.emplace(d, product_degree(alg, basis, d));
    return out;
}

GradedCharacter wedge_ideal_character(const Arrangement& arr, int n, int d_max,
                                      const OracleCaps& caps) {
    check_common(arr, n, d_max, caps);
    const int vars = static_cast<int>(arr.ambient_dim()) * n;
    if (d_max > vars)
        throw InputError("d_max=" + std::to_string(d_max) + " exceeds m*n=" + std::to_string(vars) +
                         "; the exterior algebra vanishes there");
    if (vars > 64)
        throw CapExceeded("exterior oracle supports at most 64 variables");
    const ExteriorAlgebra alg{vars, n};
    const auto basis = coordinate_ideal_basis(arr, n);
    GradedCharacter out;
    out.n = n;
    for (int d = 0; d <= d_max; ++d)
        out.degrees.emplace(d, product_degree(alg, basis, d));
    return out;
}

GradedCharacter intersection_ideal_character(const Arrangement& arr, int n, int d_max,
                                             const OracleCaps& caps) {
    check_common(arr, n, d_max, caps);
    const SymmetricAlgebra alg{static_cast<int>(arr.ambient_dim()) * n, n};
    const auto basis = coordinate_ideal_basis(arr, n);
    GradedCharacter out;
    out.n = n;
    for (int d = 0; d <= d_max; ++d) {
        const WeightBuckets<SymmetricAlgebra> buckets(alg, d);
        WeightTable table;
        if (arr.size() == 0) {
            for (const auto& [w, bucket] : buckets.index)
                if (!bucket.empty())
                    table.emplace(w, Integer(static_cast<unsigned long>(bucket.size())));
            out.degrees.emplace(d, std::move(table));
            continue;
        }
        if (d == 0) {
            out.degrees.emplace(d, std::move(table));
            continue;
        }
        const WeightBuckets<SymmetricAlgebra> lower(alg, d - 1);
        for (const auto& [w, bucket] : buckets.index) {
            std::vector<Subspace> pieces;
            for (const auto& forms : basis.generators) {
                std::vector<RationalVector> rows;
                for (const auto& f : forms) {
                    const auto i = static_cast<std::size_t>(f.weight_index);
                    if (w[i] == 0)
                        continue;
                    Weight rest = w;
                    --rest[i];
                    const auto poly = as_poly(alg, f);
                    for (const auto& [k, col] : lower.index.at(rest))
                        rows.push_back(
                            buckets.vectorize(w, times(alg, poly, Poly<SymmetricAlgebra>{{k, Rational(1)}})));
                }
                pieces.push_back(subspace_from_vectors(rows, bucket.size()));
                if (pieces.back().dim() == 0)
                    break;
            }
            const Subspace meet = intersect(pieces);
            if (meet.dim() > 0)
                table.emplace(w, Integer(static_cast<unsigned long>(meet.dim())));
        }
        out.degrees.emplace(d, std::move(table));
    }
    return out;
}

SchurSeries character_to_schur(const GradedCharacter& gc, int d) {
    if (gc.n < d)
        throw InputError("Schur expansion needs dim V >= d (n=" + std::to_string(gc.n) +
                         ", d=" + std::to_string(d) + ")");
    return from_weight_multiplicities(gc.at(d), d, gc.n);
}

bool is_weight_symmetric(const GradedCharacter& gc) {
    for (const auto& [d, table] : gc.degrees)
        for (const auto& [w, mult] : table)
            for (std::size_t a = 0; a < w.size(); ++a)
                for (std::size_t b = a + 1; b < w.size(); ++b) {
                    Weight swapped = w;
                    std::swap(swapped[a], swapped[b]);
                    auto it = table.find(swapped);
                    if (it == table.end() || it->second != mult)
                        return false;
                }
    return true;
}

} // namespace equisyz
