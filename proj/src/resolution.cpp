#include "equisyz/resolution.hpp"

#include <sstream>

#include "equisyz/error.hpp"

namespace equisyz {

BettiTable betti_from_series(const SchurSeries& h, int ambient_dim, int t) {
    if (t < 0 || t > h.degree())
        throw InputError("generation degree " + std::to_string(t) + " outside the truncation window");
    const SchurSeries g = h * power(invert(sigma(h.degree())), ambient_dim);

    BettiTable table;
    table.t = t;
    table.degree = h.degree();
    const int low = g.lowest_degree();
    if (low >= 0 && low < t)
        throw ValidationError("generation degree mismatch: sigma^-m H has a term in degree " +
                              std::to_string(low) + " < t=" + std::to_string(t));
    if (!h.is_zero() && low != t)
        throw ValidationError("generation degree mismatch: no generators in degree t=" +
                              std::to_string(t));

    for (int d = t; d <= h.degree(); ++d) {
        SchurSeries column = g.graded_part(d);
        const int sign = (d - t) % 2 == 0 ? 1 : -1;
        for (const auto& [lambda, c] : column.terms())
            if (sgn(c) != sign)
                throw ValidationError("series is not consistent with a linear resolution: degree " +
                                      std::to_string(d) + ", coefficient " + c.get_str() + " at s" +
                                      lambda.to_string());
        if (sign < 0)
            column *= -1;
        table.columns.push_back(std::move(column));
    }
    return table;
}

int regularity(const BettiTable& table) {
    int best = 0;
    bool any = false;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        const int deg = table.columns[i].highest_degree();
        if (deg < 0)
            continue;
        const int excess = deg - static_cast<int>(i);
        best = any ? std::max(best, excess) : excess;
        any = true;
    }
    if (!any)
        throw InputError("regularity of an empty Betti table");
    return best;
}

BettiTable transpose_table(const BettiTable& table) {
    BettiTable out = table;
    for (auto& column : out.columns)
        column = omega(column);
    return out;
}

SchurSeries series_from_betti(const BettiTable& table, int ambient_dim) {
    const SchurSeries sigma_m = power(sigma(table.degree), ambient_dim);
    SchurSeries out(table.degree);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        SchurSeries term = sigma_m * table.columns[i];
        if (i % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return out;
}

Integer total_multiplicity(const SchurSeries& column) {
    Integer total = 0;
    for (const auto& [lambda, c] : column.terms())
        total += c;
    return total;
}

nlohmann::json to_json(const BettiTable& table) {
    auto columns = nlohmann::json::array();
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        columns.push_back({{"i", i},
                           {"degree", static_cast<int>(i) + table.t},
                           {"terms", to_json(table.columns[i])}});
    return {{"t", table.t}, {"columns", columns}};
}

std::string render_terms(const SchurSeries& column, bool latex) {
    if (column.is_zero())
        return "0";
    std::string out;
    for (const auto& [lambda, c] : column.terms()) {
        if (!out.empty())
            out += latex ? " \\oplus " : " + ";
        out += latex ? "S_{" + lambda.to_string() + "}" : "S" + lambda.to_string();
        if (c != 1)
            out += latex ? "^{" + c.get_str() + "}" : "^" + c.get_str();
    }
    return out;
}

std::string to_markdown(const BettiTable& table) {
    std::ostringstream out;
    out << "| i | degree | Tor_i |\n|---|---|---|\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << "| " << i << " | " << static_cast<int>(i) + table.t << " | "
            << render_terms(table.columns[i], false) << " |\n";
    return out.str();
}

std::string to_latex(const BettiTable& table) {
    std::ostringstream out;
    out << "\\begin{tabular}{r r l}\n$i$ & degree & $\\mathrm{Tor}_i$ \\\\\n\\hline\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << i << " & " << static_cast<int>(i) + table.t << " & $"
            << render_terms(table.columns[i], true) << "$ \\\\\n";
    out << "\\end{tabular}\n";
    return out.str();
}

} // namespace equisyz
