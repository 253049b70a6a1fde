#include "equisyz/job.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "equisyz/error.hpp"

namespace equisyz {

namespace {

Rational parse_entry(const nlohmann::json& entry, const std::string& where) {
    if (entry.is_number_integer())
        return Rational(Integer(entry.dump()));
    if (entry.is_string())
        return parse_rational(entry.get<std::string>());
    throw InputError(where + ": entries must be integers or \"p/q\" strings, got " + entry.dump());
}

std::vector<int> subset_members(SubsetMask mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1)
            out.push_back(i + 1);
    return out;
}

std::string subset_label(SubsetMask mask) {
    std::string out = "{";
    for (int i : subset_members(mask))
        out += (out.size() > 1 ? "," : "") + std::to_string(i);
    return out + "}";
}

nlohmann::json weights_to_json(const WeightTable& table) {
    auto out = nlohmann::json::array();
    for (const auto& [w, mult] : table)
        out.push_back({w, integer_to_json(mult)});
    return out;
}

bool dominates_weightwise(const WeightTable& big, const WeightTable& small) {
    for (const auto& [w, mult] : small) {
        auto it = big.find(w);
        if (it == big.end() || it->second < mult)
            return false;
    }
    return true;
}

const char* ideal_name(IdealKind k) { return k == IdealKind::Product ? "product" : "intersection"; }

const char* side_name(Side s) {
    switch (s) {
    case Side::Symmetric:
        return "symmetric";
    case Side::Exterior:
        return "exterior";
    case Side::Both:
        break;
    }
    return "both";
}

bool wants_symmetric(Side s) { return s != Side::Exterior; }
bool wants_exterior(Side s) { return s != Side::Symmetric; }

void note(std::ostream* log, const std::string& text) {
    if (log)
        *log << text << '\n';
}

SchurSeries series_from_oracle(const GradedCharacter& gc, int degree) {
    SchurSeries h(degree);
    for (int d = 0; d <= degree; ++d) {
        const SchurSeries part = character_to_schur(gc, d);
        h += SchurSeries(degree, part.terms());
    }
    return h;
}

} // namespace

Arrangement parse_arrangement(const nlohmann::json& doc, int max_subspaces) {
    if (!doc.is_object())
        throw InputError("arrangement document must be a JSON object");
    if (!doc.contains("ambient_dim") || !doc["ambient_dim"].is_number_integer() ||
        doc["ambient_dim"].get<long long>() < 1)
        throw InputError("\"ambient_dim\" must be a positive integer");
    if (!doc.contains("subspaces") || !doc["subspaces"].is_array())
        throw InputError("\"subspaces\" must be an array of vector lists");
    for (const auto& [key, value] : doc.items())
        if (key != "ambient_dim" && key != "subspaces" && key != "name")
            throw InputError("unknown key \"" + key + "\" in arrangement document");

    const auto m = static_cast<std::size_t>(doc["ambient_dim"].get<long long>());
    const auto& list = doc["subspaces"];
    if (static_cast<long long>(list.size()) > max_subspaces)
        throw CapExceeded("arrangement has " + std::to_string(list.size()) +
                          " subspaces; the cap is " + std::to_string(max_subspaces));
    std::vector<Subspace> subspaces;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const std::string where = "subspace " + std::to_string(k + 1);
        if (!list[k].is_array())
            throw InputError(where + ": expected a list of vectors");
        std::vector<RationalVector> vectors;
        for (std::size_t v = 0; v < list[k].size(); ++v) {
            const auto& vec = list[k][v];
            if (!vec.is_array())
                throw InputError(where + ", vector " + std::to_string(v + 1) + ": expected an array");
            if (vec.size() != m)
                throw InputError(where + ", vector " + std::to_string(v + 1) + ": length " +
                                 std::to_string(vec.size()) + " does not match ambient_dim " +
                                 std::to_string(m));
            RationalVector row;
            for (const auto& entry : vec)
                row.push_back(parse_entry(entry, where));
            vectors.push_back(std::move(row));
        }
        subspaces.push_back(subspace_from_vectors(vectors, m));
    }
    return Arrangement(m, std::move(subspaces));
}

Arrangement parse_arrangement_text(const std::string& text, int max_subspaces) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("arrangement is not valid JSON: ") + e.what());
    }
    return parse_arrangement(doc, max_subspaces);
}

bool Report::ok() const {
    for (const auto& v : validations)
        if (!v.passed)
            return false;
    return true;
}

Report run_job(const JobConfig& cfg, std::ostream* log) {
    std::string text;
    if (cfg.input_path && cfg.inline_document)
        throw InputError("give either an input path or an inline document, not both");
    if (cfg.input_path) {
        std::ifstream in(*cfg.input_path);
        if (!in)
            throw InputError("cannot read " + *cfg.input_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else if (cfg.inline_document) {
        text = *cfg.inline_document;
    } else {
        throw InputError("no arrangement given");
    }
    return run_job(cfg, parse_arrangement_text(text, cfg.max_subspaces), log);
}

Report run_job(const JobConfig& cfg, const Arrangement& arr, std::ostream* log) {
    const int D = cfg.max_degree;
    const int m = static_cast<int>(arr.ambient_dim());
    const int t = static_cast<int>(arr.size());
    if (D < 0)
        throw InputError("--max-degree must be nonnegative");
    if (cfg.oracle_d_max < 0)
        throw InputError("--oracle-check must be nonnegative");

    Report report;
    report.arrangement = arr;
    report.ideal = cfg.ideal;
    report.side = cfg.side;
    report.max_degree = D;

    const Polymatroid pm = polymatroid_of(arr, cfg.max_subspaces);
    for (SubsetMask mask = 0; mask <= pm.full_set(); ++mask) {
        report.ranks.emplace_back(mask, pm.rank(mask));
        if (mask == pm.full_set())
            break;
    }

    std::optional<GradedCharacter> intersection;
    int oracle_n = 0;
    if (cfg.ideal == IdealKind::Product) {
        if (D < t)
            throw InputError("truncation below generation degree: max degree " + std::to_string(D) +
                             " < t=" + std::to_string(t));
        ProductSeriesSolver solver(pm, arr.ambient_dim(), D);
        report.p_polynomial = solver.p_polynomial(pm.full_set());
        report.hilbert = solver.hilbert_series(pm.full_set());
        report.generation_degree = t;
    } else {
        if (cfg.oracle_d_max == 0)
            throw InputError("intersection ideals are computed by the oracle; pass --oracle-check > 0");
        if (t == 0)
            throw InputError("intersection ideal of an empty arrangement is the whole ring");
        oracle_n = cfg.dim_v.value_or(std::max(D, cfg.oracle_d_max));
        if (oracle_n < D)
            throw InputError("intersection series up to degree " + std::to_string(D) +
                             " needs --dim-v >= " + std::to_string(D));
        cfg.caps.check(m, oracle_n, D, t);
        for (int d = 0; d <= D; ++d)
            note(log, "oracle: intersection degree " + std::to_string(d) + ", n=" +
                          std::to_string(oracle_n) + ", monomial space dim " +
                          monomial_space_dimension(m, oracle_n, d, false).get_str());
        intersection = intersection_ideal_character(arr, oracle_n, D, cfg.caps);
        report.hilbert = series_from_oracle(*intersection, D);
        const SchurSeries g = report.hilbert * power(invert(sigma(D)), m);
        report.generation_degree = g.lowest_degree();
        if (report.generation_degree < 0)
            throw ValidationError("intersection ideal vanishes up to degree " + std::to_string(D));
    }

    const int gen = report.generation_degree;
    std::optional<BettiTable> table;
    try {
        table = betti_from_series(report.hilbert, m, gen);
        report.validations.push_back({"linear resolution", true, ""});
    } catch (const ValidationError& e) {
        report.validations.push_back({"linear resolution", false, e.what()});
    }

    if (table) {
        const int reg = regularity(*table);
        const bool expected = cfg.ideal == IdealKind::Product ? reg == t : reg == gen && reg <= t;
        report.validations.push_back(
            {"regularity", expected,
             "regularity " + std::to_string(reg) +
                 (cfg.ideal == IdealKind::Product ? ", expected t=" + std::to_string(t)
                                                  : ", generation degree " + std::to_string(gen))});
        if (wants_symmetric(cfg.side))
            report.symmetric = {table, reg};
        const BettiTable transposed = transpose_table(*table);
        bool concentrated = true;
        for (std::size_t i = 0; i < transposed.columns.size(); ++i) {
            const auto& col = transposed.columns[i];
            if (!col.is_zero() &&
                (col.lowest_degree() != gen + static_cast<int>(i) || col.highest_degree() != gen + static_cast<int>(i)))
                concentrated = false;
        }
        if (wants_exterior(cfg.side)) {
            report.exterior = {transposed, regularity(transposed)};
            report.validations.push_back({"exterior linear columns", concentrated, ""});
        }
    }

    if (cfg.oracle_d_max > 0) {
        OracleReport oracle;
        const int top = std::min(cfg.oracle_d_max, D);
        oracle.n = cfg.ideal == IdealKind::Product ? cfg.dim_v.value_or(cfg.oracle_d_max) : oracle_n;
        oracle.d_max = top;
        if (oracle.n < top)
            throw InputError("oracle comparison up to degree " + std::to_string(top) +
                             " needs --dim-v >= " + std::to_string(top));
        cfg.caps.check(m, oracle.n, top, t);
        for (int d = 0; d <= top; ++d)
            note(log, "oracle: product degree " + std::to_string(d) + ", n=" + std::to_string(oracle.n) +
                          ", monomial space dim " + monomial_space_dimension(m, oracle.n, d, false).get_str());
        const GradedCharacter product = product_ideal_character(arr, oracle.n, top, cfg.caps);
        bool symmetric_weights = is_weight_symmetric(product);

        std::optional<GradedCharacter> wedge;
        const int wedge_top = std::min(top, m * oracle.n);
        if (cfg.ideal == IdealKind::Product && wants_exterior(cfg.side)) {
            for (int d = 0; d <= wedge_top; ++d)
                note(log, "oracle: wedge degree " + std::to_string(d) + ", n=" + std::to_string(oracle.n) +
                              ", exterior monomial space dim " +
                              monomial_space_dimension(m, oracle.n, d, true).get_str());
            wedge = wedge_ideal_character(arr, oracle.n, wedge_top, cfg.caps);
            symmetric_weights = symmetric_weights && is_weight_symmetric(*wedge);
        }
        if (intersection)
            symmetric_weights = symmetric_weights && is_weight_symmetric(*intersection);

        bool all_match = true;
        bool all_wedge = true;
        bool contained = true;
        for (int d = 0; d <= top; ++d) {
            OracleDegree row;
            row.degree = d;
            if (cfg.ideal == IdealKind::Product) {
                row.weights = product.at(d);
                row.schur = character_to_schur(product, d);
                row.expected = SchurSeries(d, report.hilbert.graded_part(d).terms());
                row.match = row.schur->terms() == row.expected->terms();
                all_match = all_match && *row.match;
                if (wedge && d <= wedge_top) {
                    row.wedge_weights = wedge->at(d);
                    row.wedge_schur = character_to_schur(*wedge, d);
                    row.wedge_expected = omega(*row.expected);
                    row.wedge_match = row.wedge_schur->terms() == row.wedge_expected->terms();
                    all_wedge = all_wedge && *row.wedge_match;
                }
            } else {
                row.weights = intersection->at(d);
                row.schur = character_to_schur(*intersection, d);
                row.expected = character_to_schur(product, d);
                row.match = dominates_weightwise(row.weights, product.at(d));
                contained = contained && *row.match;
            }
            oracle.degrees.push_back(std::move(row));
        }
        if (cfg.ideal == IdealKind::Product) {
            report.validations.push_back({"oracle product character", all_match, ""});
            if (wedge)
                report.validations.push_back({"oracle wedge character (omega duality)", all_wedge, ""});
        } else {
            report.validations.push_back({"oracle containment J_A in I_A", contained, ""});
        }
        report.validations.push_back({"oracle weight symmetry", symmetric_weights, ""});
        report.oracle = std::move(oracle);
    }
    return report;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json out;
    auto subspaces = nlohmann::json::array();
    for (const auto& s : r.arrangement.subspaces()) {
        auto rows = nlohmann::json::array();
        for (const auto& row : s.basis().row_list()) {
            auto v = nlohmann::json::array();
            for (const auto& q : row)
                v.push_back(q.get_den() == 1 ? integer_to_json(q.get_num()) : nlohmann::json(q.get_str()));
            rows.push_back(v);
        }
        subspaces.push_back(rows);
    }
    out["arrangement"] = {{"ambient_dim", r.arrangement.ambient_dim()}, {"subspaces", subspaces}};
    out["ideal"] = ideal_name(r.ideal);
    out["side"] = side_name(r.side);
    out["max_degree"] = r.max_degree;
    auto ranks = nlohmann::json::array();
    for (const auto& [mask, rank] : r.ranks)
        ranks.push_back({{"subset", subset_members(mask)}, {"rank", rank}});
    out["polymatroid"] = ranks;
    if (r.p_polynomial)
        out["p_polynomial"] = to_json(*r.p_polynomial);
    out["hilbert_series"] = to_json(r.hilbert);
    out["generation_degree"] = r.generation_degree;
    auto side_json = [](const SideReport& s) {
        nlohmann::json j;
        j["betti"] = to_json(*s.table);
        j["regularity"] = *s.regularity;
        return j;
    };
    if (r.symmetric.table)
        out["symmetric"] = side_json(r.symmetric);
    if (r.exterior.table)
        out["exterior"] = side_json(r.exterior);
    if (r.oracle) {
        auto degrees = nlohmann::json::array();
        for (const auto& row : r.oracle->degrees) {
            nlohmann::json j{{"degree", row.degree}, {"weights", weights_to_json(row.weights)}};
            if (row.schur)
                j["schur"] = to_json(*row.schur);
            if (row.expected)
                j[r.ideal == IdealKind::Product ? "formula" : "product_schur"] = to_json(*row.expected);
            if (row.match)
                j[r.ideal == IdealKind::Product ? "match" : "contains_product"] = *row.match;
            if (row.wedge_weights) {
                j["wedge"] = {{"weights", weights_to_json(*row.wedge_weights)},
                              {"schur", to_json(*row.wedge_schur)},
                              {"omega_formula", to_json(*row.wedge_expected)},
                              {"match", *row.wedge_match}};
            }
            degrees.push_back(std::move(j));
        }
        out["oracle"] = {{"n", r.oracle->n}, {"d_max", r.oracle->d_max}, {"degrees", degrees}};
    }
    auto validations = nlohmann::json::array();
    for (const auto& v : r.validations)
        validations.push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
    out["validations"] = validations;
    out["ok"] = r.ok();
    return out;
}

namespace {

std::string render_markdown(const Report& r) {
    std::ostringstream out;
    out << "# Equivariant resolution report\n\n";
    out << "- ideal: " << ideal_name(r.ideal) << "\n- ambient dimension: " << r.arrangement.ambient_dim()
        << "\n- subspaces: " << r.arrangement.size() << "\n- max degree: " << r.max_degree
        << "\n- generation degree: " << r.generation_degree << "\n\n";
    out << "## Polymatroid\n\n| subset | rank |\n|---|---|\n";
    for (const auto& [mask, rank] : r.ranks)
        out << "| " << subset_label(mask) << " | " << rank << " |\n";
    if (r.p_polynomial)
        out << "\nP(A) = " << r.p_polynomial->to_string() << "\n";
    out << "\n## Equivariant Hilbert series\n\nH = " << r.hilbert.to_string() << "\n";
    if (r.symmetric.table)
        out << "\n## Symmetric side (regularity " << *r.symmetric.regularity << ")\n\n"
            << to_markdown(*r.symmetric.table);
    if (r.exterior.table)
        out << "\n## Exterior side (regularity " << *r.exterior.regularity << ")\n\n"
            << to_markdown(*r.exterior.table);
    if (r.oracle) {
        out << "\n## Oracle (n = " << r.oracle->n << ")\n\n| d | oracle | reference | match |\n|---|---|---|---|\n";
        for (const auto& row : r.oracle->degrees) {
            out << "| " << row.degree << " | " << (row.schur ? row.schur->to_string() : "") << " | "
                << (row.expected ? row.expected->to_string() : "") << " | "
                << (row.match ? (*row.match ? "yes" : "NO") : "") << " |\n";
            if (row.wedge_schur)
                out << "| " << row.degree << " (wedge) | " << row.wedge_schur->to_string() << " | "
                    << row.wedge_expected->to_string() << " | " << (*row.wedge_match ? "yes" : "NO") << " |\n";
        }
    }
    out << "\n## Validations\n\n| check | result | detail |\n|---|---|---|\n";
    for (const auto& v : r.validations)
        out << "| " << v.name << " | " << (v.passed ? "pass" : "FAIL") << " | " << v.detail << " |\n";
    return out.str();
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '{' || c == '}' || c == '&' || c == '%' || c == '#')
            out += '\\';
        out += c;
    }
    return out;
}

std::string render_latex(const Report& r) {
    std::ostringstream out;
    out << "% equivariant resolution report\n";
    out << "\\paragraph{Arrangement.} " << ideal_name(r.ideal) << " ideal of " << r.arrangement.size()
        << " subspaces of $K^{" << r.arrangement.ambient_dim() << "}$, truncated at degree " << r.max_degree
        << ".\n\n";
    out << "\\[ H = " << r.hilbert.to_string() << " \\]\n\n";
    if (r.symmetric.table)
        out << "\\paragraph{Symmetric side, regularity " << *r.symmetric.regularity << ".}\n"
            << to_latex(*r.symmetric.table) << "\n";
    if (r.exterior.table)
        out << "\\paragraph{Exterior side, regularity " << *r.exterior.regularity << ".}\n"
            << to_latex(*r.exterior.table) << "\n";
    out << "\\paragraph{Validations.}\n\\begin{itemize}\n";
    for (const auto& v : r.validations)
        out << "  \\item " << latex_escape(v.name) << ": " << (v.passed ? "pass" : "FAIL") << "\n";
    out << "\\end{itemize}\n";
    return out.str();
}

} // namespace

std::string render(const Report& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Markdown:
        return render_markdown(report);
    case OutputFormat::Latex:
        return render_latex(report);
    case OutputFormat::Json:
        break;
    }
    return to_json(report).dump(2) + "\n";
}

IdealKind parse_ideal_kind(const std::string& text) {
    if (text == "product")
        return IdealKind::Product;
    if (text == "intersection")
        return IdealKind::Intersection;
    throw InputError("unknown ideal kind \"" + text + "\"");
}

Side parse_side(const std::string& text) {
    if (text == "symmetric")
        return Side::Symmetric;
    if (text == "exterior")
        return Side::Exterior;
    if (text == "both")
        return Side::Both;
    throw InputError("unknown side \"" + text + "\"");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json")
        return OutputFormat::Json;
    if (text == "markdown")
        return OutputFormat::Markdown;
    if (text == "latex")
        return OutputFormat::Latex;
    throw InputError("unknown format \"" + text + "\"");
}

} // namespace equisyz
