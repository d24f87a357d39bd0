#include "hybrid/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "hybrid/numbers.hpp"
#include "hybrid/tableaux.hpp"
#include "hybrid/text.hpp"

namespace hybrid {

namespace {

struct Range {
    long long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw ParseError("expected 'lo..hi'", text.size());
    Range r;
    try {
        r.lo = std::stoll(text.substr(0, dots));
        r.hi = std::stoll(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw ParseError("expected integer bounds in 'lo..hi'", 0);
    }
    if (r.lo > r.hi) throw ParseError("empty range '" + text + "'", 0);
    return r;
}

// Atoms that look like numbers become rational constants, anything else a
// named variable.
VariableSet variable_set(const HybridSet<std::string>& f) {
    VariableSet out;
    for (const auto& [atom, m] : f.entries()) {
        char c = atom[0];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
            out.add(LaurentPoly::constant(rat_from_string(atom)), m);
        else
            out.add(LaurentPoly::variable(atom), m);
    }
    return out;
}

std::function<Rational(long long)> rational_basis(const std::string& text) {
    PersistantSequence seq = parse_basis(text);
    return [b = seq.b](long long i) {
        LaurentPoly v = b(i);
        if (!v.is_constant())
            throw std::domain_error("basis must be rational-valued here");
        return v.constant_value();
    };
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma - start);
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty list item", start);
        out.push_back(rat_from_string(item.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<long long> parse_integer_list(const std::string& text) {
    std::vector<long long> out;
    for (const Rational& r : parse_rational_list(text)) {
        if (rat_den(r) != 1) throw ParseError("expected an integer list", 0);
        out.push_back(static_cast<long long>(rat_num(r)));
    }
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string parts_text(const std::vector<long long>& parts) {
    std::vector<std::string> rendered;
    for (long long p : parts) rendered.push_back(std::to_string(p));
    return "(" + join(rendered, ",") + ")";
}

void emit_table(std::ostream& out, const std::string& format, const std::string& family,
                Range nr, Range kr) {
    auto cells = table(family_from_string(family), nr.lo, nr.hi, kr.lo, kr.hi);
    if (format == "json") {
        nlohmann::json j;
        j["family"] = family;
        j["n_range"] = {nr.lo, nr.hi};
        j["k_range"] = {kr.lo, kr.hi};
        j["cells"] = cells;
        out << j.dump(2) << "\n";
        return;
    }
    std::string sep = format == "csv" ? "," : "\t";
    out << "n\\k";
    for (long long k = kr.lo; k <= kr.hi; ++k) out << sep << k;
    out << "\n";
    long long n = nr.hi;
    for (const auto& row : cells) {
        out << n--;
        for (const auto& cell : row) out << sep << cell;
        out << "\n";
    }
}

HybridRelation relation_from_string(const std::string& kind) {
    if (kind == "d") return HybridRelation::Strict;
    if (kind == "n") return HybridRelation::Weak;
    throw ParseError("kind must be 'd' or 'n'", 0);
}

void emit_tableau(std::ostream& out, const std::string& format, const Tableau01& t,
                  nlohmann::json& acc) {
    if (format == "json") {
        nlohmann::json j;
        j["parts"] = t.shape.parts;
        j["ones"] = t.ones;
        j["inv"] = half_to_string(inv2(t));
        j["nin"] = half_to_string(nin2(t));
        acc.push_back(j);
        return;
    }
    std::vector<std::string> ones;
    for (long long c : t.ones) ones.push_back(std::to_string(c));
    out << parts_text(t.shape.parts) << " ones=(" << join(ones, ",")
        << ") inv=" << half_to_string(inv2(t)) << " nin=" << half_to_string(nin2(t))
        << "\n";
}

}  // namespace

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hybrid-set, symmetric-function and number-table calculator"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    long long default_order = 8;
    if (const char* env = std::getenv("HYBRIDSET_SERIES_ORDER")) {
        try {
            default_order = std::stoll(env);
        } catch (const std::exception&) {
            err << "invalid HYBRIDSET_SERIES_ORDER\n";
            return 2;
        }
    }

    auto* table_cmd = app.add_subcommand("table", "Render a number-family table");
    std::string family, n_range, k_range;
    table_cmd->add_option("--family", family, "Number family")->required();
    table_cmd->add_option("--n", n_range, "Row range lo..hi")->required();
    table_cmd->add_option("--k", k_range, "Column range lo..hi")->required();

    auto* comp_cmd =
        app.add_subcommand("comp", "Complementary symmetric function of a hybrid set");
    std::string comp_set;
    long long comp_n = 0;
    comp_cmd->add_option("--set", comp_set, "Variable hybrid set, e.g. \"{a,b|c}\"")
        ->required();
    comp_cmd->add_option("--n", comp_n, "Degree")->required();

    auto* expand_cmd =
        app.add_subcommand("expand", "Connection-constant expansion of a rational function");
    std::string expand_fn, expand_basis;
    long long expand_order = -1;
    expand_cmd->add_option("--fn", expand_fn, "Monic rational function")->required();
    expand_cmd->add_option("--basis", expand_basis, "Persistant-root basis")->required();
    expand_cmd->add_option("--order", expand_order, "Number of coefficients past c_0");

    auto* invert_cmd =
        app.add_subcommand("invert", "Invert a connection-constant sequence");
    std::string invert_coeffs, basis_a, basis_b;
    invert_cmd->add_option("--coeffs", invert_coeffs, "Comma-separated rationals")
        ->required();
    invert_cmd->add_option("--basis-a", basis_a, "Original basis")->required();
    invert_cmd->add_option("--basis-b", basis_b, "Target basis")->required();

    auto* subsets_cmd = app.add_subcommand("subsets", "Enumerate k-element subsets");
    std::string subsets_set;
    long long subsets_k = 0;
    subsets_cmd->add_option("--set", subsets_set, "New set, e.g. \"{|a,b,c}\"")->required();
    subsets_cmd->add_option("--k", subsets_k, "Subset cardinality")->required();

    auto* partitions_cmd =
        app.add_subcommand("partitions", "Enumerate generalized partitions");
    std::string part_kind = "d";
    long long part_width = 0, part_length = 0;
    std::optional<long long> part_sum;
    partitions_cmd->add_option("--kind", part_kind, "d (strict) or n (weak)");
    partitions_cmd->add_option("--width", part_width, "Partition width")->required();
    partitions_cmd->add_option("--length", part_length, "Number of parts")->required();
    partitions_cmd->add_option("--sum", part_sum, "Restrict the part sum");

    auto* tableaux_cmd = app.add_subcommand("tableaux", "Enumerate 0-1 tableaux");
    std::string tab_kind = "d", tab_shape;
    long long tab_width = 0, tab_length = 0;
    tableaux_cmd->add_option("--kind", tab_kind, "d (strict) or n (weak)");
    tableaux_cmd->add_option("--width", tab_width, "Partition width")->required();
    tableaux_cmd->add_option("--length", tab_length, "Number of parts");
    tableaux_cmd->add_option("--shape", tab_shape, "Fixed shape, e.g. \"5,3,2\"");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*table_cmd) {
            emit_table(out, format, family, parse_range(n_range), parse_range(k_range));
        } else if (*comp_cmd) {
            LaurentPoly value = comp(variable_set(parse_set(comp_set)), comp_n);
            if (format == "json") {
                nlohmann::json j;
                j["n"] = comp_n;
                j["set"] = set_to_json(parse_set(comp_set));
                j["value"] = value.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << value.to_string() << "\n";
            }
        } else if (*expand_cmd) {
            MonicRationalFn f = parse_rational_fn(expand_fn);
            PersistantSequence seq = parse_basis(expand_basis);
            long long order = expand_order >= 0 ? expand_order : default_order;
            auto coeffs = expand(f, seq, order);
            std::string sep = format == "csv" ? "," : "\t";
            nlohmann::json jrows = nlohmann::json::array();
            if (format == "csv") out << "k" << sep << "basis_index" << sep << "coefficient\n";
            for (size_t k = 0; k < coeffs.size(); ++k) {
                if (format == "json") {
                    nlohmann::json j;
                    j["k"] = k;
                    j["basis_index"] = coeffs[k].first;
                    j["coefficient"] = coeffs[k].second.to_string();
                    jrows.push_back(j);
                } else {
                    out << k << sep << coeffs[k].first << sep
                        << coeffs[k].second.to_string() << "\n";
                }
            }
            if (format == "json") out << jrows.dump(2) << "\n";
        } else if (*invert_cmd) {
            auto d = invert_connection(parse_rational_list(invert_coeffs),
                                       rational_basis(basis_a), rational_basis(basis_b));
            std::vector<std::string> rendered;
            for (const Rational& r : d) rendered.push_back(rat_to_string(r));
            if (format == "json")
                out << nlohmann::json(rendered).dump(2) << "\n";
            else if (format == "csv")
                out << join(rendered, ",") << "\n";
            else
                for (const auto& s : rendered) out << s << "\n";
        } else if (*subsets_cmd) {
            auto subsets = enumerate_subsets(parse_set(subsets_set), subsets_k);
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& s : subsets) j.push_back(set_to_json(s));
                out << j.dump(2) << "\n";
            } else {
                for (const auto& s : subsets) out << render_set(s) << "\n";
            }
        } else if (*partitions_cmd) {
            auto shapes = enumerate_partitions(relation_from_string(part_kind), part_width,
                                               part_length, part_sum);
            if (format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& shape : shapes) {
                    nlohmann::json one;
                    one["width"] = shape.width;
                    one["parts"] = shape.parts;
                    j.push_back(one);
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& shape : shapes) out << parts_text(shape.parts) << "\n";
            }
        } else if (*tableaux_cmd) {
            HybridRelation rel = relation_from_string(tab_kind);
            std::vector<GenPartition> shapes;
            if (!tab_shape.empty()) {
                GenPartition shape{parse_integer_list(tab_shape), tab_width, rel};
                long long prev = tab_width;
                for (long long p : shape.parts) {
                    if (!hybrid_less(rel, p, prev))
                        throw std::domain_error("shape is not a valid partition chain");
                    prev = p;
                }
                shapes.push_back(shape);
            } else {
                shapes = enumerate_partitions(rel, tab_width, tab_length);
            }
            nlohmann::json acc = nlohmann::json::array();
            for (const auto& shape : shapes)
                for (const auto& t : enumerate_tableaux(shape))
                    emit_tableau(out, format, t, acc);
            if (format == "json") out << acc.dump(2) << "\n";
        }
    } catch (const UnsupportedRegionError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace hybrid
