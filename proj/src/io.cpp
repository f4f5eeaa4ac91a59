#include "ordh/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ordh/error.hpp"

namespace ordh::io {

namespace {

const char* style_name(DecompositionStyle s)
{
    return s == DecompositionStyle::SumWithConjugate ? "sum" : "projection";
}

template <typename T>
T field(const json& j, const char* key, const std::string& what)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(what + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(what + ": bad field '" + key + "': " + e.what());
    }
}

} // namespace

json parse(const std::string& text, const std::string& what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

json order_to_json(const OrderSpec& order)
{
    if (order.kind() == OrderKind::Lexicographic)
        return {{"kind", "lex"}, {"n", order.dim()}};
    return {{"kind", "functional"}, {"alpha", order.alpha()}, {"n", order.dim()}};
}

OrderSpec order_from_json(const json& j)
{
    const auto kind = field<std::string>(j, "kind", "order");
    const auto n = field<std::size_t>(j, "n", "order");
    try {
        if (kind == "lex")
            return OrderSpec::lexicographic(n);
        if (kind == "functional") {
            auto alpha = field<std::vector<double>>(j, "alpha", "order");
            if (alpha.size() != n)
                throw ParseError("order: alpha has length " + std::to_string(alpha.size()) + " but n = " +
                                 std::to_string(n));
            return OrderSpec::functional(std::move(alpha));
        }
    } catch (const InvalidArgument& e) {
        throw ParseError(std::string("order: ") + e.what());
    }
    throw ParseError("order: unknown kind '" + kind + "' (expected lex or functional)");
}

json index_to_json(const CharacterIndex& k)
{
    return json(std::vector<std::int64_t>(k.coords().begin(), k.coords().end()));
}

json symbol_to_json(const TrigPoly& f)
{
    json terms = json::array();
    for (const auto& [k, c] : f.terms())
        terms.push_back({{"k", index_to_json(k)}, {"re", c.real()}, {"im", c.imag()}});
    return {{"n", f.dim()}, {"terms", terms}};
}

TrigPoly symbol_from_json(const json& j)
{
    const auto n = field<std::size_t>(j, "n", "symbol");
    if (n == 0)
        throw ParseError("symbol: n must be at least 1");
    if (!j.contains("terms") || !j.at("terms").is_array())
        throw ParseError("symbol: 'terms' must be an array");
    TrigPoly f(n);
    std::set<CharacterIndex> seen;
    std::size_t position = 0;
    for (const auto& term : j.at("terms")) {
        const std::string where = "symbol term " + std::to_string(position++);
        const CharacterIndex k(field<std::vector<std::int64_t>>(term, "k", where));
        if (k.dim() != n)
            throw ParseError(where + ": index " + k.to_string() + " has dimension " + std::to_string(k.dim()) +
                             ", expected " + std::to_string(n));
        if (!seen.insert(k).second)
            throw ParseError(where + ": duplicate index " + k.to_string());
        const double re = term.contains("re") ? field<double>(term, "re", where) : 0.0;
        const double im = term.contains("im") ? field<double>(term, "im", where) : 0.0;
        try {
            f.set(k, {re, im});
        } catch (const NumericalError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return f;
}

TrigPoly read_symbol_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open symbol file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return symbol_from_json(parse(buffer.str(), "symbol file " + path.string()));
}

void write_symbol_file(const std::filesystem::path& path, const TrigPoly& f)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    out << symbol_to_json(f).dump(2) << '\n';
}

json truncation_to_json(const HankelTruncation& t)
{
    json rows = json::array(), cols = json::array(), re = json::array(), im = json::array();
    for (const auto& k : t.rows)
        rows.push_back(index_to_json(k));
    for (const auto& k : t.cols)
        cols.push_back(index_to_json(k));
    for (Eigen::Index r = 0; r < t.entries.rows(); ++r) {
        json re_row = json::array(), im_row = json::array();
        for (Eigen::Index c = 0; c < t.entries.cols(); ++c) {
            re_row.push_back(t.entries(r, c).real());
            im_row.push_back(t.entries(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"form", t.form == HankelForm::Symbol ? "symbol" : "gamma"},
            {"rows", rows},
            {"cols", cols},
            {"re", re},
            {"im", im},
            {"provenance", t.provenance}};
}

json box_to_json(const Box& box)
{
    return {{"lo", box.lo}, {"hi", box.hi}};
}

json decomposition_to_json(const BmoDecomposition& d)
{
    return {{"style", style_name(d.style)},
            {"bound", d.bound},
            {"grid_points", d.grid.points},
            {"first", symbol_to_json(d.first)},
            {"second", symbol_to_json(d.second)}};
}

json report_to_json(const BmoReport& report)
{
    json verdicts = json::array();
    for (const auto& v : report.verdicts)
        verdicts.push_back({{"name", v.name}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"slack", v.slack}, {"holds", v.holds}});
    const auto& opt = report.star_optimized;
    return {{"symbol", symbol_to_json(report.symbol)},
            {"grid_points", report.grid.points},
            {"trunc_box", box_to_json(report.trunc_box)},
            {"slack", report.slack},
            {"analytic", report.analytic},
            {"hankel_seminorm_lower",
             {{"value", report.seminorm.value},
              {"conj_part", report.seminorm.conj_part},
              {"direct_part", report.seminorm.direct_part}}},
            {"star_upper", report.star_upper},
            {"def2_upper", report.def2_upper},
            {"witnesses",
             {{"sum_form", decomposition_to_json(report.def2)},
              {"projection_form_constructive", decomposition_to_json(report.star_constructive)},
              {"projection_form_optimized", decomposition_to_json(opt.best)},
              {"sum_form_from_projection", decomposition_to_json(report.def2_from_star)}}},
            {"solver",
             {{"iterations", opt.iterations},
              {"initial_objective", opt.initial_objective},
              {"final_objective", opt.final_objective},
              {"free_plus", opt.free_plus},
              {"free_minus", opt.free_minus}}},
            {"verdicts", verdicts},
            {"passed", report.passed()}};
}

} // namespace ordh::io
