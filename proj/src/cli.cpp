#include "virfusion/cli.hpp"

#include "virfusion/cache.hpp"
#include "virfusion/fusion.hpp"
#include "virfusion/limit.hpp"
#include "virfusion/serialize.hpp"
#include "virfusion/three_point.hpp"
#include "virfusion/zhu.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

namespace virfusion::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rows of exact strings, rendered as aligned text or CSV.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Output {
    Json json;
    std::vector<std::string> notes;  // text format only, printed above the table
    Table table;
    int exit_code = kExitOk;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

void render_csv(const Table& t, std::ostream& out)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows)
        line(r);
}

void render_text(const Output& o, std::ostream& out)
{
    for (const auto& n : o.notes)
        out << n << '\n';
    const Table& t = o.table;
    if (t.header.empty())
        return;
    std::vector<size_t> width(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows)
        widen(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i)
                s += "  ";
            s += cells[i];
            if (i + 1 < cells.size())
                s.append(width[i] - cells[i].size(), ' ');
        }
        out << s << '\n';
    };
    line(t.header);
    size_t total = 0;
    for (size_t w : width)
        total += w;
    out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    for (const auto& r : t.rows)
        line(r);
}

std::vector<int> parse_ints(const std::string& flag, const std::string& text)
{
    std::vector<int> out;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        std::string_view piece = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

KacPair parse_pair(const std::string& flag, const std::string& text)
{
    auto v = parse_ints(flag, text);
    if (v.size() != 2)
        throw UsageError(flag + ": expected a label i,s, got '" + text + "'");
    return {v[0], v[1]};
}

Rational parse_rational(const std::string& flag, const std::string& text)
{
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected a rational p/q, got '" + text + "'");
    }
}

// Label validation errors are reported against the flag that carried the label.
ModuleLabel make_label(const std::string& flag, int p, int q, KacPair w)
{
    try {
        if (p == 1)
            return C1qIrreducible::make(q, w.first, w.second);
        return MinimalIrreducible::make(p, q, w.first, w.second);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::string pair_string(KacPair w)
{
    return "(" + std::to_string(w.first) + "," + std::to_string(w.second) + ")";
}

Json pair_json(KacPair w)
{
    return Json::array({w.first, w.second});
}

Json with_schema()
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    return j;
}

void merge_into(Json& target, const Json& fields)
{
    for (auto it = fields.begin(); it != fields.end(); ++it)
        target[it.key()] = it.value();
}

struct Options {
    std::string format = "text";
    std::string cache_path;
    long seed = 0;
    bool verbose = false;

    int p = 1;
    int q = 0;
    int imax = 4;
    std::string c, h;
    int level = 0;
    std::string label, w1, w2, w3;
    std::string verma_h2, verma_h3;
    int slot = 1;
    std::string partition;
    int kmin = 0, kmax = 0;
    int qmax = 3, verify_imax = 3, h3_imax = 7;
};

// --- subcommands ---

Output cmd_weights(const Options& o)
{
    Output out;
    out.json = with_schema();
    out.json["p"] = o.p;
    out.json["q"] = o.q;
    Json weights = Json::array();
    Rational c;
    if (o.p == 1) {
        make_label("--q", 1, o.q, {1, 1});
        if (o.imax < 1)
            throw UsageError("--imax: must be positive");
        c = central_charge_pq(1, o.q);
        out.table.header = {"i", "s", "h"};
        for (int i = 1; i <= o.imax; ++i)
            for (int s = 1; s <= o.q; ++s) {
                const Rational h = weight_c1q(o.q, i, s);
                weights.push_back({{"i", i}, {"s", s}, {"h", rational_to_json(h)}});
                out.table.rows.push_back({std::to_string(i), std::to_string(s), h.to_string()});
            }
    } else {
        make_label("--p/--q", o.p, o.q, {1, 1});
        c = central_charge_pq(o.p, o.q);
        out.table.header = {"r", "s", "h"};
        for (int r = 1; r < o.p; ++r)
            for (int s = 1; s < o.q; ++s) {
                const Rational h = kac_weight_pq(o.p, o.q, r, s);
                weights.push_back({{"r", r}, {"s", s}, {"h", rational_to_json(h)}});
                out.table.rows.push_back({std::to_string(r), std::to_string(s), h.to_string()});
            }
    }
    out.json["c"] = rational_to_json(c);
    out.json["weights"] = weights;
    out.notes.push_back("c = " + c.to_string());
    return out;
}

Output cmd_singular(const Options& o, SingularMemo& memo)
{
    const Rational c = parse_rational("--c", o.c), h = parse_rational("--h", o.h);
    if (o.level < 1)
        throw UsageError("--level: must be positive");
    std::optional<VermaVector> v = memo.get({c, h}, o.level);
    Output out;
    out.json = with_schema();
    out.json["level"] = o.level;
    out.json["singular"] = v ? to_json(*v) : Json(nullptr);
    out.notes.push_back(v ? v->to_string() : "no singular vector at level " + std::to_string(o.level));
    out.table.header = {"partition", "coeff"};
    if (v)
        for (const auto& [word, coeff] : v->terms())
            out.table.rows.push_back({word.to_string(), coeff.to_string()});
    return out;
}

Output cmd_zhu_image(const Options& o, SingularMemo& memo)
{
    const ModuleLabel label = make_label("--label", o.p, o.q, parse_pair("--label", o.label));
    Output out;
    out.json = with_schema();
    out.json["label"] = label_to_string(label);
    Json images = Json::array();
    out.table.header = {"grade", "i", "j", "coeff"};
    out.notes.push_back(label_to_string(label));
    for (const auto& z : singular_image(label, &memo)) {
        const int grade = z.poly.total_degree();
        images.push_back({{"grade", grade}, {"zhu", to_json(z)}});
        out.notes.push_back("grade " + std::to_string(grade) + ": " + z.poly.to_string());
        for (const auto& [e, coeff] : z.poly.terms())
            out.table.rows.push_back(
                {std::to_string(grade), std::to_string(e.first), std::to_string(e.second), coeff.to_string()});
    }
    out.json["images"] = images;
    // The coefficient listing is for csv; text already shows the polynomials.
    if (o.format == "text")
        out.table = {};
    return out;
}

Output fusion_output(const FusionAnswer& a)
{
    Output out;
    out.json = with_schema();
    merge_into(out.json, to_json(a));
    out.table.header = {"N", "witness"};
    out.table.rows.push_back({std::to_string(a.value), a.witness ? pair_string(*a.witness) : "-"});
    return out;
}

Output cmd_fusion(const Options& o)
{
    if (o.q < 1)
        throw UsageError("--q: must be positive");
    const KacPair w1 = parse_pair("--w1", o.w1);
    if (!o.verma_h2.empty()) {
        if (o.verma_h3.empty())
            throw UsageError("--verma-h2: requires --verma-h3 (the target Verma weight)");
        if (o.p != 1)
            throw UsageError("--verma-h2: only defined for the c_{1,q} series (drop --p)");
        make_label("--w1", 1, o.q, w1);
        const Rational h = parse_rational("--verma-h2", o.verma_h2);
        const Rational hp = parse_rational("--verma-h3", o.verma_h3);
        Output out = fusion_output({fusion_verma_mixed(o.q, w1, h, hp), std::nullopt});
        out.json["t_range"] = "-s+1,-s+3,...,s-1";
        out.notes.push_back("t ranges over {-s+1, -s+3, ..., s-1}");
        return out;
    }
    const KacPair w2 = parse_pair("--w2", o.w2);
    if (!o.verma_h3.empty()) {
        if (o.p != 1)
            throw UsageError("--verma-h3: only defined for the c_{1,q} series (drop --p)");
        make_label("--w1", 1, o.q, w1);
        make_label("--w2", 1, o.q, w2);
        const Rational h = parse_rational("--verma-h3", o.verma_h3);
        return fusion_output({fusion_verma_target_zero(o.q, w1, w2, h), std::nullopt});
    }
    const KacPair w3 = parse_pair("--w3", o.w3);
    make_label("--w1", o.p, o.q, w1);
    make_label("--w2", o.p, o.q, w2);
    make_label("--w3", o.p, o.q, w3);
    if (o.p == 1)
        return fusion_output(fusion_c1q(o.q, w1, w2, w3));
    return fusion_output({fusion_minimal(o.p, o.q, w1, w2, w3), std::nullopt});
}

Output cmd_fusion_product(const Options& o)
{
    const KacPair w1 = parse_pair("--w1", o.w1), w2 = parse_pair("--w2", o.w2);
    make_label("--w1", 1, o.q, w1);
    make_label("--w2", 1, o.q, w2);
    Output out;
    out.json = with_schema();
    Json product = Json::array();
    out.table.header = {"i", "s", "h"};
    for (const auto& l : fusion_product_c1q(o.q, w1, w2)) {
        const Rational h = weight_c1q(o.q, l.i, l.s);
        product.push_back({{"i", l.i}, {"s", l.s}, {"h", rational_to_json(h)}});
        out.table.rows.push_back({std::to_string(l.i), std::to_string(l.s), h.to_string()});
    }
    out.json["product"] = product;
    return out;
}

Output cmd_threept(const Options& o, SingularMemo& memo)
{
    if (o.slot < 1 || o.slot > 3)
        throw UsageError("--slot: must be 1, 2 or 3");
    const std::array<ModuleLabel, 3> labels{make_label("--w1", o.p, o.q, parse_pair("--w1", o.w1)),
                                            make_label("--w2", o.p, o.q, parse_pair("--w2", o.w2)),
                                            make_label("--w3", o.p, o.q, parse_pair("--w3", o.w3))};
    const ThreePointDatum datum{params_of(labels[0]).c, params_of(labels[0]).h, params_of(labels[1]).h,
                                params_of(labels[2]).h};
    const ModuleLabel& inserted = labels[static_cast<size_t>(o.slot - 1)];

    std::vector<VermaVector> vectors;
    if (!o.partition.empty()) {
        try {
            vectors.push_back(VermaVector::monomial(params_of(inserted), Partition(parse_ints("--partition", o.partition))));
        } catch (const UsageError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--partition: ") + e.what());
        }
    } else {
        for (auto& g : maximal_submodule_generators(inserted, &memo))
            vectors.push_back(std::move(g.vector));
    }

    Output out;
    out.json = with_schema();
    out.json["slot"] = o.slot;
    out.json["datum"] = {{"c", rational_to_json(datum.c)},
                         {"h1", rational_to_json(datum.h1)},
                         {"h2", rational_to_json(datum.h2)},
                         {"h3", rational_to_json(datum.h3)}};
    out.notes.push_back("c = " + datum.c.to_string() + ", h1 = " + datum.h1.to_string() + ", h2 = "
                        + datum.h2.to_string() + ", h3 = " + datum.h3.to_string() + ", slot " + std::to_string(o.slot));
    out.table.header = {"grade", "coeff", "exponent"};
    Json insertions = Json::array();
    ThreePointEvaluator evaluator(datum);
    for (const auto& v : vectors) {
        const ThreePointCoefficient r = evaluator.evaluate(static_cast<Slot>(o.slot), v);
        const Rational exponent = datum.h3 - datum.h1 - datum.h2 - Rational(r.shift);
        insertions.push_back({{"vector", to_json(v)},
                              {"coeff", rational_to_json(r.coeff)},
                              {"shift", r.shift},
                              {"exponent", rational_to_json(exponent)}});
        out.table.rows.push_back({std::to_string(v.grade()), r.coeff.to_string(), exponent.to_string()});
    }
    out.json["insertions"] = insertions;
    return out;
}

Output cmd_limit(const Options& o, SingularMemo& memo)
{
    const LabelTriple labels{parse_pair("--w1", o.w1), parse_pair("--w2", o.w2), parse_pair("--w3", o.w3)};
    make_label("--w1", 1, o.q, labels[0]);
    make_label("--w2", 1, o.q, labels[1]);
    make_label("--w3", 1, o.q, labels[2]);
    if (o.kmin < 2 || o.kmax < o.kmin)
        throw UsageError("--kmin/--kmax: need 2 <= kmin <= kmax");
    const auto rows = limit_sequence(o.q, labels, o.kmin, o.kmax, &memo);
    const LimitReport rep = limit_check(rows, o.q, labels, &memo);

    Output out;
    out.json = with_schema();
    out.json["q"] = o.q;
    out.json["labels"] = Json::array({pair_json(labels[0]), pair_json(labels[1]), pair_json(labels[2])});
    Json jrows = Json::array();
    out.table.header = {"k", "c_k", "h1", "h2", "h3", "allowed", "null_coeff", "|c_k-c|", "|h1-h|", "|h2-h|",
                        "|h3-h|", "|null-lim|"};
    for (size_t r = 0; r < rows.size(); ++r) {
        Json jr = to_json(rows[r]);
        jr["c_gap"] = rational_to_json(rep.c_gap[r]);
        jr["h_gap"] = Json::array({rational_to_json(rep.h_gap[0][r]), rational_to_json(rep.h_gap[1][r]),
                                   rational_to_json(rep.h_gap[2][r])});
        jr["null_gap"] = rational_to_json(rep.null_gap[r]);
        jrows.push_back(jr);
        out.table.rows.push_back({std::to_string(rows[r].k), rows[r].c_k.to_string(), rows[r].h_k[0].to_string(),
                                  rows[r].h_k[1].to_string(), rows[r].h_k[2].to_string(),
                                  rows[r].fusion_allowed ? "yes" : "no", rows[r].slot1_null_coeff.to_string(),
                                  rep.c_gap[r].to_string(), rep.h_gap[0][r].to_string(), rep.h_gap[1][r].to_string(),
                                  rep.h_gap[2][r].to_string(), rep.null_gap[r].to_string()});
    }
    out.json["rows"] = jrows;
    out.json["limit"] = {{"c", rational_to_json(rep.c_limit)},
                         {"h", Json::array({rational_to_json(rep.h_limit[0]), rational_to_json(rep.h_limit[1]),
                                            rational_to_json(rep.h_limit[2])})},
                         {"slot1_null_coeff", rational_to_json(rep.null_limit)},
                         {"fusion_c1q", rep.fusion_oracle},
                         {"fusion_eventual", rep.fusion_eventual},
                         {"fusion_matches", rep.fusion_matches_oracle},
                         {"c_gap_strictly_decreasing", rep.c_gap_strictly_decreasing},
                         {"h_gap_monotone", Json::array({rep.h_gap_monotone[0], rep.h_gap_monotone[1],
                                                         rep.h_gap_monotone[2]})},
                         {"null_gap_monotone", rep.null_gap_monotone}};
    out.notes.push_back("limit: c = " + rep.c_limit.to_string() + ", h = (" + rep.h_limit[0].to_string() + ", "
                        + rep.h_limit[1].to_string() + ", " + rep.h_limit[2].to_string()
                        + "), null coeff = " + rep.null_limit.to_string());
    out.notes.push_back(std::string("fusion: eventual ") + (rep.fusion_eventual ? "1" : "0") + ", fusion_c1q "
                        + std::to_string(rep.fusion_oracle) + (rep.fusion_matches_oracle ? " (match)" : " (MISMATCH)"));
    return out;
}

Output cmd_verify(const Options& o, SingularMemo& memo)
{
    if (o.qmax < 1 || o.verify_imax < 1 || o.h3_imax < 1)
        throw UsageError("--qmax/--imax/--h3-imax: must be positive");
    const CrossValidationReport cv = cross_validate(o.qmax, o.verify_imax, &memo);
    const EquivalenceSweep sweep = equivalence_sweep(o.qmax, o.verify_imax, o.h3_imax);

    Output out;
    out.json = with_schema();
    Json dis = Json::array();
    out.table.header = {"q", "w1", "w2", "w3", "closed_form", "fz_bound", "decoupling", "witness_outside_box"};
    for (const auto& d : cv.disagreements) {
        dis.push_back({{"q", d.q},
                       {"w1", pair_json(d.w1)},
                       {"w2", pair_json(d.w2)},
                       {"w3", pair_json(d.w3)},
                       {"closed_form", d.closed_form},
                       {"fz_bound", d.fz_bound},
                       {"decoupling", d.decoupling},
                       {"witness_outside_box", d.witness_outside_box}});
        out.table.rows.push_back({std::to_string(d.q), pair_string(d.w1), pair_string(d.w2), pair_string(d.w3),
                                  std::to_string(d.closed_form), std::to_string(d.fz_bound),
                                  d.decoupling ? "1" : "0", d.witness_outside_box ? "yes" : "no"});
    }
    Json cex = Json::array();
    for (const auto& c : sweep.counterexamples)
        cex.push_back({{"q", c.q}, {"i1", c.i1}, {"s1", c.s1}, {"i2", c.i2}, {"s2", c.s2},
                       {"h3", rational_to_json(c.h3)}});
    out.json["cross_validate"] = {{"q_max", o.qmax}, {"i_max", o.verify_imax}, {"triples", cv.triples},
                                  {"disagreements", dis}};
    out.json["equivalence"] = {{"q_max", o.qmax}, {"label_max", o.verify_imax}, {"h3_i_max", o.h3_imax},
                               {"checked", sweep.checked}, {"counterexamples", cex}};
    const bool ok = cv.disagreements.empty() && sweep.counterexamples.empty();
    out.json["status"] = ok ? "ok" : "disagreement";
    out.notes.push_back("cross_validate: " + std::to_string(cv.triples) + " triples, "
                        + std::to_string(cv.disagreements.size()) + " disagreements");
    out.notes.push_back("equivalence sweep: " + std::to_string(sweep.checked) + " cases, "
                        + std::to_string(sweep.counterexamples.size()) + " counterexamples");
    if (cv.disagreements.empty())
        out.table = {};
    out.exit_code = ok ? kExitOk : kExitDisagreement;
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    Options o;
    CLI::App app{"Exact Virasoro fusion rules", "virfusion"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache", o.cache_path, "Singular vector cache file");
    app.add_option("--seed", o.seed, "Accepted and ignored; all computations are deterministic");
    app.add_flag("--verbose", o.verbose, "Print cache and timing statistics to stderr");

    auto* weights = app.add_subcommand("weights", "Central charge and Kac weight table");
    weights->add_option("--p", o.p, "p (1 for the c_{1,q} series)")->capture_default_str();
    weights->add_option("--q", o.q, "q")->required();
    weights->add_option("--imax", o.imax, "Largest i listed for p = 1")->capture_default_str();

    auto* singular = app.add_subcommand("singular", "Singular vector of M(c,h) at a given level");
    singular->add_option("--c", o.c, "Central charge p/q")->required();
    singular->add_option("--h", o.h, "Highest weight p/q")->required();
    singular->add_option("--level", o.level, "Grade")->required();

    auto* zhu = app.add_subcommand("zhu-image", "Zhu bimodule images of the singular generators");
    zhu->add_option("--p", o.p, "p (1 for the c_{1,q} series)")->capture_default_str();
    zhu->add_option("--q", o.q, "q")->required();
    zhu->add_option("--label", o.label, "Label i,s (or r,s)")->required();

    auto* fusion = app.add_subcommand("fusion", "Fusion rule N^{w3}_{w1,w2}");
    fusion->add_option("--p", o.p, "p (1 for the c_{1,q} series)")->capture_default_str();
    fusion->add_option("--q", o.q, "q")->required();
    fusion->add_option("--w1", o.w1, "Label i,s")->required();
    fusion->add_option("--w2", o.w2, "Label i,s");
    fusion->add_option("--w3", o.w3, "Label i,s");
    fusion->add_option("--verma-h2", o.verma_h2, "Weight of an irreducible Verma module in slot 2");
    fusion->add_option("--verma-h3", o.verma_h3, "Weight of an irreducible Verma module in slot 3");

    auto* product = app.add_subcommand("fusion-product", "Fusion product of two c_{1,q} irreducibles");
    product->add_option("--q", o.q, "q")->required();
    product->add_option("--w1", o.w1, "Label i,s")->required();
    product->add_option("--w2", o.w2, "Label i,s")->required();

    auto* threept = app.add_subcommand("threept", "Three-point coefficient of a descendant insertion");
    threept->add_option("--p", o.p, "p (1 for the c_{1,q} series)")->capture_default_str();
    threept->add_option("--q", o.q, "q")->required();
    threept->add_option("--w1", o.w1, "Label i,s")->required();
    threept->add_option("--w2", o.w2, "Label i,s")->required();
    threept->add_option("--w3", o.w3, "Label i,s")->required();
    threept->add_option("--slot", o.slot, "Slot 1, 2 or 3")->capture_default_str();
    threept->add_option("--partition", o.partition, "Insert this PBW monomial instead of the singular generator");

    auto* limit = app.add_subcommand("limit", "Minimal models c_{k,kq-1} approaching c_{1,q}");
    limit->add_option("--q", o.q, "q")->required();
    limit->add_option("--w1", o.w1, "Label i,s")->required();
    limit->add_option("--w2", o.w2, "Label i,s")->required();
    limit->add_option("--w3", o.w3, "Label i,s")->required();
    limit->add_option("--kmin", o.kmin, "First k")->required();
    limit->add_option("--kmax", o.kmax, "Last k")->required();

    auto* verify = app.add_subcommand("verify", "Cross-validate the fusion routes and the P^2 equivalence");
    verify->add_option("--qmax", o.qmax, "Largest q")->capture_default_str();
    verify->add_option("--imax", o.verify_imax, "Largest label entry")->capture_default_str();
    verify->add_option("--h3-imax", o.h3_imax, "Largest i for h3 in the equivalence sweep")->capture_default_str();

    std::vector<std::string> argv_storage{"virfusion"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    SingularMemo memo;
    bool cache_usable = !o.cache_path.empty();
    std::size_t preloaded = 0;
    if (cache_usable) {
        try {
            preloaded = preload_memo(memo, read_cache(o.cache_path));
        } catch (const CacheError& e) {
            err << "warning: ignoring cache: " << e.what() << '\n';
            cache_usable = false;
        }
    }

    Output result;
    try {
        if (app.got_subcommand(weights))
            result = cmd_weights(o);
        else if (app.got_subcommand(singular))
            result = cmd_singular(o, memo);
        else if (app.got_subcommand(zhu))
            result = cmd_zhu_image(o, memo);
        else if (app.got_subcommand(fusion))
            result = cmd_fusion(o);
        else if (app.got_subcommand(product))
            result = cmd_fusion_product(o);
        else if (app.got_subcommand(threept))
            result = cmd_threept(o, memo);
        else if (app.got_subcommand(limit))
            result = cmd_limit(o, memo);
        else
            result = cmd_verify(o, memo);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    if (o.format == "json")
        out << result.json.dump() << '\n';
    else if (o.format == "csv")
        render_csv(result.table, out);
    else
        render_text(result, out);

    if (cache_usable) {
        try {
            merge_cache(o.cache_path, cache_entries_from_memo(memo));
        } catch (const CacheError& e) {
            err << "warning: cache not updated: " << e.what() << '\n';
        }
    }
    if (o.verbose) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        err << "cache: preloaded=" << preloaded << " hits=" << memo.hits() << " solver_calls=" << memo.misses()
            << " elapsed_ms=" << ms.count() << '\n';
    }
    return result.exit_code;
}

} // namespace virfusion::cli
