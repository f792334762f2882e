#include "kh3/render.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace kh3 {

namespace {

using nlohmann::json;

struct Grid {
    int i_lo, i_hi, j_lo, j_hi;
};

std::string render_grid(const HomologyTable& t, const Grid& g, const PartialTable* region) {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> body;
    for (int i = g.i_lo; i <= g.i_hi; ++i) headers.push_back(std::to_string(i));

    for (int j = g.j_hi; j >= g.j_lo; j -= 2) {
        std::vector<std::string> row;
        row.push_back(std::to_string(j));
        for (int i = g.i_lo; i <= g.i_hi; ++i) {
            const AbelianGroup grp = t.group(i, j);
            std::string cell;
            if (region && !region->determined(i, j))
                cell = region->unknown_label ? std::string(1, region->unknown_label) : "?";
            else if (!grp.trivial())
                cell = render_group(grp);
            row.push_back(cell);
        }
        body.push_back(std::move(row));
    }

    std::vector<size_t> colw(headers.size() + 1, 3);
    colw[0] = 4;
    for (size_t c = 0; c < headers.size(); ++c)
        colw[c + 1] = std::max(colw[c + 1], headers[c].size());
    for (const auto& row : body)
        for (size_t c = 0; c < row.size(); ++c) colw[c] = std::max(colw[c], row[c].size());

    std::ostringstream out;
    auto pad = [&](const std::string& s, size_t w) {
        out << s;
        for (size_t k = s.size(); k < w; ++k) out << ' ';
    };
    pad("j\\i", colw[0]);
    for (size_t c = 0; c < headers.size(); ++c) {
        out << " | ";
        pad(headers[c], colw[c + 1]);
    }
    out << '\n';
    for (size_t c = 0; c <= headers.size(); ++c) {
        if (c) out << "-+-";
        for (size_t k = 0; k < colw[c]; ++k) out << '-';
    }
    out << '\n';
    for (const auto& row : body) {
        pad(row[0], colw[0]);
        for (size_t c = 1; c < row.size(); ++c) {
            out << " | ";
            pad(row[c], colw[c]);
        }
        out << '\n';
    }
    return out.str();
}

Grid grid_of(const HomologyTable& t) {
    Grid g{0, 0, 0, 0};
    bool first = true;
    for (const auto& [cell, grp] : t.cells) {
        const auto [i, j] = cell;
        if (first) {
            g = {std::min(0, i), i, j, j};
            first = false;
        }
        g.i_lo = std::min(g.i_lo, i);
        g.i_hi = std::max(g.i_hi, i);
        g.j_lo = std::min(g.j_lo, j);
        g.j_hi = std::max(g.j_hi, j);
    }
    return g;
}

json cells_to_json(const HomologyTable& t) {
    json cells = json::array();
    for (const auto& [cell, g] : t.cells) {
        json torsion = json::array();
        for (const auto& f : g.torsion) torsion.push_back(f.str());
        cells.push_back(
            {{"i", cell.first}, {"j", cell.second}, {"rank", g.free_rank}, {"torsion", torsion}});
    }
    return cells;
}

HomologyTable cells_from_json(const json& cells) {
    HomologyTable t;
    for (const auto& c : cells) {
        AbelianGroup g;
        g.free_rank = c.at("rank").get<long long>();
        for (const auto& f : c.at("torsion")) g.torsion.push_back(BigInt(f.get<std::string>()));
        t.set(c.at("i").get<int>(), c.at("j").get<int>(), std::move(g));
    }
    return t;
}

}  // namespace

std::string render_table(const HomologyTable& t) {
    if (t.cells.empty()) return "(trivial)\n";
    return render_grid(t, grid_of(t), nullptr);
}

std::string render_partial(const PartialTable& t) {
    Grid g = grid_of(t.table);
    if (t.table.cells.empty()) g = {0, 0, t.j_low, t.j_low};
    g.j_lo = std::min(g.j_lo, t.j_low);
    if (!t.complete) {
        // show one extra column and row of the residual block
        g.i_hi = std::max(g.i_hi, t.i_max) + 1;
        g.j_hi = std::max(g.j_hi, t.j_max) + 2;
    }
    return render_grid(t.table, g, t.complete ? nullptr : &t);
}

std::string nf_to_json(const NormalForm3& nf) {
    json j{{"schema_version", kSchemaVersion},
           {"kind", "normal_form"},
           {"p", nf.p},
           {"first", nf.first_gen},
           {"exponents", nf.exponents}};
    return j.dump();
}

NormalForm3 nf_from_json(const std::string& text) {
    const json j = json::parse(text);
    NormalForm3 nf;
    nf.p = j.at("p").get<long long>();
    nf.first_gen = j.at("first").get<int>();
    nf.exponents = j.at("exponents").get<std::vector<long long>>();
    return nf;
}

std::string table_to_json(const HomologyTable& t) {
    json j{{"schema_version", kSchemaVersion},
           {"kind", "homology_table"},
           {"cells", cells_to_json(t)}};
    return j.dump();
}

HomologyTable table_from_json(const std::string& text) {
    const json j = json::parse(text);
    return cells_from_json(j.at("cells"));
}

std::string partial_to_json(const PartialTable& t) {
    json j{{"schema_version", kSchemaVersion},
           {"kind", "partial_table"},
           {"complete", t.complete},
           {"i_max", t.i_max},
           {"j_low", t.j_low},
           {"j_max", t.j_max},
           {"unknown", t.unknown_label ? std::string(1, t.unknown_label) : std::string()},
           {"cells", cells_to_json(t.table)}};
    return j.dump();
}

PartialTable partial_from_json(const std::string& text) {
    const json j = json::parse(text);
    PartialTable t;
    t.table = cells_from_json(j.at("cells"));
    t.complete = j.at("complete").get<bool>();
    t.i_max = j.at("i_max").get<int>();
    t.j_low = j.at("j_low").get<int>();
    t.j_max = j.at("j_max").get<int>();
    const std::string label = j.at("unknown").get<std::string>();
    t.unknown_label = label.empty() ? 0 : label[0];
    return t;
}

std::string code_to_json(const RationalCode& code) {
    json j{{"schema_version", kSchemaVersion}, {"kind", "rational_code"}, {"entries", code.entries}};
    return j.dump();
}

RationalCode code_from_json(const std::string& text) {
    const json j = json::parse(text);
    return RationalCode{j.at("entries").get<std::vector<long long>>()};
}

}  // namespace kh3
