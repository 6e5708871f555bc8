#include "tables.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hecke {

const std::vector<GoldenRow>& golden_rows(long N) {
    static const std::vector<GoldenRow> n7 = {
        {11, 1, -1, 3, 1, ""},
        {23, 1, -1, 6, 1, ""},
        {23, 13, -17, 6, -1, ""},
        {23, 13, 17, 6, -1, ""},
        {43, 1, -1, 11, -1, ""},
        {67, 1, -1, 17, 1, ""},
        {71, 1, -1, 18, -1, ""},
        {71, 19, 9, 2, -1, ""},
        {71, 19, -9, 2, -1, ""},
        {71, 29, 33, 10, 1, ""},
        {71, 29, -33, 10, 1, ""},
        {71, 43, 141, 116, -1, ""},
        {71, 43, -141, 116, -1, ""},
    };
    static const std::vector<GoldenRow> n11 = {
        {23, 1, -1, 6, 2, "I1"},
        {23, 13, -17, 6, 0, "O"},
        {23, 13, 17, 6, 0, "O"},
        {31, 1, -1, 8, -2, "I1"},
        {31, 5, 17, 16, 0, "O"},
        {31, 5, -17, 16, 0, "O"},
        {47, 1, -1, 12, 0, "O"},
        {47, 7, -17, 12, 2, "I1"},
        {47, 7, 17, 12, 2, "I1"},
        {47, 17, -53, 42, 0, "O"},
        {47, 17, 53, 42, 0, "O"},
    };
    static const std::vector<GoldenRow> n163 = {
        {151, 1, -1, 38, 20, "I2"},
        {151, 29, 9, 2, 14, "I8"},
        {151, 29, -9, 2, 14, "I8"},
        {151, 11, -5, 4, 8, "I13"},
        {151, 11, 5, 4, 8, "I14"},
        {151, 43, 137, 110, 4, "I12"},
        {151, 43, -137, 110, 4, "I12"},
        {167, 1, -1, 42, 0, "I1"},
        {167, 157, 33, 2, -20, "I2"},
        {167, 157, -33, 2, -20, "I2"},
        {167, 61, 65, 18, -2, "I4"},
        {167, 61, -65, 18, -2, "I3"},
        {167, 29, 93, 76, -10, "I6"},
        {167, 29, -93, 76, -10, "I5"},
        {167, 127, -177, 62, -14, "I7"},
        {167, 127, 177, 62, -14, "I8"},
        {167, 19, -21, 8, -12, "I9"},
        {167, 19, 21, 8, -12, "I10"},
        {179, 1, -1, 45, 0, "I1"},
        {179, 19, 45, 29, 2, "I3"},
        {179, 19, -45, 29, 2, "I4"},
        {179, 13, 17, 9, 4, "I12"},
        {179, 13, -17, 9, 4, "I11"},
        {199, 1, -1, 50, 0, "I1"},
        {199, 31, -69, 40, -20, "I2"},
        {199, 31, 69, 40, -20, "I2"},
        {199, 43, -133, 104, -4, "I12"},
        {199, 43, 133, 104, -4, "I11"},
        {199, 13, 29, 20, -14, "I8"},
        {199, 13, -29, 20, -14, "I7"},
        {199, 131, 453, 392, -8, "I14"},
        {199, 131, -453, 392, -8, "I13"},
    };
    static const std::vector<GoldenRow> empty;
    switch (N) {
        case -7: return n7;
        case -11: return n11;
        case -163: return n163;
        default: return empty;
    }
}

std::vector<Int> golden_d_list(long N) {
    std::vector<Int> out;
    for (const auto& row : golden_rows(N)) {
        Int d(row.absD);
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

const GoldenStructure& golden_structure(long N) {
    static const GoldenStructure s7{-7, 1, 1, {{""}}};
    static const GoldenStructure s11{-11, 2, 2, {{"O"}, {"I1"}}};
    static const GoldenStructure s163{
        -163, 14, 8,
        {{"I1"}, {"I2"}, {"I3", "I4"}, {"I5", "I6"}, {"I7", "I8"}, {"I9", "I10"},
         {"I11", "I12"}, {"I13", "I14"}}};
    switch (N) {
        case -11: return s11;
        case -163: return s163;
        default: return s7;
    }
}

const std::vector<std::pair<long, Rat>>& golden_hurwitz() {
    static const std::vector<std::pair<long, Rat>> t = {
        {3, Rat(1, 3)}, {4, Rat(1, 2)}, {7, Rat(1)},     {8, Rat(1)},
        {11, Rat(1)},   {12, Rat(4, 3)}, {15, Rat(2)},   {16, Rat(3, 2)},
    };
    return t;
}

namespace {

// published label -> id of its pair group
std::map<std::string, int> golden_group_of(long N) {
    std::map<std::string, int> g;
    const auto& st = golden_structure(N);
    for (int i = 0; i < int(st.label_groups.size()); ++i)
        for (const auto& l : st.label_groups[size_t(i)]) g[l] = i;
    return g;
}

}  // namespace

GoldenCheck check_against_golden(long N, const std::vector<CentralValueReport>& reports,
                                 const QuatBundle& bundle) {
    GoldenCheck out;
    const auto& rows = golden_rows(N);
    if (rows.empty()) {
        out.fail("no golden data for this N");
        return out;
    }
    std::map<Int, const CentralValueReport*> by_d;
    for (const auto& rep : reports) by_d[rep.absD] = &rep;

    auto ggroup = golden_group_of(N);
    // golden pair-group id -> our type-group id, fixed across all D
    std::map<int, int> group_map;
    // golden singleton label -> our class label, fixed across all D
    std::map<std::string, std::string> singleton_map;

    std::map<Int, int> sign_of_d;  // +1/-1 once the first nonzero row is seen

    for (const auto& gr : rows) {
        Int d(gr.absD);
        auto it = by_d.find(d);
        if (it == by_d.end()) {
            out.fail("missing report for D=" + d.str());
            continue;
        }
        const CentralValueReport& rep = *it->second;
        QuadForm reduced = reduce_form(QuadForm(Int(gr.fa), Int(gr.fb), Int(gr.fc))).form;
        const TableRow* row = nullptr;
        for (const auto& r : rep.rows)
            if (r.form == reduced) { row = &r; break; }
        if (!row) {
            out.fail("D=" + d.str() + ": no row for published form [" + std::to_string(gr.fa) +
                     "," + std::to_string(gr.fb) + "," + std::to_string(gr.fc) + "]");
            continue;
        }
        // value match up to one global sign per D
        if (abs(row->n) != Int(std::abs(gr.n))) {
            out.fail("D=" + d.str() + " form " + reduced.str() + ": |n|=" + abs(row->n).str() +
                     " expected " + std::to_string(std::abs(gr.n)));
            continue;
        }
        if (gr.n != 0) {
            int s = (Int(gr.n) == row->n) ? 1 : -1;
            auto [pos, inserted] = sign_of_d.emplace(d, s);
            if (!inserted && pos->second != s) {
                out.fail("D=" + d.str() + ": sign flip within one D at form " + reduced.str());
            }
        }
        // class association, pinned for the principal class, pair-level otherwise
        if (std::string(gr.label).empty()) continue;  // class number one
        int our_class = -1;
        for (int c = 0; c < bundle.classes.size(); ++c)
            if (bundle.classes.labels[size_t(c)] == row->class_label) our_class = c;
        if (our_class < 0) {
            out.fail("D=" + d.str() + ": unknown class label " + row->class_label);
            continue;
        }
        std::string glabel(gr.label);
        bool golden_principal = (glabel == "O") || (N == -163 && glabel == "I1");
        if (golden_principal) {
            if (our_class != 0)
                out.fail("D=" + d.str() + " form " + reduced.str() +
                         ": published principal class landed in " + row->class_label);
            continue;
        }
        int ggid = ggroup.at(glabel);
        int ourgid = bundle.classes.type_index[size_t(our_class)];
        size_t gsize = golden_structure(N).label_groups[size_t(ggid)].size();
        size_t osize = bundle.classes.type_groups[size_t(ourgid)].size();
        if (gsize != osize) {
            out.fail("D=" + d.str() + " form " + reduced.str() + ": published label " + glabel +
                     " (group size " + std::to_string(gsize) + ") landed in a type group of size " +
                     std::to_string(osize));
            continue;
        }
        if (gsize == 1) {
            auto [pos, inserted] = singleton_map.emplace(glabel, row->class_label);
            if (!inserted && pos->second != row->class_label)
                out.fail("singleton label " + glabel + " maps to both " + pos->second + " and " +
                         row->class_label);
        }
        auto [pos, inserted] = group_map.emplace(ggid, ourgid);
        if (!inserted && pos->second != ourgid)
            out.fail("published pair of " + glabel + " maps to two different type groups");
    }
    // the group map must be injective
    std::set<int> images;
    for (const auto& [g, o] : group_map) {
        if (!images.insert(o).second) out.fail("two published pairs map to one type group");
    }
    return out;
}

}  // namespace hecke
