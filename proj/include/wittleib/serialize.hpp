#pragma once

// Machine-readable output.  nlohmann::json with std::map-backed objects keeps
// keys sorted, so identical inputs serialize byte-identically.

#include "wittleib/cohomology.hpp"
#include "wittleib/gamma_solver.hpp"
#include "wittleib/verifier.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace wittleib {

using json = nlohmann::json;

template <class Tag>
json element_json(const SparseElement<Tag>& e) {
    json obj = json::object();
    for (const auto& [i, c] : e.terms())
        obj[std::to_string(i)] = to_string(c);
    return obj;
}

inline json element_json(const LeibnizElement& e) {
    return json{{"witt", element_json(e.witt)}, {"module", element_json(e.module)}};
}

inline json window_json(const IndexWindow& w) { return json{{"lo", w.lo}, {"hi", w.hi}}; }

inline json table_descriptor(const StructureTable& t) {
    return json{{"family", to_string(t.family())},
                {"alpha", to_string(t.params().alpha)},
                {"beta", to_string(t.params().beta)},
                {"normalization", to_string(t.normalization())}};
}

inline json report_json(const VerificationReport& rep, const json& table = json()) {
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back(json{{"kind", f.kind},
                                {"indices", {f.indices[0], f.indices[1], f.indices[2]}},
                                {"defect", element_json(f.defect)}});
    json out{{"window", window_json(rep.window)},
             {"kinds", rep.kinds},
             {"triples_checked", rep.triples_checked},
             {"failures", failures}};
    out["table"] = table.is_null() ? json(rep.subject) : table;
    return out;
}

inline json solver_json(const GammaSystem& sys, const SolutionSpace& sol, int gauge_dim,
                    int quotient_dim) {
    json basis = json::array();
    for (const auto& vec : sol.basis) {
        json bv = json::array();
        for (const auto& [c, val] : vec) {
            const GammaLabel& l = sys.unknowns[static_cast<std::size_t>(c)];
            json coord;
            if (sys.mode == SolverMode::full)
                coord["gamma"] = {l.i, l.j, l.k};
            else
                coord["gamma"] = {l.i, l.j};
            coord["value"] = to_string(val);
            bv.push_back(std::move(coord));
        }
        basis.push_back(std::move(bv));
    }
    json out{{"mode", sys.mode == SolverMode::full ? "full" : "reduced"},
             {"alpha", to_string(sys.alpha)},
             {"beta", to_string(sys.beta)},
             {"window", window_json(sys.window)},
             {"unknowns", sys.unknowns.size()},
             {"rank", sol.rank},
             {"nullity", sol.nullity},
             {"gauge_dim", gauge_dim},
             {"quotient_dim", quotient_dim},
             {"basis", basis}};
    if (sys.mode == SolverMode::full)
        out["module_window"] = window_json(sys.module_window);
    return out;
}

inline json cohomology_json(const CohomologyReport& rep) {
    return json{{"degree", rep.degree},         {"weight", rep.weight},
                {"window", window_json(rep.window)}, {"cocycle_dim", rep.cocycle_dim},
                {"coboundary_dim", rep.coboundary_dim}, {"h_dim", rep.h_dim}};
}

// One multiplication-table record per basis pair (d_i, d_j).
struct TableRecord {
    Index i, j;
    Index witt_index;
    Scalar witt_coeff;
    bool has_module;  // false for tables without module corrections
    Index module_index;
    Scalar module_coeff;
};

inline std::vector<TableRecord> table_records(const StructureTable& t, const IndexWindow& w) {
    std::vector<TableRecord> recs;
    const bool resonant = t.family() != FamilyId::thm1 && t.family() != FamilyId::i;
    for (Index i = w.lo; i <= w.hi; ++i)
        for (Index j = w.lo; j <= w.hi; ++j) {
            TableRecord r{i, j, i + j, Scalar(i - j), false, 0, Scalar(0)};
            if (resonant) {
                r.has_module = true;
                r.module_index = i + j - t.alpha_index();
                r.module_coeff = gamma_of(t, i, j);
            }
            recs.push_back(std::move(r));
        }
    return recs;
}

inline json records_json(const std::vector<TableRecord>& recs) {
    json arr = json::array();
    for (const auto& r : recs) {
        json rec{{"i", r.i},
                 {"j", r.j},
                 {"witt_index", r.witt_index},
                 {"witt_coeff", to_string(r.witt_coeff)}};
        if (r.has_module) {
            rec["module_index"] = r.module_index;
            rec["module_coeff"] = to_string(r.module_coeff);
        } else {
            rec["module_index"] = nullptr;
            rec["module_coeff"] = "0";
        }
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline std::string to_csv(const std::vector<TableRecord>& recs) {
    std::ostringstream os;
    os << "i,j,witt_index,witt_coeff,module_index,module_coeff\n";
    for (const auto& r : recs) {
        os << r.i << ',' << r.j << ',' << r.witt_index << ',' << to_string(r.witt_coeff) << ',';
        if (r.has_module)
            os << r.module_index;
        os << ',' << (r.has_module ? to_string(r.module_coeff) : "0") << '\n';
    }
    return os.str();
}

inline std::string to_latex(const std::vector<TableRecord>& recs) {
    std::ostringstream os;
    os << "\\begin{tabular}{rrrrrr}\n"
       << "$i$ & $j$ & witt index & witt coeff & module index & module coeff \\\\\n\\hline\n";
    for (const auto& r : recs) {
        os << r.i << " & " << r.j << " & " << r.witt_index << " & $" << to_string(r.witt_coeff)
           << "$ & ";
        if (r.has_module)
            os << r.module_index;
        else
            os << "--";
        os << " & $" << (r.has_module ? to_string(r.module_coeff) : "0") << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace wittleib
